//! Transit functions on finite ground sets, the betweenness axioms they may
//! satisfy, and the graph classes those axioms characterize.

pub mod axioms;
pub mod claims;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod recognize;
pub mod set;
pub mod transit;

pub use axioms::{check_axiom, check_profile, implication_check, AxiomId, AxiomProfile, AxiomResult, ImplicationVerdict, Witness};
pub use error::{Error, Result};
pub use graph::Graph;
pub use set::VertexSet;
pub use transit::{induced_path_function, interval_function, TransitFunction};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/transit-functions.md")]
    struct TransitFunctions;
    #[doc = include_str!("../../../book/src/axioms.md")]
    struct Axioms;
    #[doc = include_str!("../../../book/src/graph-classes.md")]
    struct GraphClasses;
    #[doc = include_str!("../../../book/src/claims.md")]
    struct Claims;
    #[doc = include_str!("../../../book/src/fixtures.md")]
    struct Fixtures;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
    #[doc = include_str!("../../../book/src/bridged.md")]
    struct Bridged;
}
