//! Exhaustive evaluation of the betweenness axioms on a transit function.
//!
//! Every axiom is a universally quantified statement over a few vertex
//! variables. [`check_axiom`] sweeps all assignments in lexicographic order of
//! the variables as listed by [`AxiomId::variables`] and stops at the first
//! falsifying one, so a reported [`Witness`] is always the smallest
//! counterexample.
//!
//! Quantifier domains: `(J0)` and `(J0')` range over pairwise distinct
//! `u, x, y, v`; `(J2')` and `(J3)` require `x != y`; all other axioms range
//! over every assignment. Under `(t1)` and `(t3)` the excluded degenerate
//! tuples of `(J2')` and `(J0')` would otherwise collapse those axioms into
//! `(J2)` and into a statement that fails on every edge.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::transit::TransitFunction;

/// Largest ground set accepted by [`check_profile`].
pub const PROFILE_MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    T1,
    T2,
    T3,
    B1,
    B2,
    B3,
    B4,
    J0,
    J0Prime,
    J1,
    J2,
    J2Prime,
    J3,
    J3Prime,
}

/// Which variables of an axiom must take distinct values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    Any,
    AllDistinct,
    /// The 4-variable `(u, x, y, v)` axioms with only `x != y`.
    XNotY,
}

impl AxiomId {
    pub const ALL: [AxiomId; 14] = [
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::T3,
        AxiomId::B1,
        AxiomId::B2,
        AxiomId::B3,
        AxiomId::B4,
        AxiomId::J0,
        AxiomId::J0Prime,
        AxiomId::J1,
        AxiomId::J2,
        AxiomId::J2Prime,
        AxiomId::J3,
        AxiomId::J3Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::T1 => "t1",
            AxiomId::T2 => "t2",
            AxiomId::T3 => "t3",
            AxiomId::B1 => "b1",
            AxiomId::B2 => "b2",
            AxiomId::B3 => "b3",
            AxiomId::B4 => "b4",
            AxiomId::J0 => "J0",
            AxiomId::J0Prime => "J0'",
            AxiomId::J1 => "J1",
            AxiomId::J2 => "J2",
            AxiomId::J2Prime => "J2'",
            AxiomId::J3 => "J3",
            AxiomId::J3Prime => "J3'",
        }
    }

    /// Quantified variables, in sweep order.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            AxiomId::T1 | AxiomId::T2 => &["u", "v"],
            AxiomId::T3 => &["u"],
            AxiomId::B1 | AxiomId::B4 => &["u", "v", "x"],
            AxiomId::B2 | AxiomId::B3 => &["u", "v", "x", "y"],
            AxiomId::J1 => &["u", "v", "w"],
            AxiomId::J2 => &["u", "x", "v"],
            AxiomId::J0
            | AxiomId::J0Prime
            | AxiomId::J2Prime
            | AxiomId::J3
            | AxiomId::J3Prime => &["u", "x", "y", "v"],
        }
    }

    /// Formula in plain text, for reports.
    pub fn statement(self) -> &'static str {
        match self {
            AxiomId::T1 => "u in R(u,v)",
            AxiomId::T2 => "R(u,v) = R(v,u)",
            AxiomId::T3 => "R(u,u) = {u}",
            AxiomId::B1 => "x in R(u,v), x != v => v not in R(u,x)",
            AxiomId::B2 => "x in R(u,v), y in R(u,x) => y in R(u,v)",
            AxiomId::B3 => "x in R(u,v), y in R(u,x) => x in R(y,v)",
            AxiomId::B4 => "x in R(u,v) => R(u,x) & R(x,v) = {x}",
            AxiomId::J0 => "u,x,y,v distinct, x in R(u,y), y in R(x,v) => x in R(u,v)",
            AxiomId::J0Prime => {
                "u,x,y,v distinct, x in R(u,y), y in R(x,v), R(u,y) & R(x,v) <= {u,x,y,v} => x in R(u,v)"
            }
            AxiomId::J1 => {
                "w in R(u,v), w != u,v => exists u1 in R(u,w)-R(v,w), v1 in R(v,w)-R(u,w) with \
                 R(u1,w) = {u1,w}, R(v1,w) = {v1,w}, w in R(u1,v1)"
            }
            AxiomId::J2 => "R(u,x) = {u,x}, R(x,v) = {x,v}, R(u,v) != {u,v} => x in R(u,v)",
            AxiomId::J2Prime => {
                "x != y, x in R(u,y), y in R(x,v), R(u,x) = {u,x}, R(x,y) = {x,y}, R(y,v) = {y,v}, \
                 R(u,v) != {u,v} => x in R(u,v)"
            }
            AxiomId::J3 => "x != y, x in R(u,y), y in R(x,v), R(u,v) != {u,v} => x in R(u,v)",
            AxiomId::J3Prime => {
                "x in R(u,y), y in R(x,v), R(x,y) != {x,y}, R(u,v) != {u,v} => x in R(u,v)"
            }
        }
    }

    fn domain(self) -> Domain {
        match self {
            AxiomId::J0 | AxiomId::J0Prime => Domain::AllDistinct,
            AxiomId::J2Prime | AxiomId::J3 => Domain::XNotY,
            _ => Domain::Any,
        }
    }

    fn in_domain(self, vals: &[usize]) -> bool {
        match self.domain() {
            Domain::Any => true,
            Domain::XNotY => vals[1] != vals[2],
            Domain::AllDistinct => {
                (0..vals.len()).all(|i| ((i + 1)..vals.len()).all(|j| vals[i] != vals[j]))
            }
        }
    }

    /// Does the instance of the axiom at `vals` hold? `vals` follows
    /// [`AxiomId::variables`] and must lie in the quantifier domain.
    fn instance_holds(self, r: &TransitFunction, vals: &[usize]) -> bool {
        let inr = |w: usize, a: usize, b: usize| r.get(a, b).contains(w);
        match self {
            AxiomId::T1 => inr(vals[0], vals[0], vals[1]),
            AxiomId::T2 => r.get(vals[0], vals[1]) == r.get(vals[1], vals[0]),
            AxiomId::T3 => r.get(vals[0], vals[0]) == VertexSet::singleton(vals[0]),
            AxiomId::B1 => {
                let [u, v, x] = [vals[0], vals[1], vals[2]];
                !(inr(x, u, v) && x != v) || !inr(v, u, x)
            }
            AxiomId::B2 => {
                let [u, v, x, y] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, v) && inr(y, u, x)) || inr(y, u, v)
            }
            AxiomId::B3 => {
                let [u, v, x, y] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, v) && inr(y, u, x)) || inr(x, y, v)
            }
            AxiomId::B4 => {
                let [u, v, x] = [vals[0], vals[1], vals[2]];
                !inr(x, u, v) || r.get(u, x) & r.get(x, v) == VertexSet::singleton(x)
            }
            AxiomId::J0 => {
                let [u, x, y, v] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, y) && inr(y, x, v)) || inr(x, u, v)
            }
            AxiomId::J0Prime => {
                let [u, x, y, v] = [vals[0], vals[1], vals[2], vals[3]];
                let four: VertexSet = [u, x, y, v].into_iter().collect();
                !(inr(x, u, y) && inr(y, x, v) && (r.get(u, y) & r.get(x, v)).is_subset(four))
                    || inr(x, u, v)
            }
            AxiomId::J1 => {
                let [u, v, w] = [vals[0], vals[1], vals[2]];
                !(inr(w, u, v) && w != u && w != v) || j1_exists(r, u, v, w)
            }
            AxiomId::J2 => {
                let [u, x, v] = [vals[0], vals[1], vals[2]];
                !(r.is_pair(u, x) && r.is_pair(x, v) && !r.is_pair(u, v)) || inr(x, u, v)
            }
            AxiomId::J2Prime => {
                let [u, x, y, v] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, y)
                    && inr(y, x, v)
                    && r.is_pair(u, x)
                    && r.is_pair(x, y)
                    && r.is_pair(y, v)
                    && !r.is_pair(u, v))
                    || inr(x, u, v)
            }
            AxiomId::J3 => {
                let [u, x, y, v] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, y) && inr(y, x, v) && !r.is_pair(u, v)) || inr(x, u, v)
            }
            AxiomId::J3Prime => {
                let [u, x, y, v] = [vals[0], vals[1], vals[2], vals[3]];
                !(inr(x, u, y) && inr(y, x, v) && !r.is_pair(x, y) && !r.is_pair(u, v))
                    || inr(x, u, v)
            }
        }
    }
}

// The existential part of (J1), decided by trying every (u1, v1).
fn j1_exists(r: &TransitFunction, u: usize, v: usize, w: usize) -> bool {
    let ruw = r.get(u, w);
    let rvw = r.get(v, w);
    let left = (ruw - rvw).iter().filter(|&u1| r.is_pair(u1, w));
    left.into_iter().any(|u1| {
        (rvw - ruw)
            .iter()
            .filter(|&v1| r.is_pair(v1, w))
            .any(|v1| r.get(u1, v1).contains(w))
    })
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    /// Accepts the canonical names plus `p`-suffixed primes (`J2p`) and
    /// any letter case.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('p', "'");
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().to_ascii_lowercase() == norm)
            .ok_or_else(|| Error::Input(format!("unknown axiom {s:?}")))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parses a comma-separated axiom list, or `all`.
pub fn parse_axiom_list(s: &str) -> Result<Vec<AxiomId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(AxiomId::ALL.to_vec());
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// A falsifying assignment of an axiom's variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub axiom: AxiomId,
    /// Values in the order of [`AxiomId::variables`].
    pub values: Vec<usize>,
}

impl Witness {
    pub fn new(axiom: AxiomId, values: Vec<usize>) -> Self {
        Witness { axiom, values }
    }

    /// The value assigned to variable `var`.
    pub fn get(&self, var: &str) -> Option<usize> {
        let i = self.axiom.variables().iter().position(|&v| v == var)?;
        self.values.get(i).copied()
    }

    /// True iff substituting this assignment into the axiom makes it false.
    pub fn falsifies(&self, r: &TransitFunction) -> bool {
        self.values.len() == self.axiom.variables().len()
            && self.values.iter().all(|&v| v < r.n())
            && self.axiom.in_domain(&self.values)
            && !self.axiom.instance_holds(r, &self.values)
    }

    /// `u=a, x=b, ...` using the function's vertex names.
    pub fn describe(&self, r: &TransitFunction) -> String {
        self.axiom
            .variables()
            .iter()
            .zip(&self.values)
            .map(|(var, &val)| format!("{var}={}", r.name(val)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.values.len()))?;
        for (var, val) in self.axiom.variables().iter().zip(&self.values) {
            m.serialize_entry(var, val)?;
        }
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// In-domain assignments examined, up to and including the witness.
    pub tuples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

/// Decides one axiom on `r` by exhaustive sweep.
pub fn check_axiom(r: &TransitFunction, axiom: AxiomId) -> AxiomResult {
    if axiom == AxiomId::T2 {
        return AxiomResult {
            axiom,
            holds: true,
            witness: None,
            tuples_checked: 0,
            note: Some("holds structurally: values are stored per unordered pair"),
        };
    }
    let n = r.n();
    let k = axiom.variables().len();
    let mut vals = vec![0usize; k];
    let mut checked = 0u64;
    loop {
        if axiom.in_domain(&vals) {
            checked += 1;
            if !axiom.instance_holds(r, &vals) {
                return AxiomResult {
                    axiom,
                    holds: false,
                    witness: Some(Witness::new(axiom, vals)),
                    tuples_checked: checked,
                    note: None,
                };
            }
        }
        // odometer, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return AxiomResult {
                    axiom,
                    holds: true,
                    witness: None,
                    tuples_checked: checked,
                    note: None,
                };
            }
            i -= 1;
            vals[i] += 1;
            if vals[i] < n {
                break;
            }
            vals[i] = 0;
        }
    }
}

/// Shorthand for `check_axiom(r, a).holds`.
pub fn holds(r: &TransitFunction, a: AxiomId) -> bool {
    check_axiom(r, a).holds
}

/// Results for all fourteen axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomProfile {
    pub results: Vec<AxiomResult>,
}

impl AxiomProfile {
    pub fn get(&self, a: AxiomId) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == a)
            .expect("profiles are complete")
    }

    pub fn holds(&self, a: AxiomId) -> bool {
        self.get(a).holds
    }

    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }
}

/// Checks every axiom. Limited to ground sets of at most 32 vertices.
pub fn check_profile(r: &TransitFunction) -> Result<AxiomProfile> {
    if r.n() > PROFILE_MAX_N {
        return Err(Error::Capability {
            operation: "a full axiom profile",
            limit: PROFILE_MAX_N,
            n: r.n(),
        });
    }
    Ok(AxiomProfile {
        results: AxiomId::ALL.iter().map(|&a| check_axiom(r, a)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ImplicationVerdict {
    /// Some premise fails, so the instance says nothing.
    Vacuous { failed_premise: AxiomId },
    Consistent,
    Counterexample { witness: Witness },
}

/// Evaluates `premises => conclusion` on one transit function.
pub fn implication_check(
    r: &TransitFunction,
    premises: &[AxiomId],
    conclusion: AxiomId,
) -> ImplicationVerdict {
    if let Some(&failed) = premises.iter().find(|&&p| !holds(r, p)) {
        return ImplicationVerdict::Vacuous {
            failed_premise: failed,
        };
    }
    match check_axiom(r, conclusion).witness {
        None => ImplicationVerdict::Consistent,
        Some(witness) => ImplicationVerdict::Counterexample { witness },
    }
}
