use std::borrow::Cow;
use std::cell::OnceCell;

use crate::axioms::{check_axiom, AxiomId, AxiomResult};
use crate::graph::Graph;
use crate::recognize::{recognize, GraphClass, RecognitionReport};
use crate::transit::{interval_function_unchecked, TransitFunction};

/// A transit function with memoized axiom verdicts and underlying graph.
pub(crate) struct TfContext<'a> {
    pub r: Cow<'a, TransitFunction>,
    axioms: [OnceCell<AxiomResult>; 14],
    gr: OnceCell<Graph>,
}

impl<'a> TfContext<'a> {
    pub fn new(r: Cow<'a, TransitFunction>) -> Self {
        TfContext {
            r,
            axioms: Default::default(),
            gr: OnceCell::new(),
        }
    }

    pub fn axiom(&self, a: AxiomId) -> &AxiomResult {
        self.axioms[a as usize].get_or_init(|| check_axiom(&self.r, a))
    }

    pub fn holds(&self, a: AxiomId) -> bool {
        self.axiom(a).holds
    }

    pub fn gr(&self) -> &Graph {
        self.gr.get_or_init(|| self.r.underlying_graph())
    }
}

/// A connected graph with its interval function and memoized class verdicts.
pub(crate) struct GraphContext<'a> {
    pub g: &'a Graph,
    pub interval: TfContext<'static>,
    classes: [OnceCell<RecognitionReport>; 7],
}

impl<'a> GraphContext<'a> {
    pub fn new(g: &'a Graph) -> Self {
        GraphContext {
            g,
            interval: TfContext::new(Cow::Owned(interval_function_unchecked(g))),
            classes: Default::default(),
        }
    }

    pub fn class(&self, c: GraphClass) -> &RecognitionReport {
        self.classes[c as usize]
            .get_or_init(|| recognize(self.g, c).expect("graph contexts hold connected graphs"))
    }

    pub fn member(&self, c: GraphClass) -> bool {
        self.class(c).member
    }
}
