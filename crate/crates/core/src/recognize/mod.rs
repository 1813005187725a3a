//! Graph-class recognition by forbidden induced patterns, with independent
//! oracles for cross-checking.

mod oracles;
mod pattern;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use oracles::{
    dh_oracle_definition, dh_oracle_pruning, ptolemaic_oracle_inequality, pruning_sequence,
    replay_pruning, PruneRule, PruneStep, DH_DEFINITION_MAX_N,
};
pub use pattern::{find_induced_pattern, first_pattern, is_free_of, Occurrence, PatternId};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    #[serde(rename = "chordal")]
    Chordal,
    #[serde(rename = "distance_hereditary")]
    DistanceHereditary,
    #[serde(rename = "ptolemaic")]
    Ptolemaic,
    #[serde(rename = "bridged")]
    Bridged,
    #[serde(rename = "HHD_free")]
    HhdFree,
    #[serde(rename = "HHP3fan_free")]
    Hhp3fanFree,
    #[serde(rename = "HHD3fan_free")]
    Hhd3fanFree,
}

const HHD: [PatternId; 3] = [PatternId::House, PatternId::Hole, PatternId::Domino];
const HHP3FAN: [PatternId; 4] = [PatternId::House, PatternId::Hole, PatternId::PGraph, PatternId::Fan3];
const HHD3FAN: [PatternId; 4] = [PatternId::House, PatternId::Hole, PatternId::Domino, PatternId::Fan3];

impl GraphClass {
    pub const ALL: [GraphClass; 7] = [
        GraphClass::Chordal,
        GraphClass::DistanceHereditary,
        GraphClass::Ptolemaic,
        GraphClass::Bridged,
        GraphClass::HhdFree,
        GraphClass::Hhp3fanFree,
        GraphClass::Hhd3fanFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::DistanceHereditary => "distance_hereditary",
            GraphClass::Ptolemaic => "ptolemaic",
            GraphClass::Bridged => "bridged",
            GraphClass::HhdFree => "HHD_free",
            GraphClass::Hhp3fanFree => "HHP3fan_free",
            GraphClass::Hhd3fanFree => "HHD3fan_free",
        }
    }

    /// Patterns whose presence may certify non-membership.
    pub fn forbidden(self) -> &'static [PatternId] {
        match self {
            GraphClass::Chordal => &[PatternId::InducedC4Plus],
            GraphClass::DistanceHereditary | GraphClass::Hhd3fanFree => &HHD3FAN,
            GraphClass::Ptolemaic => &[PatternId::InducedC4Plus, PatternId::Fan3],
            GraphClass::Bridged => &[PatternId::IsometricHole],
            GraphClass::HhdFree => &HHD,
            GraphClass::Hhp3fanFree => &HHP3FAN,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Input(format!("unknown graph class {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Pattern(Occurrence),
    /// A perfect elimination order.
    Order { order: Vec<usize> },
    Pruning { pruning: Vec<PruneStep> },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub class: GraphClass,
    pub member: bool,
    pub certificate: Certificate,
}

impl RecognitionReport {
    fn negative(class: GraphClass, occ: Occurrence) -> Self {
        RecognitionReport {
            class,
            member: false,
            certificate: Certificate::Pattern(occ),
        }
    }

    fn positive(class: GraphClass, certificate: Certificate) -> Self {
        RecognitionReport {
            class,
            member: true,
            certificate,
        }
    }

    /// Re-checks the certificate against `g`. Negative reports must carry a
    /// pattern of the class that really occurs; positive order and pruning
    /// certificates must be valid.
    pub fn replay(&self, g: &Graph) -> bool {
        match (&self.certificate, self.member) {
            (Certificate::Pattern(occ), false) => {
                self.class.forbidden().contains(&occ.pattern) && occ.replay(g)
            }
            (Certificate::Order { order }, true) => is_perfect_elimination_order(g, order),
            (Certificate::Pruning { pruning }, true) => replay_pruning(g, pruning),
            (Certificate::None, true) => true,
            _ => false,
        }
    }
}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination order exactly when the graph is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    visit.reverse();
    visit
}

/// Each vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        later
            .iter()
            .all(|&a| later.iter().all(|&b| a == b || g.has_edge(a, b)))
    })
}

fn chordal_report(g: &Graph, class: GraphClass) -> RecognitionReport {
    let order = mcs_order(g);
    if is_perfect_elimination_order(g, &order) {
        RecognitionReport::positive(class, Certificate::Order { order })
    } else {
        let occ = find_induced_pattern(g, PatternId::InducedC4Plus)
            .expect("a graph without a perfect elimination order has a long induced cycle");
        RecognitionReport::negative(class, occ)
    }
}

pub fn is_chordal(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(chordal_report(g, GraphClass::Chordal))
}

/// Forbidden-pattern test over house, hole, domino and 3-fan. Members carry
/// a pruning sequence.
pub fn is_distance_hereditary(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(match first_pattern(g, &HHD3FAN) {
        Some(occ) => RecognitionReport::negative(GraphClass::DistanceHereditary, occ),
        None => RecognitionReport::positive(
            GraphClass::DistanceHereditary,
            pruning_sequence(g).map_or(Certificate::None, |pruning| Certificate::Pruning { pruning }),
        ),
    })
}

/// Chordal and 3-fan-free.
pub fn is_ptolemaic(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    let chordal = chordal_report(g, GraphClass::Ptolemaic);
    if !chordal.member {
        return Ok(chordal);
    }
    Ok(match find_induced_pattern(g, PatternId::Fan3) {
        Some(occ) => RecognitionReport::negative(GraphClass::Ptolemaic, occ),
        None => chordal,
    })
}

/// No isometric cycle of length at least 4.
pub fn is_bridged(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(pattern_free(g, GraphClass::Bridged))
}

pub fn is_hhd_free(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(pattern_free(g, GraphClass::HhdFree))
}

pub fn is_hhp3fan_free(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(pattern_free(g, GraphClass::Hhp3fanFree))
}

pub fn is_hhd3fan_free(g: &Graph) -> Result<RecognitionReport> {
    g.require_connected()?;
    Ok(pattern_free(g, GraphClass::Hhd3fanFree))
}

fn pattern_free(g: &Graph, class: GraphClass) -> RecognitionReport {
    match first_pattern(g, class.forbidden()) {
        Some(occ) => RecognitionReport::negative(class, occ),
        None => RecognitionReport::positive(class, Certificate::None),
    }
}

pub fn recognize(g: &Graph, class: GraphClass) -> Result<RecognitionReport> {
    match class {
        GraphClass::Chordal => is_chordal(g),
        GraphClass::DistanceHereditary => is_distance_hereditary(g),
        GraphClass::Ptolemaic => is_ptolemaic(g),
        GraphClass::Bridged => is_bridged(g),
        GraphClass::HhdFree => is_hhd_free(g),
        GraphClass::Hhp3fanFree => is_hhp3fan_free(g),
        GraphClass::Hhd3fanFree => is_hhd3fan_free(g),
    }
}

/// All seven verdicts.
pub fn classify(g: &Graph) -> Result<Vec<RecognitionReport>> {
    GraphClass::ALL.iter().map(|&c| recognize(g, c)).collect()
}
