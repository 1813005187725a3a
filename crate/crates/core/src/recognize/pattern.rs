use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    bfs_all_pairs, enumerate_induced_cycles, generate, CycleOccurrence, Graph, GraphKind,
};
use crate::graph::cycle_is_isometric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternId {
    #[serde(rename = "house")]
    House,
    /// Induced cycle of length at least 5.
    #[serde(rename = "hole")]
    Hole,
    #[serde(rename = "domino")]
    Domino,
    #[serde(rename = "fan3")]
    Fan3,
    #[serde(rename = "pgraph")]
    PGraph,
    /// Induced cycle of length at least 4.
    #[serde(rename = "inducedC4plus")]
    InducedC4Plus,
    /// Isometric cycle of length at least 4.
    #[serde(rename = "isometric_hole")]
    IsometricHole,
}

impl PatternId {
    pub const ALL: [PatternId; 7] = [
        PatternId::House,
        PatternId::Hole,
        PatternId::Domino,
        PatternId::Fan3,
        PatternId::PGraph,
        PatternId::InducedC4Plus,
        PatternId::IsometricHole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternId::House => "house",
            PatternId::Hole => "hole",
            PatternId::Domino => "domino",
            PatternId::Fan3 => "fan3",
            PatternId::PGraph => "pgraph",
            PatternId::InducedC4Plus => "inducedC4plus",
            PatternId::IsometricHole => "isometric_hole",
        }
    }

    /// The pattern as a labeled graph, for the fixed-size patterns.
    pub fn fixed_graph(self) -> Option<Graph> {
        let kind = match self {
            PatternId::House => GraphKind::House,
            PatternId::Domino => GraphKind::Domino,
            PatternId::Fan3 => GraphKind::Fan3,
            PatternId::PGraph => GraphKind::PGraph,
            _ => return None,
        };
        Some(generate(kind).expect("fixed patterns are valid"))
    }

    /// Smallest cycle length for the cycle patterns.
    fn min_cycle_len(self) -> Option<usize> {
        match self {
            PatternId::Hole => Some(5),
            PatternId::InducedC4Plus | PatternId::IsometricHole => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Input(format!("unknown pattern {s:?}")))
    }
}

/// Where a pattern sits in a graph. For fixed patterns `vertices[i]` is the
/// image of pattern vertex `i`; for cycle patterns the vertices are listed in
/// cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub pattern: PatternId,
    pub vertices: Vec<usize>,
}

impl Occurrence {
    /// Re-checks the occurrence against `g`.
    pub fn replay(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct = self.vertices.iter().copied().collect::<crate::VertexSet>().len();
        if distinct != self.vertices.len() {
            return false;
        }
        if let Some(p) = self.pattern.fixed_graph() {
            return p.n() == self.vertices.len() && maps_onto(&p, g, &self.vertices);
        }
        let min = self.pattern.min_cycle_len().unwrap();
        let c = CycleOccurrence::new(self.vertices.clone());
        if c.len() < min || c.validate(g).is_err() || !c.is_chordless_in(g) {
            return false;
        }
        self.pattern != PatternId::IsometricHole || cycle_is_isometric(&bfs_all_pairs(g), &c)
    }
}

// Pattern edge (i, j) iff graph edge (image[i], image[j]).
fn maps_onto(p: &Graph, g: &Graph, image: &[usize]) -> bool {
    let k = p.n();
    (0..k).all(|i| ((i + 1)..k).all(|j| p.has_edge(i, j) == g.has_edge(image[i], image[j])))
}

/// Finds the pattern in `g`, or `None`.
///
/// Fixed patterns: the lexicographically smallest vertex subset inducing a
/// copy, with the vertices reported through the first matching bijection.
/// Cycle patterns: the first qualifying cycle of [`enumerate_induced_cycles`].
/// Works on disconnected graphs too.
pub fn find_induced_pattern(g: &Graph, p: PatternId) -> Option<Occurrence> {
    match p.fixed_graph() {
        Some(pg) => find_fixed(g, &pg).map(|vertices| Occurrence {
            pattern: p,
            vertices,
        }),
        None => find_cycle(g, p),
    }
}

fn find_cycle(g: &Graph, p: PatternId) -> Option<Occurrence> {
    let cycles = enumerate_induced_cycles(g, p.min_cycle_len().unwrap());
    let hit = if p == PatternId::IsometricHole {
        let d = bfs_all_pairs(g);
        cycles.into_iter().find(|c| cycle_is_isometric(&d, c))
    } else {
        cycles.into_iter().next()
    };
    hit.map(|c| Occurrence {
        pattern: p,
        vertices: c.vertices,
    })
}

fn find_fixed(g: &Graph, pg: &Graph) -> Option<Vec<usize>> {
    let k = pg.n();
    if g.n() < k || g.edge_count() < pg.edge_count() {
        return None;
    }
    let target = pg.degree_sequence();
    let max_deg = *target.iter().max().unwrap();
    // vertices that could play any role at all
    let eligible: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) >= target[k - 1]).collect();
    let mut chosen = Vec::with_capacity(k);
    subsets(g, pg, &target, max_deg, &eligible, 0, &mut chosen)
}

fn subsets(
    g: &Graph,
    pg: &Graph,
    target: &[usize],
    max_deg: usize,
    pool: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = pg.n();
    if chosen.len() == k {
        return match_subset(g, pg, target, chosen);
    }
    let need = k - chosen.len();
    for i in start..=pool.len().saturating_sub(need) {
        if pool.len() < need {
            break;
        }
        chosen.push(pool[i]);
        // prune when some chosen vertex already has too many chosen neighbours
        let set: crate::VertexSet = chosen.iter().copied().collect();
        let ok = chosen.iter().all(|&v| (g.neighbors(v) & set).len() <= max_deg);
        if ok {
            if let Some(found) = subsets(g, pg, target, max_deg, pool, i + 1, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

fn match_subset(g: &Graph, pg: &Graph, target: &[usize], chosen: &[usize]) -> Option<Vec<usize>> {
    let set: crate::VertexSet = chosen.iter().copied().collect();
    let mut degs: Vec<usize> = chosen.iter().map(|&v| (g.neighbors(v) & set).len()).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    if degs != target {
        return None;
    }
    let k = pg.n();
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if assign(g, pg, chosen, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

// Backtracking bijection: pattern vertex `i` goes to some unused chosen vertex.
fn assign(
    g: &Graph,
    pg: &Graph,
    chosen: &[usize],
    i: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let k = pg.n();
    if i == k {
        return true;
    }
    for (slot, &v) in chosen.iter().enumerate() {
        if used[slot] {
            continue;
        }
        if (0..i).all(|j| pg.has_edge(i, j) == g.has_edge(v, image[j])) {
            image[i] = v;
            used[slot] = true;
            if assign(g, pg, chosen, i + 1, image, used) {
                return true;
            }
            used[slot] = false;
        }
    }
    false
}

/// True iff `g` contains none of `patterns`.
pub fn is_free_of(g: &Graph, patterns: &[PatternId]) -> bool {
    first_pattern(g, patterns).is_none()
}

/// The first pattern in `patterns` that occurs, with its occurrence.
pub fn first_pattern(g: &Graph, patterns: &[PatternId]) -> Option<Occurrence> {
    patterns.iter().find_map(|&p| find_induced_pattern(g, p))
}
