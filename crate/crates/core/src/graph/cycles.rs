use serde::{Deserialize, Serialize};

use super::{bfs_all_pairs, Graph};
use crate::error::{input, Result};
use crate::set::VertexSet;

/// A cycle `v0 v1 ... v(k-1) v0`, listed in the graph's vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleOccurrence {
    pub vertices: Vec<usize>,
}

impl CycleOccurrence {
    pub fn new(vertices: Vec<usize>) -> Self {
        CycleOccurrence { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Rotation and reflection that starts at the smallest vertex and walks
    /// towards its smaller neighbour on the cycle.
    pub fn canonical(&self) -> CycleOccurrence {
        let k = self.vertices.len();
        if k == 0 {
            return self.clone();
        }
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .unwrap();
        let fwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + k - i) % k]).collect();
        CycleOccurrence::new(fwd.min(bwd))
    }

    /// Distance along the cycle between positions `i` and `j`.
    pub fn cycle_distance(&self, i: usize, j: usize) -> usize {
        let k = self.vertices.len();
        let diff = i.abs_diff(j);
        diff.min(k - diff)
    }

    /// Checks that this is a cycle of `g` (length at least 3, distinct
    /// vertices, consecutive vertices adjacent).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.vertices.len();
        if k < 3 {
            return input(format!("a cycle needs at least 3 vertices, got {k}"));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return input(format!("cycle vertex {v} outside 0..{}", g.n()));
        }
        if self.vertex_set().len() != k {
            return input("cycle repeats a vertex");
        }
        for i in 0..k {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return input(format!("cycle step {a}-{b} is not an edge"));
            }
        }
        Ok(())
    }

    /// True when no two non-consecutive cycle vertices are adjacent.
    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        (0..k).all(|i| {
            ((i + 2)..k).all(|j| {
                (i == 0 && j == k - 1) || !g.has_edge(self.vertices[i], self.vertices[j])
            })
        })
    }
}

/// Every chordless cycle of length at least `min_len`, each reported once in
/// canonical form, sorted lexicographically by vertex sequence.
///
/// Cycles are grown as chordless paths anchored at their smallest vertex; a
/// cycle is emitted when the path's far end touches the anchor again, and only
/// in the direction whose second vertex is smaller than its last.
pub fn enumerate_induced_cycles(g: &Graph, min_len: usize) -> Vec<CycleOccurrence> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(s + 1);
        for p1 in g.neighbors(s) & allowed {
            path.clear();
            path.push(s);
            path.push(p1);
            extend(g, allowed, VertexSet::EMPTY, &mut path, min_len.max(3), &mut out);
        }
    }
    out.sort();
    out
}

// `inner` is the union of closed neighbourhoods of path[1..len-1]; a new vertex
// must avoid it to keep the path chordless.
fn extend(
    g: &Graph,
    allowed: VertexSet,
    inner: VertexSet,
    path: &mut Vec<usize>,
    min_len: usize,
    out: &mut Vec<CycleOccurrence>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    let candidates = (g.neighbors(last) & allowed) - inner;
    let grown_inner = if path.len() >= 2 {
        inner | g.closed_neighbors(last)
    } else {
        inner
    };
    for w in candidates {
        if path.contains(&w) {
            continue;
        }
        if g.has_edge(w, s) {
            if path[1] < w && path.len() + 1 >= min_len {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(CycleOccurrence::new(cycle));
            }
        } else {
            path.push(w);
            extend(g, allowed, grown_inner, path, min_len, out);
            path.pop();
        }
    }
}

/// True iff graph distances between cycle vertices equal distances along
/// the cycle.
pub fn is_isometric_cycle(g: &Graph, c: &CycleOccurrence) -> Result<bool> {
    c.validate(g)?;
    let d = bfs_all_pairs(g);
    Ok(cycle_is_isometric(&d, c))
}

pub(crate) fn cycle_is_isometric(d: &super::DistanceMatrix, c: &CycleOccurrence) -> bool {
    let k = c.len();
    (0..k).all(|i| {
        ((i + 1)..k).all(|j| d.get(c.vertices[i], c.vertices[j]) as usize == c.cycle_distance(i, j))
    })
}
