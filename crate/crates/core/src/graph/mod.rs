//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Vertices are the integers `0..n`. Adjacency is one [`VertexSet`] per
//! vertex, so neighbourhood intersections and subset tests are single word
//! operations; every sweep in this crate leans on that.

mod cycles;
mod distance;
mod format;
mod generate;

pub use cycles::{enumerate_induced_cycles, is_isometric_cycle, CycleOccurrence};
pub(crate) use cycles::cycle_is_isometric;
pub(crate) use distance::bfs_layers;
pub use distance::{bfs_all_pairs, DistanceMatrix, UNREACHABLE};
pub use format::{parse_edge_list, parse_graph, parse_graph6, EdgeListDocument};
pub use generate::{
    enumerate_connected_labeled, er_random, generate, random_connected, GraphKind,
    MAX_ENUMERATION_N,
};

use crate::error::{input, Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return input(format!("vertex count must be in 1..={MAX_VERTICES}, got {n}"));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Open neighbourhood plus the vertex itself.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// True iff the subgraph induced by `within` is connected (and nonempty).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(s) => self.component_within(s, within) == within,
        }
    }

    /// Vertices reachable from `s` using only vertices of `within`.
    pub fn component_within(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected { n: self.n })
        }
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// vertex order. The returned map sends each new label to its original
    /// vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return input("induced subgraph of an empty vertex set");
        }
        if !s.is_subset(self.vertices()) {
            return input(format!(
                "vertex set {:?} is not contained in 0..{}",
                s, self.n
            ));
        }
        let map = s.to_vec();
        Ok((self.induced_on(&map), map))
    }

    /// Induced subgraph with the given vertex order: new vertex `i` is
    /// `order[i]`. `order` must hold distinct in-range vertices.
    pub(crate) fn induced_on(&self, order: &[usize]) -> Graph {
        let k = order.len();
        let mut adj = vec![VertexSet::EMPTY; k];
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(order[i], order[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Debug-checks symmetry and irreflexivity.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].is_subset(self.vertices())
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
