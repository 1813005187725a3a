//! Transit functions and the three canonical constructions: the interval
//! function `I_G`, the induced-path function `J_G`, and the underlying graph
//! `G_R` of an arbitrary transit function.

mod document;

pub use document::{DefaultRule, TransitDocument, TransitEntry, VertexRef};

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{bfs_all_pairs, Graph};
use crate::set::{VertexSet, MAX_VERTICES};

/// Size guard for [`induced_path_function`].
pub const INDUCED_PATH_MAX_N: usize = 14;

/// A map from vertex pairs of `0..n` to vertex subsets.
///
/// Values are stored per unordered pair, so `R(u, v) = R(v, u)` always holds.
/// The diagonal defaults to `R(u, u) = {u}` but can be overwritten, which is
/// what lets [`TransitFunction::validate_t`] report a failing `(t3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransitFunction {
    n: usize,
    sets: Vec<VertexSet>,
    names: Option<Vec<String>>,
}

impl TransitFunction {
    /// `R(u, v) = {u, v}` everywhere: the transit function of a complete graph.
    pub fn pairs(n: usize) -> Result<Self> {
        Self::with_default(n, DefaultRule::Pair)
    }

    /// Off-diagonal values start according to `rule`; the diagonal is `{u}`.
    pub fn with_default(n: usize, rule: DefaultRule) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return input(format!("ground set size must be in 1..={MAX_VERTICES}, got {n}"));
        }
        let mut sets = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            for v in 0..n {
                sets[u * n + v] = match rule {
                    _ if u == v => VertexSet::singleton(u),
                    DefaultRule::Pair => VertexSet::pair(u, v),
                    DefaultRule::None => VertexSet::EMPTY,
                };
            }
        }
        Ok(TransitFunction { n, sets, names: None })
    }

    /// Attaches display names to the vertices.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.n {
            return input(format!("{} names for a ground set of size {}", names.len(), self.n));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return input(format!("duplicate vertex name {a:?}"));
            }
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> VertexSet {
        self.sets[u * self.n + v]
    }

    /// Sets `R(u, v)` and `R(v, u)` together.
    pub fn set(&mut self, u: usize, v: usize, s: VertexSet) -> Result<()> {
        if u >= self.n || v >= self.n {
            return input(format!("pair ({u}, {v}) outside 0..{}", self.n));
        }
        if !s.is_subset(self.ground_set()) {
            return input(format!("set {s:?} not contained in 0..{}", self.n));
        }
        self.sets[u * self.n + v] = s;
        self.sets[v * self.n + u] = s;
        Ok(())
    }

    /// `R(u, v) = {u, v}`, with `{u, u} = {u}`.
    #[inline]
    pub fn is_pair(&self, u: usize, v: usize) -> bool {
        self.get(u, v) == VertexSet::pair(u, v)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of vertex `v`: its attached name, or the index.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// The first unordered pair `(u, v)`, `u <= v`, where the two functions
    /// disagree. Names are ignored. Functions on different ground sets differ
    /// at `(0, 0)` by convention.
    pub fn first_difference(&self, other: &TransitFunction) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        (0..self.n)
            .flat_map(|u| (u..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.get(u, v) != other.get(u, v))
    }

    pub fn same_values(&self, other: &TransitFunction) -> bool {
        self.first_difference(other).is_none()
    }

    /// Checks the transit axioms `(t1)`–`(t3)`.
    pub fn validate_t(&self) -> TValidation {
        let t1_witness = (0..self.n)
            .flat_map(|u| (u..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| !VertexSet::pair(u, v).is_subset(self.get(u, v)));
        let t3_witness = (0..self.n).find(|&u| self.get(u, u) != VertexSet::singleton(u));
        TValidation {
            t1_ok: t1_witness.is_none(),
            t2_ok: true,
            t3_ok: t3_witness.is_none(),
            t1_witness,
            t3_witness,
        }
    }

    pub fn is_t_valid(&self) -> bool {
        let v = self.validate_t();
        v.t1_ok && v.t2_ok && v.t3_ok
    }

    /// The underlying graph: `uv` is an edge iff `u != v` and `R(u, v) = {u, v}`.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("ground set size already validated");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.is_pair(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for TransitFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for u in 0..self.n {
            for v in u..self.n {
                if u == v && self.get(u, u) == VertexSet::singleton(u) {
                    continue;
                }
                let set: Vec<String> = self.get(u, v).iter().map(|w| self.name(w)).collect();
                m.entry(&format_args!("({}, {})", self.name(u), self.name(v)), &set);
            }
        }
        m.finish()
    }
}

/// Outcome of checking `(t1)`–`(t3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TValidation {
    pub t1_ok: bool,
    /// Always true: values are stored per unordered pair.
    pub t2_ok: bool,
    pub t3_ok: bool,
    /// Smallest pair `(u, v)` with `{u, v}` not contained in `R(u, v)`.
    pub t1_witness: Option<(usize, usize)>,
    /// Smallest `u` with `R(u, u) != {u}`.
    pub t3_witness: Option<usize>,
}

/// `I(u, v) = { w : d(u, w) + d(w, v) = d(u, v) }`.
pub fn interval_function(g: &Graph) -> Result<TransitFunction> {
    g.require_connected()?;
    Ok(interval_function_unchecked(g))
}

/// [`interval_function`] without the connectivity check; pairs in different
/// components get the empty set.
pub(crate) fn interval_function_unchecked(g: &Graph) -> TransitFunction {
    let d = bfs_all_pairs(g);
    let mut r = TransitFunction::pairs(g.n()).expect("n validated by Graph");
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            r.sets[u * g.n() + v] = d.geodesic_vertices(u, v);
            r.sets[v * g.n() + u] = r.sets[u * g.n() + v];
        }
    }
    r
}

/// `J(u, v)`: every vertex on some induced `u,v`-path.
///
/// Computed by exhaustive depth-first enumeration of chordless paths from
/// each source, so it is exponential; guarded at `n <= 14`.
pub fn induced_path_function(g: &Graph) -> Result<TransitFunction> {
    if g.n() > INDUCED_PATH_MAX_N {
        return Err(Error::Capability {
            operation: "the induced-path function",
            limit: INDUCED_PATH_MAX_N,
            n: g.n(),
        });
    }
    g.require_connected()?;
    Ok(induced_path_function_unchecked(g))
}

/// Same as [`induced_path_function`] without the guards. On a disconnected
/// graph, pairs in different components get the empty set.
pub(crate) fn induced_path_function_unchecked(g: &Graph) -> TransitFunction {
    let n = g.n();
    let mut acc = vec![VertexSet::EMPTY; n * n];
    for s in 0..n {
        let row = &mut acc[s * n..(s + 1) * n];
        walk_induced(g, s, VertexSet::singleton(s), VertexSet::EMPTY, row);
    }
    let mut r = TransitFunction::with_default(n, DefaultRule::None).expect("n validated by Graph");
    for u in 0..n {
        for v in (u + 1)..n {
            // Both directions enumerate the same paths; union keeps it symmetric
            // even if one side were ever pruned differently.
            r.sets[u * n + v] = acc[u * n + v] | acc[v * n + u];
            r.sets[v * n + u] = r.sets[u * n + v];
        }
    }
    r
}

// `path` is the vertex set of the current induced path ending at `last`;
// `blocked` is the union of closed neighbourhoods of every path vertex except
// `last`.
fn walk_induced(g: &Graph, last: usize, path: VertexSet, blocked: VertexSet, acc: &mut [VertexSet]) {
    acc[last] = acc[last] | path;
    let next_blocked = blocked | g.closed_neighbors(last);
    for w in g.neighbors(last) - blocked - path {
        walk_induced(g, w, path | VertexSet::singleton(w), next_blocked, acc);
    }
}
