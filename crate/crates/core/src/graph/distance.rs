use super::Graph;
use crate::set::VertexSet;

/// Marker for vertex pairs with no connecting path.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop count between `u` and `v`, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// `Some(d)` when `v` is reachable from `u`.
    pub fn finite(&self, u: usize, v: usize) -> Option<u32> {
        match self.get(u, v) {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn all_finite(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }

    /// Vertices `w` with `d(u, w) + d(w, v) = d(u, v)`. Empty when `u` and
    /// `v` are disconnected.
    pub fn geodesic_vertices(&self, u: usize, v: usize) -> VertexSet {
        let duv = self.get(u, v);
        if duv == UNREACHABLE {
            return VertexSet::EMPTY;
        }
        (0..self.n)
            .filter(|&w| {
                let (a, b) = (self.get(u, w), self.get(w, v));
                a != UNREACHABLE && b != UNREACHABLE && a + b == duv
            })
            .collect()
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<Option<u32>>> = (0..self.n)
            .map(|u| (0..self.n).map(|v| self.finite(u, v)).collect())
            .collect();
        f.debug_struct("DistanceMatrix").field("d", &rows).finish()
    }
}

/// Breadth-first search from every vertex, one frontier word at a time.
pub fn bfs_all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        bfs_layers(g, s, g.vertices(), |v, dist| row[v] = dist);
    }
    DistanceMatrix { n, d }
}

/// Runs a layered BFS from `s` inside the vertex set `within`, reporting each
/// reached vertex with its distance. Returns the reached set.
pub(crate) fn bfs_layers(
    g: &Graph,
    s: usize,
    within: VertexSet,
    mut visit: impl FnMut(usize, u32),
) -> VertexSet {
    let mut seen = VertexSet::singleton(s);
    let mut frontier = seen;
    let mut dist = 0;
    visit(s, 0);
    while !frontier.is_empty() {
        dist += 1;
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | g.neighbors(v);
        }
        frontier = (next & within) - seen;
        for v in frontier {
            visit(v, dist);
        }
        seen = seen | frontier;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn antipodal_on_even_cycle() {
        let c6 = generate(GraphKind::Cycle(6)).unwrap();
        let d = bfs_all_pairs(&c6);
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(1, 5), 2);
    }

    #[test]
    fn complete_graph_distances() {
        let k = generate(GraphKind::Complete(5)).unwrap();
        let d = bfs_all_pairs(&k);
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn house_apex_to_far_corner() {
        let house = generate(GraphKind::House).unwrap();
        assert_eq!(bfs_all_pairs(&house).get(4, 2), 2);
    }

    #[test]
    fn unreachable_marker() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = bfs_all_pairs(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.finite(0, 1), Some(1));
        assert!(!d.all_finite());
        assert!(d.geodesic_vertices(0, 2).is_empty());
    }
}
