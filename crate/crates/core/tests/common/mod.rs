//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library beyond `Graph` and
//! `TransitFunction` accessors.

#![allow(dead_code)]

use betweenness::{AxiomId, Graph, TransitFunction};

pub const INF: u32 = u32::MAX / 4;

/// Floyd–Warshall over the subgraph induced by `mask`.
pub fn floyd(g: &Graph, mask: u64) -> Vec<Vec<u32>> {
    let n = g.n();
    let inside = |v: usize| mask >> v & 1 == 1;
    let mut d = vec![vec![INF; n]; n];
    for u in (0..n).filter(|&u| inside(u)) {
        d[u][u] = 0;
        for v in (0..n).filter(|&v| inside(v)) {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in (0..n).filter(|&k| inside(k)) {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `I(u,v)` from Floyd–Warshall distances, as a bitmask.
pub fn interval(g: &Graph, u: usize, v: usize) -> u64 {
    let d = floyd(g, all_mask(g.n()));
    (0..g.n())
        .filter(|&w| d[u][w] + d[w][v] == d[u][v])
        .fold(0, |m, w| m | 1 << w)
}

/// The subgraph induced by `mask` is a single cycle (connected, 2-regular,
/// at least three vertices).
pub fn induces_cycle(g: &Graph, mask: u64) -> bool {
    let vs = members(mask);
    if vs.len() < 3 {
        return false;
    }
    let two_regular = vs
        .iter()
        .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
    two_regular && floyd(g, mask)[vs[0]].iter().enumerate().all(|(w, &x)| mask >> w & 1 == 0 || x < INF)
}

/// Vertex sets of all induced cycles with at least `min_len` vertices.
pub fn induced_cycle_sets(g: &Graph, min_len: usize) -> Vec<u64> {
    (0..=all_mask(g.n()))
        .filter(|&m| m.count_ones() as usize >= min_len && induces_cycle(g, m))
        .collect()
}

/// The cycle through the vertex set `mask`, in walk order from its smallest
/// vertex; `mask` must induce a cycle.
pub fn cycle_order(g: &Graph, mask: u64) -> Vec<usize> {
    let vs = members(mask);
    let mut order = vec![vs[0]];
    let mut prev = usize::MAX;
    loop {
        let cur = *order.last().unwrap();
        let next = vs.iter().copied().find(|&w| w != prev && g.has_edge(cur, w)).unwrap();
        if next == vs[0] {
            return order;
        }
        prev = cur;
        order.push(next);
    }
}

pub fn is_isometric_cycle_set(g: &Graph, mask: u64) -> bool {
    let d = floyd(g, all_mask(g.n()));
    let c = cycle_order(g, mask);
    let k = c.len();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let along = i.abs_diff(j).min(k - i.abs_diff(j)) as u32;
            d[c[i]][c[j]] == along
        })
    })
}

/// `J(u,v)`: vertices of some vertex set inducing a path with ends `u`, `v`.
pub fn induced_path_set(g: &Graph, u: usize, v: usize) -> u64 {
    if u == v {
        return 1 << u;
    }
    let mut acc = 0;
    for m in 0..=all_mask(g.n()) {
        if m >> u & 1 == 0 || m >> v & 1 == 0 || acc | m == acc {
            continue;
        }
        let vs = members(m);
        let deg = |x: usize| vs.iter().filter(|&&w| g.has_edge(x, w)).count();
        let ends_ok = deg(u) == 1 && deg(v) == 1;
        let inner_ok = vs.iter().all(|&x| x == u || x == v || deg(x) == 2);
        let d = floyd(g, m);
        let connected = vs.iter().all(|&x| d[u][x] < INF);
        if ends_ok && inner_ok && connected {
            acc |= m;
        }
    }
    acc
}

/// Is `h` (on `0..k`) an induced subgraph of `g`? Tries every injection.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if extend(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new())
}

pub fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]).unwrap()
}

pub fn domino() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap()
}

pub fn fan3() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap()
}

pub fn pgraph() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap()
}

pub fn has_hole(g: &Graph) -> bool {
    !induced_cycle_sets(g, 5).is_empty()
}

pub fn chordal(g: &Graph) -> bool {
    induced_cycle_sets(g, 4).is_empty()
}

/// Every connected induced subgraph keeps the host's distances.
pub fn distance_hereditary(g: &Graph) -> bool {
    let full = floyd(g, all_mask(g.n()));
    (1..=all_mask(g.n())).all(|m| {
        let d = floyd(g, m);
        let vs = members(m);
        let connected = vs.iter().all(|&v| d[vs[0]][v] < INF);
        !connected || vs.iter().all(|&a| vs.iter().all(|&b| d[a][b] == full[a][b]))
    })
}

pub fn bridged(g: &Graph) -> bool {
    induced_cycle_sets(g, 4).into_iter().all(|m| !is_isometric_cycle_set(g, m))
}

pub fn hhd3fan_free(g: &Graph) -> bool {
    !has_hole(g) && [house(), domino(), fan3()].iter().all(|h| !contains_induced(g, h))
}

pub fn hhp3fan_free(g: &Graph) -> bool {
    !has_hole(g) && [house(), pgraph(), fan3()].iter().all(|h| !contains_induced(g, h))
}

/// Variable order used for witnesses, per axiom.
pub fn arity(a: AxiomId) -> usize {
    match a {
        AxiomId::T3 => 1,
        AxiomId::T1 | AxiomId::T2 => 2,
        AxiomId::B1 | AxiomId::B4 | AxiomId::J1 | AxiomId::J2 => 3,
        _ => 4,
    }
}

fn distinct(vals: &[usize]) -> bool {
    (0..vals.len()).all(|i| (0..i).all(|j| vals[i] != vals[j]))
}

/// One instance of an axiom at the given assignment. Out-of-domain
/// assignments hold trivially.
pub fn naive_instance(r: &TransitFunction, a: AxiomId, t: &[usize]) -> bool {
    let inr = |w: usize, x: usize, y: usize| r.get(x, y).contains(w);
    let edge = |x: usize, y: usize| r.get(x, y).len() == 2 && inr(x, x, y) && inr(y, x, y) && x != y;
    let pair_or_point = |x: usize, y: usize| if x == y { r.get(x, x).len() == 1 && inr(x, x, x) } else { edge(x, y) };
    match a {
        AxiomId::T1 => inr(t[0], t[0], t[1]),
        AxiomId::T2 => r.get(t[0], t[1]) == r.get(t[1], t[0]),
        AxiomId::T3 => r.get(t[0], t[0]).len() == 1 && inr(t[0], t[0], t[0]),
        AxiomId::B1 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(inr(x, u, v) && x != v && inr(v, u, x))
        }
        AxiomId::B2 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(inr(x, u, v) && inr(y, u, x)) || inr(y, u, v)
        }
        AxiomId::B3 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(inr(x, u, v) && inr(y, u, x)) || inr(x, y, v)
        }
        AxiomId::B4 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !inr(x, u, v) || (0..r.n()).all(|w| (inr(w, u, x) && inr(w, x, v)) == (w == x))
        }
        AxiomId::J0 => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !distinct(t) || !(inr(x, u, y) && inr(y, x, v)) || inr(x, u, v)
        }
        AxiomId::J0Prime => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            let small = (0..r.n()).all(|w| !(inr(w, u, y) && inr(w, x, v)) || t.contains(&w));
            !distinct(t) || !(inr(x, u, y) && inr(y, x, v) && small) || inr(x, u, v)
        }
        AxiomId::J1 => {
            let (u, v, w) = (t[0], t[1], t[2]);
            if !(inr(w, u, v) && w != u && w != v) {
                return true;
            }
            (0..r.n()).any(|u1| {
                (0..r.n()).any(|v1| {
                    inr(u1, u, w)
                        && !inr(u1, v, w)
                        && inr(v1, v, w)
                        && !inr(v1, u, w)
                        && pair_or_point(u1, w)
                        && pair_or_point(v1, w)
                        && inr(w, u1, v1)
                })
            })
        }
        AxiomId::J2 => {
            let (u, x, v) = (t[0], t[1], t[2]);
            !(pair_or_point(u, x) && pair_or_point(x, v) && !pair_or_point(u, v)) || inr(x, u, v)
        }
        AxiomId::J2Prime => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            x == y
                || !(inr(x, u, y)
                    && inr(y, x, v)
                    && pair_or_point(u, x)
                    && pair_or_point(x, y)
                    && pair_or_point(y, v)
                    && !pair_or_point(u, v))
                || inr(x, u, v)
        }
        AxiomId::J3 => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            x == y || !(inr(x, u, y) && inr(y, x, v) && !pair_or_point(u, v)) || inr(x, u, v)
        }
        AxiomId::J3Prime => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !(inr(x, u, y) && inr(y, x, v) && !pair_or_point(x, y) && !pair_or_point(u, v)) || inr(x, u, v)
        }
    }
}

/// First falsifying assignment in lexicographic order, if any.
pub fn naive_witness(r: &TransitFunction, a: AxiomId) -> Option<Vec<usize>> {
    let n = r.n();
    let k = arity(a);
    let mut t = vec![0; k];
    loop {
        if !naive_instance(r, a, &t) {
            return Some(t);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Graph from a bit per lexicographic pair.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Adds a spanning path 0-1-...-(n-1) so the result is connected.
pub fn arb_connected_graph(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n, any::<u64>()).prop_flat_map(|(n, perm_seed)| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            // relabel the spine so it is not always the identity path
            let mut order: Vec<usize> = (0..n).collect();
            let mut s = perm_seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            let g = graph_from_bits(n, &bits);
            let spine = order.windows(2).map(|w| (w[0], w[1]));
            Graph::from_edges(n, g.edges().chain(spine)).unwrap()
        })
    })
}
