//! Named graphs, seeded random graphs and exhaustive enumeration.
//!
//! Canonical labellings of the named graphs (fixed so that witnesses are
//! stable across runs):
//!
//! | kind     | vertices | edges                                              |
//! |----------|----------|----------------------------------------------------|
//! | `house`  | 5        | square 0-1-2-3-0, apex 4 joined to 0 and 1         |
//! | `domino` | 6        | outer cycle 0-1-2-3-4-5-0 plus the rung 1-4        |
//! | `fan3`   | 5        | path 0-1-2-3, hub 4 joined to all four             |
//! | `pgraph` | 5        | square 0-1-2-3-0, pendant 4 hanging from 0         |
//! | `cycle`  | n        | 0-1-...-(n-1)-0                                    |
//! | `path`   | n        | 0-1-...-(n-1)                                      |

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{input, Result};

/// Largest `n` accepted by [`enumerate_connected_labeled`].
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    House,
    Domino,
    Fan3,
    PGraph,
    /// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
    ErRandom { n: usize, p: f64, seed: u64 },
}

pub fn generate(kind: GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::Complete(n) => {
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return input(format!("a cycle needs at least 3 vertices, got {n}"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        GraphKind::House => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]),
        GraphKind::Domino => Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)],
        ),
        GraphKind::Fan3 => Graph::from_edges(
            5,
            [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        ),
        GraphKind::PGraph => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        GraphKind::ErRandom { n, p, seed } => er_random(n, p, seed),
    }
}

/// `G(n, p)`: each pair `u < v`, in lexicographic order, becomes an edge with
/// probability `p`, drawn from a ChaCha8 stream seeded with `seed`.
pub fn er_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    er_with(n, p, &mut rng)
}

fn er_with(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability must lie in [0, 1], got {p}"));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Draws `G(n, p)` samples from `rng` until one is connected.
///
/// Fails if no connected sample turns up within the attempt budget, which
/// only happens for `p` close to 0.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    const ATTEMPTS: usize = 100_000;
    for _ in 0..ATTEMPTS {
        let g = er_with(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    input(format!(
        "no connected G({n}, {p}) sample in {ATTEMPTS} attempts"
    ))
}

/// Every connected graph on the labelled vertex set `0..n`, exactly once.
///
/// Graphs are produced in increasing order of their edge bitmask, where bit
/// `k` stands for the `k`-th pair in lexicographic order.
pub fn enumerate_connected_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return input(format!(
            "exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut g = Graph::empty(n).expect("n checked above");
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g.is_connected().then_some(g)
    }))
}
