use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::random_connected;
use crate::set::VertexSet;
use crate::transit::{interval_function, TransitFunction};

pub const SAMPLE_MIN_N: usize = 3;
pub const SAMPLE_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum SampleMode {
    /// `R(u,v) = {u,v}` plus each other vertex with probability one half.
    Uniform,
    /// The interval function of a random connected graph with `mutations`
    /// single-vertex toggles that never touch an endpoint.
    IntervalMutation { mutations: usize },
}

/// A seeded random transit function satisfying (t1)-(t3).
pub fn sample_transit_function(n: usize, mode: SampleMode, seed: u64) -> Result<TransitFunction> {
    if !(SAMPLE_MIN_N..=SAMPLE_MAX_N).contains(&n) {
        return Err(Error::Input(format!(
            "sampling needs {SAMPLE_MIN_N} <= n <= {SAMPLE_MAX_N}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        SampleMode::Uniform => {
            let mut r = TransitFunction::pairs(n)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    let mut s = VertexSet::pair(u, v);
                    for w in 0..n {
                        if w != u && w != v && rng.random_bool(0.5) {
                            s.insert(w);
                        }
                    }
                    r.set(u, v, s)?;
                }
            }
            Ok(r)
        }
        SampleMode::IntervalMutation { mutations } => {
            let p = rng.random_range(0.25..0.85);
            let g = random_connected(n, p, &mut rng)?;
            let mut r = interval_function(&g)?;
            for _ in 0..mutations {
                let u = rng.random_range(0..n);
                let v = (u + rng.random_range(1..n)) % n;
                let w = loop {
                    let w = rng.random_range(0..n);
                    if w != u && w != v {
                        break w;
                    }
                };
                let mut s = r.get(u, v);
                if s.contains(w) {
                    s.remove(w);
                } else {
                    s.insert(w);
                }
                r.set(u, v, s)?;
            }
            Ok(r)
        }
    }
}
