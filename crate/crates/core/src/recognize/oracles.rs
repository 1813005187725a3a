use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_all_pairs, bfs_layers, Graph};
use crate::set::VertexSet;

/// Largest graph accepted by [`dh_oracle_definition`].
pub const DH_DEFINITION_MAX_N: usize = 9;

/// Every connected induced subgraph keeps the distances of `g`.
pub fn dh_oracle_definition(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > DH_DEFINITION_MAX_N {
        return Err(Error::Capability {
            operation: "the definitional distance-hereditary check",
            limit: DH_DEFINITION_MAX_N,
            n,
        });
    }
    g.require_connected()?;
    let d = bfs_all_pairs(g);
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet::from_bits(mask);
        if s.len() < 3 || !g.is_connected_within(s) {
            continue;
        }
        for u in s {
            let mut stretched = false;
            bfs_layers(g, u, s, |v, dist| stretched |= dist != d.get(u, v));
            if stretched {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PruneRule {
    Pendant,
    TrueTwin,
    FalseTwin,
}

/// Removal of `vertex`, justified by `partner` (its single neighbour for a
/// pendant, its twin otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PruneStep {
    pub vertex: usize,
    pub rule: PruneRule,
    pub partner: usize,
}

fn step_valid(g: &Graph, alive: VertexSet, s: PruneStep) -> bool {
    let (v, p) = (s.vertex, s.partner);
    if v == p || !alive.contains(v) || !alive.contains(p) {
        return false;
    }
    let nv = g.neighbors(v) & alive;
    let np = g.neighbors(p) & alive;
    match s.rule {
        PruneRule::Pendant => nv == VertexSet::singleton(p),
        PruneRule::TrueTwin => g.has_edge(v, p) && nv - VertexSet::singleton(p) == np - VertexSet::singleton(v),
        PruneRule::FalseTwin => !g.has_edge(v, p) && nv == np,
    }
}

/// Greedy pendant/twin deletion down to one vertex, or `None` when it gets
/// stuck. Pendants go first, then twins; ties break towards small labels and
/// the larger twin is removed.
pub fn pruning_sequence(g: &Graph) -> Option<Vec<PruneStep>> {
    if !g.is_connected() {
        return None;
    }
    let mut alive = g.vertices();
    let mut steps = Vec::with_capacity(g.n().saturating_sub(1));
    while alive.len() > 1 {
        let step = next_step(g, alive)?;
        steps.push(step);
        alive.remove(step.vertex);
    }
    Some(steps)
}

fn next_step(g: &Graph, alive: VertexSet) -> Option<PruneStep> {
    for v in alive {
        let nv = g.neighbors(v) & alive;
        if nv.len() == 1 {
            return Some(PruneStep { vertex: v, rule: PruneRule::Pendant, partner: nv.first().unwrap() });
        }
    }
    for p in alive {
        for v in alive {
            if v <= p {
                continue;
            }
            let rule = if g.has_edge(v, p) { PruneRule::TrueTwin } else { PruneRule::FalseTwin };
            let step = PruneStep { vertex: v, rule, partner: p };
            if step_valid(g, alive, step) {
                return Some(step);
            }
        }
    }
    None
}

/// Replays a pruning certificate: every step is legal when taken and exactly
/// one vertex survives.
pub fn replay_pruning(g: &Graph, steps: &[PruneStep]) -> bool {
    let mut alive = g.vertices();
    for &s in steps {
        if !step_valid(g, alive, s) {
            return false;
        }
        alive.remove(s.vertex);
    }
    alive.len() == 1
}

/// Pendant and twin deletion reaches a single vertex.
pub fn dh_oracle_pruning(g: &Graph) -> bool {
    pruning_sequence(g).is_some()
}

/// `d(u,v) d(x,y) <= d(u,x) d(v,y) + d(u,y) d(v,x)` for all quadruples.
pub fn ptolemaic_oracle_inequality(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let d = bfs_all_pairs(g);
    let n = g.n();
    let dd = |a, b| d.get(a, b) as u64;
    for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if dd(u, v) * dd(x, y) > dd(u, x) * dd(v, y) + dd(u, y) * dd(v, x) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
