use std::borrow::Cow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::context::{GraphContext, TfContext};
use super::{eval_graph, eval_tf, sample_transit_function, ClaimId, ClaimKind, Evidence, SampleMode, Verdict};
use crate::error::{Error, Result};
use crate::fixtures::all_fixtures;
use crate::graph::{enumerate_connected_labeled, random_connected, Graph};
use crate::recognize::GraphClass;
use crate::transit::{TransitDocument, TransitFunction};

/// What to run claims over. Everything random derives from `seed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// All labeled connected graphs on `1..=exhaustive_max_n` vertices.
    pub exhaustive_max_n: usize,
    pub random_count: usize,
    /// Inclusive vertex-count range of the random graphs.
    pub random_n_range: (usize, usize),
    pub edge_probabilities: Vec<f64>,
    pub seed: u64,
    /// Sampled transit functions per size per sampling mode.
    pub tf_samples: usize,
    pub tf_sizes: Vec<usize>,
    /// Interval-mutation samples cycle through `0..=tf_max_mutations` toggles.
    pub tf_max_mutations: usize,
    pub include_fixtures: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            exhaustive_max_n: 6,
            random_count: 1000,
            random_n_range: (7, 10),
            edge_probabilities: vec![0.2, 0.4, 0.6],
            seed: 1,
            tf_samples: 10_000,
            tf_sizes: vec![4, 5, 6],
            tf_max_mutations: 3,
            include_fixtures: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleEntry {
    pub instance: String,
    pub witness: Vec<Evidence>,
    /// The transit function, for transit-function claims.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transit_function: Option<TransitDocument>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimSummary {
    pub claim: ClaimId,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub instances: usize,
    pub consistent: usize,
    pub vacuous: usize,
    pub counterexamples: Vec<CounterexampleEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl ClaimSummary {
    fn new(claim: ClaimId) -> Self {
        ClaimSummary {
            claim,
            kind: claim.kind(),
            statement: claim.statement(),
            instances: 0,
            consistent: 0,
            vacuous: 0,
            counterexamples: Vec::new(),
            errors: Vec::new(),
        }
    }
}

/// Class inclusions observed on the graph corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassFacts {
    pub graphs: usize,
    pub ptolemaic: usize,
    pub distance_hereditary: usize,
    pub bridged: usize,
    pub ptolemaic_not_dh: usize,
    pub ptolemaic_not_bridged: usize,
    pub dh_not_bridged: usize,
    pub bridged_not_dh: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dh_not_bridged_example: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridged_not_dh_example: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub spec: CorpusSpec,
    pub exhaustive_graphs: usize,
    pub random_graphs: usize,
    pub transit_functions: usize,
    pub claims: Vec<ClaimSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_facts: Option<ClassFacts>,
}

impl CorpusReport {
    pub fn counterexample_count(&self) -> usize {
        self.claims.iter().map(|c| c.counterexamples.len()).sum()
    }

    pub fn error_count(&self) -> usize {
        self.claims.iter().map(|c| c.errors.len()).sum()
    }

    pub fn summary(&self, c: ClaimId) -> Option<&ClaimSummary> {
        self.claims.iter().find(|s| s.claim == c)
    }
}

// splitmix64 finalizer over the inputs
fn mix(seed: u64, parts: &[u64]) -> u64 {
    let mut z = seed;
    for &p in parts {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15).wrapping_add(p);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
    }
    z
}

/// The graph part of the corpus: exhaustive first, then random, each tagged
/// with a replayable origin.
pub fn corpus_graphs(spec: &CorpusSpec) -> Result<(Vec<(String, Graph)>, usize)> {
    let mut out = Vec::new();
    for n in 1..=spec.exhaustive_max_n {
        for g in enumerate_connected_labeled(n)? {
            out.push((format!("graph6:{}", g.to_graph6()), g));
        }
    }
    let exhaustive = out.len();
    let (lo, hi) = spec.random_n_range;
    if spec.random_count > 0 {
        if lo == 0 || lo > hi || spec.edge_probabilities.is_empty() {
            return Err(Error::Input("empty random graph range".into()));
        }
        let span = hi - lo + 1;
        for i in 0..spec.random_count {
            let n = lo + i % span;
            let p = spec.edge_probabilities[(i / span) % spec.edge_probabilities.len()];
            let seed = mix(spec.seed, &[1, i as u64]);
            let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed))?;
            out.push((format!("random n={n} p={p} seed={seed} graph6:{}", g.to_graph6()), g));
        }
    }
    Ok((out, exhaustive))
}

struct Tally {
    claim: ClaimId,
    verdict: std::result::Result<Verdict, String>,
    counterexample: Option<CounterexampleEntry>,
}

fn tally(outcome: Result<super::ClaimOutcome>, claim: ClaimId, r: Option<&TransitFunction>) -> Tally {
    match outcome {
        Ok(o) => Tally {
            claim,
            verdict: Ok(o.verdict),
            counterexample: (o.verdict == Verdict::Counterexample).then(|| CounterexampleEntry {
                instance: o.instance,
                witness: o.evidence,
                transit_function: r.map(TransitFunction::to_document),
            }),
        },
        Err(e) => Tally { claim, verdict: Err(e.to_string()), counterexample: None },
    }
}

const PTOLEMAIC: usize = 0;
const DH: usize = 1;
const BRIDGED: usize = 2;

/// Runs the claims over the corpus described by `spec`. The report is
/// deterministic in `spec` and independent of the worker count.
pub fn run_corpus(claims: &[ClaimId], spec: &CorpusSpec) -> Result<CorpusReport> {
    let mut claims: Vec<ClaimId> = claims.to_vec();
    claims.sort();
    claims.dedup();
    let graph_claims: Vec<ClaimId> = claims.iter().copied().filter(|c| c.graph_evaluable()).collect();
    let tf_claims: Vec<ClaimId> = claims.iter().copied().filter(|c| c.tf_evaluable()).collect();

    let mut summaries: Vec<ClaimSummary> = claims.iter().map(|&c| ClaimSummary::new(c)).collect();
    let mut absorb = |t: Tally| {
        let s = summaries.iter_mut().find(|s| s.claim == t.claim).expect("claim selected");
        s.instances += 1;
        match t.verdict {
            Ok(Verdict::Consistent) => s.consistent += 1,
            Ok(Verdict::Vacuous) => s.vacuous += 1,
            Ok(Verdict::Counterexample) => s.counterexamples.extend(t.counterexample),
            Err(e) => s.errors.push(e),
        }
    };

    let (mut exhaustive, mut random, mut facts) = (0, 0, None);
    if !graph_claims.is_empty() {
        let (graphs, ex) = corpus_graphs(spec)?;
        exhaustive = ex;
        random = graphs.len() - ex;
        let per_graph: Vec<(Vec<Tally>, [bool; 3], &str)> = graphs
            .par_iter()
            .map(|(origin, g)| {
                let ctx = GraphContext::new(g);
                let tallies = graph_claims
                    .iter()
                    .map(|&c| tally(Ok(eval_graph(c, &ctx, origin.clone())), c, None))
                    .collect();
                let classes = [
                    ctx.member(GraphClass::Ptolemaic),
                    ctx.member(GraphClass::DistanceHereditary),
                    ctx.member(GraphClass::Bridged),
                ];
                (tallies, classes, origin.as_str())
            })
            .collect();
        let mut f = ClassFacts::default();
        for (tallies, cls, origin) in per_graph {
            tallies.into_iter().for_each(&mut absorb);
            f.graphs += 1;
            f.ptolemaic += cls[PTOLEMAIC] as usize;
            f.distance_hereditary += cls[DH] as usize;
            f.bridged += cls[BRIDGED] as usize;
            f.ptolemaic_not_dh += (cls[PTOLEMAIC] && !cls[DH]) as usize;
            f.ptolemaic_not_bridged += (cls[PTOLEMAIC] && !cls[BRIDGED]) as usize;
            if cls[DH] && !cls[BRIDGED] {
                f.dh_not_bridged += 1;
                f.dh_not_bridged_example.get_or_insert_with(|| origin.to_string());
            }
            if cls[BRIDGED] && !cls[DH] {
                f.bridged_not_dh += 1;
                f.bridged_not_dh_example.get_or_insert_with(|| origin.to_string());
            }
        }
        facts = Some(f);
    }

    let mut transit_functions = 0;
    if !tf_claims.is_empty() {
        let modes = 2usize;
        let total = spec.tf_sizes.len() * modes * spec.tf_samples;
        let sampled: Vec<Result<Vec<Tally>>> = (0..total)
            .into_par_iter()
            .map(|idx| {
                let i = idx % spec.tf_samples;
                let mode_idx = (idx / spec.tf_samples) % modes;
                let n = spec.tf_sizes[idx / (spec.tf_samples * modes)];
                let seed = mix(spec.seed, &[2 + mode_idx as u64, n as u64, i as u64]);
                let mode = if mode_idx == 0 {
                    SampleMode::Uniform
                } else {
                    SampleMode::IntervalMutation { mutations: i % (spec.tf_max_mutations + 1) }
                };
                let r = sample_transit_function(n, mode, seed)?;
                let label = match mode {
                    SampleMode::Uniform => format!("uniform n={n} seed={seed}"),
                    SampleMode::IntervalMutation { mutations } => {
                        format!("interval_mutation k={mutations} n={n} seed={seed}")
                    }
                };
                Ok(run_tf(&tf_claims, &r, &label))
            })
            .collect();
        for item in sampled {
            item?.into_iter().for_each(&mut absorb);
            transit_functions += 1;
        }
        if spec.include_fixtures {
            for fx in all_fixtures() {
                run_tf(&tf_claims, &fx.r, &format!("fixture:{}", fx.name))
                    .into_iter()
                    .for_each(&mut absorb);
                transit_functions += 1;
            }
        }
    }

    Ok(CorpusReport {
        spec: spec.clone(),
        exhaustive_graphs: exhaustive,
        random_graphs: random,
        transit_functions,
        claims: summaries,
        class_facts: facts,
    })
}

fn run_tf(claims: &[ClaimId], r: &TransitFunction, label: &str) -> Vec<Tally> {
    let ctx = TfContext::new(Cow::Borrowed(r));
    claims
        .iter()
        .map(|&c| tally(eval_tf(c, &ctx, label.to_string()), c, Some(r)))
        .collect()
}
