//! One PASS/FAIL line per acceptance criterion.
//!
//! The process exits non-zero when any criterion's status differs from
//! `EXPECTED`. Criteria 1 and 2 are expected to FAIL: the engine refutes
//! "I_G satisfies (J0') iff G is bridged" (the 4-wheel satisfies (J0') yet
//! its rim is an isometric 4-cycle). For those two criteria the run also
//! insists that the failure is exactly that one claim, with every
//! counterexample replaying, so any other regression still breaks the build.

use std::process::ExitCode;
use std::time::Instant;

use betweenness::axioms::holds;
use betweenness::claims::{
    corpus_graphs, run_corpus, verify_graph_claim, verify_tf_claim, ClaimId, CorpusReport, CorpusSpec,
    CounterexampleEntry, Evidence, Subject, Verdict,
};
use betweenness::fixtures::{verify_all, CheckStatus, DISCREPANCIES};
use betweenness::graph::{enumerate_connected_labeled, enumerate_induced_cycles, parse_graph6, Graph};
use betweenness::recognize::{
    classify, dh_oracle_definition, dh_oracle_pruning, first_pattern, is_chordal, is_distance_hereditary,
    is_ptolemaic, ptolemaic_oracle_inequality, PatternId,
};
use betweenness::{check_axiom, induced_path_function, interval_function, AxiomId, TransitFunction};
use rayon::prelude::*;

const FIVE: [ClaimId; 5] = [
    ClaimId::PropJ2p,
    ClaimId::ThmJ3Hhp,
    ClaimId::ThmJ2pJ3pDh,
    ClaimId::ThmJ0Ptolemaic,
    ClaimId::ThmJ0pBridged,
];

const LATTICE: [ClaimId; 9] = [
    ClaimId::ImpT1B4T3,
    ClaimId::ImpB3B4B1,
    ClaimId::ImpJ0J0p,
    ClaimId::ImpJ3J2pJ3p,
    ClaimId::PropB2B3J1,
    ClaimId::PropJ1B2B1,
    ClaimId::ThmJ0J2Cnfree,
    ClaimId::LemJ0B3B2Conn,
    ClaimId::LemB1B2Conn,
];

const EXPECTED: [bool; 7] = [false, false, true, true, true, true, true];

/// Replay bookkeeping for criterion 7.
#[derive(Default)]
struct Replays {
    checked: usize,
    failed: Vec<String>,
}

impl Replays {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed.push(what());
        }
    }
}

fn line(k: usize, pass: bool, text: &str) {
    println!("{} criterion {k}: {text}", if pass { "PASS" } else { "FAIL" });
}

fn graph_of(instance: &str) -> Graph {
    let code = instance.rsplit("graph6:").next().expect("graph instances carry their code");
    parse_graph6(code).expect("instances hold valid graph6")
}

fn replay_entry(e: &CounterexampleEntry, claim: ClaimId) -> bool {
    let outcome = betweenness::claims::ClaimOutcome {
        claim,
        instance: e.instance.clone(),
        verdict: Verdict::Counterexample,
        evidence: e.witness.clone(),
    };
    match &e.transit_function {
        Some(doc) => outcome.replay(Subject::Tf(&doc.to_transit_function().unwrap())),
        None => outcome.replay(Subject::Graph(&graph_of(&e.instance))),
    }
}

/// Counterexamples of THM_J0P_BRIDGED must all be "(J0') holds, an isometric
/// hole exists".
fn bridged_failure_is_genuine(rep: &CorpusReport, replays: &mut Replays) -> (usize, bool) {
    let s = rep.summary(ClaimId::ThmJ0pBridged).unwrap();
    let mut shape_ok = true;
    for e in &s.counterexamples {
        let g = graph_of(&e.instance);
        let j0p = holds(&interval_function(&g).unwrap(), AxiomId::J0Prime);
        let hole = matches!(
            e.witness.as_slice(),
            [Evidence::Pattern { pattern: PatternId::IsometricHole, .. }]
        );
        shape_ok &= j0p && hole;
        replays.record(replay_entry(e, ClaimId::ThmJ0pBridged), || format!("bridged: {}", e.instance));
    }
    (s.counterexamples.len(), shape_ok)
}

fn equivalence_criterion(
    k: usize,
    rep: &CorpusReport,
    replays: &mut Replays,
    extra: &str,
) -> (bool, bool) {
    let mut parts = Vec::new();
    let mut others_clean = true;
    for c in FIVE {
        let s = rep.summary(c).unwrap();
        parts.push(format!("{c} {}", s.counterexamples.len()));
        for e in &s.counterexamples {
            if c != ClaimId::ThmJ0pBridged {
                others_clean = false;
                replays.record(replay_entry(e, c), || format!("{c}: {}", e.instance));
            }
        }
        others_clean &= s.errors.is_empty();
    }
    let (bridged, genuine) = bridged_failure_is_genuine(rep, replays);
    let pass = rep.counterexample_count() == 0 && rep.error_count() == 0;
    let mut text = format!("counterexamples [{}]{extra}", parts.join(", "));
    if bridged > 0 {
        text.push_str(&format!(
            "; THM_J0P_BRIDGED is refuted on {bridged} graphs, each satisfying (J0') with an isometric hole \
             (first: {})",
            rep.summary(ClaimId::ThmJ0pBridged).unwrap().counterexamples[0].instance
        ));
    }
    line(k, pass, &text);
    // The expected failure must be exactly the refuted claim.
    (pass, others_clean && genuine && (pass || bridged > 0))
}

fn brute_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter(|mask| {
            let mut seen = 1u64;
            loop {
                let mut next = seen;
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 && (seen >> u & 1 == 1 || seen >> v & 1 == 1) {
                        next |= 1 << u | 1 << v;
                    }
                }
                if next == seen {
                    break;
                }
                seen = next;
            }
            seen.count_ones() as usize == n
        })
        .count()
}

fn criterion_1(replays: &mut Replays) -> (bool, bool) {
    let t = Instant::now();
    let expected: usize = (1..=6).map(brute_connected_count).sum();
    let spec = CorpusSpec { random_count: 0, ..CorpusSpec::default() };
    let rep = run_corpus(&FIVE, &spec).unwrap();
    let count_ok = expected == 27_476 && rep.exhaustive_graphs == expected;
    let extra = format!(
        " over {} graphs (oracle count {expected}) in {:.1}s",
        rep.exhaustive_graphs,
        t.elapsed().as_secs_f64()
    );
    let (pass, explained) = equivalence_criterion(1, &rep, replays, &extra);
    (pass && count_ok, explained && count_ok)
}

fn criterion_2(replays: &mut Replays) -> (bool, bool) {
    let t = Instant::now();
    let spec = CorpusSpec { exhaustive_max_n: 0, ..CorpusSpec::default() };
    let rep = run_corpus(&FIVE, &spec).unwrap();
    let again = run_corpus(&FIVE, &spec).unwrap();
    let first = serde_json::to_string(&rep).unwrap();
    let identical = first == serde_json::to_string(&again).unwrap();
    let shape_ok = rep.random_graphs == 1000 && {
        let (graphs, _) = corpus_graphs(&spec).unwrap();
        graphs.iter().all(|(_, g)| (7..=10).contains(&g.n()) && g.is_connected())
    };
    let extra = format!(
        " over {} random graphs, rerun byte-identical: {identical} in {:.1}s",
        rep.random_graphs,
        t.elapsed().as_secs_f64()
    );
    let (pass, explained) = equivalence_criterion(2, &rep, replays, &extra);
    (pass && identical && shape_ok, explained && identical && shape_ok)
}

fn criterion_3(replays: &mut Replays) -> bool {
    let reports = verify_all();
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let confirmed = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.status == CheckStatus::Confirmed)
        .count();
    let known = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.status == CheckStatus::KnownDiscrepancy)
        .count();
    for r in &reports {
        let fx = betweenness::fixtures::load_fixture(r.fixture).unwrap();
        for c in &r.checks {
            if let Some(w) = &c.witness {
                replays.record(w.falsifies(&fx.r), || format!("{}: {} witness", r.fixture, c.axiom));
            }
        }
    }
    let pass = reports.len() == 13 && total >= 26 && reports.iter().all(|r| r.accounted()) && known == DISCREPANCIES.len();
    line(
        3,
        pass,
        &format!(
            "{} fixtures, {total} claimed verdicts: {confirmed} reproduced, {known} registered discrepancies with replayable witnesses",
            reports.len()
        ),
    );
    pass
}

fn criterion_4(replays: &mut Replays) -> bool {
    let t = Instant::now();
    let spec = CorpusSpec::default();
    let rep = run_corpus(&LATTICE, &spec).unwrap();
    let mut pass = spec.tf_samples >= 10_000 && spec.tf_sizes == [4, 5, 6] && rep.error_count() == 0;
    let mut weak = Vec::new();
    for s in &rep.claims {
        for e in &s.counterexamples {
            replays.record(replay_entry(e, s.claim), || format!("{}: {}", s.claim, e.instance));
        }
        if !s.counterexamples.is_empty() || s.consistent == 0 {
            pass = false;
            weak.push(format!("{} ({} counterexamples, {} non-vacuous)", s.claim, s.counterexamples.len(), s.consistent));
        }
    }
    let min_nonvacuous = rep.claims.iter().map(|s| s.consistent).min().unwrap_or(0);
    let mut text = format!(
        "{} implications over {} transit functions ({} per size per mode plus fixtures): {} counterexamples, \
         fewest non-vacuous instances {min_nonvacuous}, {:.1}s",
        LATTICE.len(),
        rep.transit_functions,
        spec.tf_samples,
        rep.counterexample_count(),
        t.elapsed().as_secs_f64()
    );
    if !weak.is_empty() {
        text.push_str(&format!("; failing: {}", weak.join(", ")));
    }
    line(4, pass, &text);
    pass
}

fn criterion_5(replays: &mut Replays) -> bool {
    let graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_connected_labeled(n).unwrap()).collect();
    // (ptolemaic count, DH count, failures, replays) per graph
    type PerGraph = (usize, usize, Vec<String>, Vec<(bool, String)>);
    let results: Vec<PerGraph> = graphs
        .par_iter()
        .map(|g| {
            let mut ptol = 0;
            let mut dh = 0;
            let mut bad = Vec::new();
            let mut replay = Vec::new();
            let code = g.to_graph6();
            let r = interval_function(g).unwrap();
            let gr = r.underlying_graph();
            let i_gr = interval_function(&gr).unwrap();
            if is_ptolemaic(g).unwrap().member {
                ptol += 1;
                let premises = [AxiomId::B3, AxiomId::J0, AxiomId::J2].iter().all(|&a| holds(&r, a));
                let out = verify_tf_claim(ClaimId::ThmB3J0J2PtolREqI, &r).unwrap();
                replay.push((out.replay(Subject::Tf(&r)), format!("THM_B3J0J2 on {code}")));
                if !premises || out.verdict != Verdict::Consistent || !r.same_values(&i_gr) {
                    bad.push(format!("ptolemaic {code}"));
                }
            }
            if is_distance_hereditary(g).unwrap().member {
                dh += 1;
                let axioms = [AxiomId::B2, AxiomId::B3, AxiomId::J2, AxiomId::J2Prime, AxiomId::J3Prime];
                let premises = axioms.iter().all(|&a| holds(&r, a));
                let j_gr = induced_path_function(&gr).unwrap();
                let mut ok = premises && j_gr.same_values(&i_gr) && r.same_values(&i_gr);
                for c in [ClaimId::ThmDish, ClaimId::ThmDish1] {
                    let out = verify_tf_claim(c, &r).unwrap();
                    replay.push((out.replay(Subject::Tf(&r)), format!("{c} on {code}")));
                    ok &= out.verdict == Verdict::Consistent;
                }
                if !ok {
                    bad.push(format!("distance hereditary {code}"));
                }
            }
            (ptol, dh, bad, replay)
        })
        .collect();
    let (mut ptol, mut dh, mut bad) = (0, 0, Vec::new());
    for (p, d, b, rp) in results {
        ptol += p;
        dh += d;
        bad.extend(b);
        for (ok, what) in rp {
            replays.record(ok, || what);
        }
    }
    let pass = bad.is_empty() && ptol > 0 && dh > 0;
    let mut text = format!(
        "R = I_G on {ptol} Ptolemaic graphs satisfies (b3),(J0),(J2) with R = I_(G_R); on {dh} distance-hereditary \
         graphs satisfies (b2),(b3),(J2),(J2'),(J3') with R = I_(G_R) = J_(G_R); failures {}",
        bad.len()
    );
    if let Some(first) = bad.first() {
        text.push_str(&format!(" (first: {first})"));
    }
    line(5, pass, &text);
    pass
}

#[derive(Default)]
struct OracleTally {
    graphs: usize,
    disagreements: Vec<String>,
}

fn criterion_6(replays: &mut Replays) -> bool {
    let t = Instant::now();
    let fan3 = [PatternId::Fan3];
    let hhd3fan = [PatternId::House, PatternId::Hole, PatternId::Domino, PatternId::Fan3];
    let per_n: Vec<(OracleTally, usize, Vec<String>)> = (1..=7)
        .map(|n| {
            enumerate_connected_labeled(n)
                .unwrap()
                .par_bridge()
                .fold(
                    || (OracleTally::default(), 0usize, Vec::new()),
                    |(mut tally, mut checked, mut failed), g| {
                        tally.graphs += 1;
                        let chordal_rep = is_chordal(&g).unwrap();
                        let chordal = chordal_rep.member;
                        let no_cycles = enumerate_induced_cycles(&g, 4).is_empty();
                        let dh_patterns = first_pattern(&g, &hhd3fan).is_none();
                        let dh_pruning = dh_oracle_pruning(&g);
                        let dh_def = dh_oracle_definition(&g).unwrap();
                        let ptol_fan = chordal && first_pattern(&g, &fan3).is_none();
                        let ptol_dh = chordal && dh_patterns;
                        let ptol_ineq = ptolemaic_oracle_inequality(&g).unwrap();
                        let agree = chordal == no_cycles
                            && dh_patterns == dh_pruning
                            && dh_pruning == dh_def
                            && ptol_fan == ptol_dh
                            && ptol_dh == ptol_ineq;
                        if !agree && tally.disagreements.len() < 5 {
                            tally.disagreements.push(g.to_graph6());
                        } else if !agree {
                            tally.disagreements.push(String::new());
                        }
                        // every class certificate from the recognizers is replayed too
                        for rep in [chordal_rep, is_distance_hereditary(&g).unwrap(), is_ptolemaic(&g).unwrap()] {
                            checked += 1;
                            if !rep.replay(&g) && failed.len() < 5 {
                                failed.push(format!("{} on {}", rep.class, g.to_graph6()));
                            }
                        }
                        (tally, checked, failed)
                    },
                )
                .reduce(
                    || (OracleTally::default(), 0, Vec::new()),
                    |(mut a, ca, mut fa), (b, cb, fb)| {
                        a.graphs += b.graphs;
                        a.disagreements.extend(b.disagreements);
                        fa.extend(fb);
                        (a, ca + cb, fa)
                    },
                )
        })
        .collect();
    let mut graphs = 0;
    let mut disagreements = Vec::new();
    for (tally, checked, failed) in per_n {
        graphs += tally.graphs;
        disagreements.extend(tally.disagreements);
        replays.checked += checked;
        replays.failed.extend(failed);
    }
    let pass = graphs == 1 + 1 + 4 + 38 + 728 + 26_704 + 1_866_256 && disagreements.is_empty();
    line(
        6,
        pass,
        &format!(
            "chordal, distance-hereditary and Ptolemaic oracles agree on {graphs} connected graphs with n <= 7 \
             ({} disagreements) in {:.1}s",
            disagreements.len(),
            t.elapsed().as_secs_f64()
        ),
    );
    pass
}

fn criterion_7(replays: &mut Replays) -> bool {
    // Certificates and witnesses from the n <= 6 corpus and the sampled
    // transit functions, on top of everything recorded above.
    for n in 1..=6 {
        for g in enumerate_connected_labeled(n).unwrap() {
            for rep in classify(&g).unwrap() {
                replays.record(rep.replay(&g), || format!("{} certificate on {}", rep.class, g.to_graph6()));
            }
            for c in FIVE {
                let out = verify_graph_claim(c, &g).unwrap();
                replays.record(out.replay(Subject::Graph(&g)), || format!("{c} evidence on {}", g.to_graph6()));
            }
            let r = interval_function(&g).unwrap();
            witnesses(&r, replays, &g.to_graph6());
        }
    }
    for n in [4, 5, 6] {
        for seed in 0..500 {
            for mode in [
                betweenness::claims::SampleMode::Uniform,
                betweenness::claims::SampleMode::IntervalMutation { mutations: (seed % 4) as usize },
            ] {
                let r = betweenness::claims::sample_transit_function(n, mode, seed).unwrap();
                witnesses(&r, replays, &format!("sample n={n} seed={seed}"));
                let ctx_label = format!("sample n={n} seed={seed}");
                for c in ClaimId::ALL.into_iter().filter(|c| c.tf_evaluable()) {
                    let out = verify_tf_claim(c, &r).unwrap();
                    replays.record(out.replay(Subject::Tf(&r)), || format!("{c} evidence on {ctx_label}"));
                }
            }
        }
    }
    let pass = replays.failed.is_empty();
    let mut text = format!("{} certificates and witnesses replayed, {} failed", replays.checked, replays.failed.len());
    if let Some(first) = replays.failed.first() {
        text.push_str(&format!(" (first: {first})"));
    }
    line(7, pass, &text);
    pass
}

fn witnesses(r: &TransitFunction, replays: &mut Replays, label: &str) {
    for a in AxiomId::ALL {
        if let Some(w) = check_axiom(r, a).witness {
            replays.record(w.falsifies(r), || format!("{a} witness on {label}"));
        }
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut replays = Replays::default();
    let (p1, explained1) = criterion_1(&mut replays);
    let (p2, explained2) = criterion_2(&mut replays);
    let status = [
        p1,
        p2,
        criterion_3(&mut replays),
        criterion_4(&mut replays),
        criterion_5(&mut replays),
        criterion_6(&mut replays),
        criterion_7(&mut replays),
    ];
    println!("acceptance finished in {:.1}s", started.elapsed().as_secs_f64());
    let mut ok = status == EXPECTED;
    if !p1 && !explained1 || !p2 && !explained2 {
        ok = false;
        println!("criteria 1/2 fail for a reason other than the refuted bridged characterization");
    }
    for (k, (&got, &want)) in status.iter().zip(&EXPECTED).enumerate() {
        if got != want {
            println!("criterion {} is {} but {} was recorded", k + 1, pass_word(got), pass_word(want));
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn pass_word(p: bool) -> &'static str {
    if p {
        "PASS"
    } else {
        "FAIL"
    }
}
