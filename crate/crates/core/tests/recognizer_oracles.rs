mod common;

use betweenness::graph::enumerate_connected_labeled;
use betweenness::recognize::{
    classify, dh_oracle_definition, dh_oracle_pruning, find_induced_pattern, ptolemaic_oracle_inequality,
    Certificate, GraphClass, PatternId,
};
use betweenness::Graph;
use common::*;
use proptest::prelude::*;

fn reference_member(g: &Graph, c: GraphClass) -> bool {
    match c {
        GraphClass::Chordal => chordal(g),
        GraphClass::DistanceHereditary => distance_hereditary(g),
        GraphClass::Ptolemaic => chordal(g) && distance_hereditary(g),
        GraphClass::Bridged => bridged(g),
        GraphClass::HhdFree => !has_hole(g) && !contains_induced(g, &house()) && !contains_induced(g, &domino()),
        GraphClass::Hhp3fanFree => hhp3fan_free(g),
        GraphClass::Hhd3fanFree => hhd3fan_free(g),
    }
}

fn reference_pattern(g: &Graph, p: PatternId) -> bool {
    match p {
        PatternId::House => contains_induced(g, &house()),
        PatternId::Domino => contains_induced(g, &domino()),
        PatternId::Fan3 => contains_induced(g, &fan3()),
        PatternId::PGraph => contains_induced(g, &pgraph()),
        PatternId::Hole => has_hole(g),
        PatternId::InducedC4Plus => !chordal(g),
        PatternId::IsometricHole => !bridged(g),
    }
}

fn check_graph(g: &Graph) -> Result<(), String> {
    let code = g.to_graph6();
    for report in classify(g).unwrap() {
        if report.member != reference_member(g, report.class) {
            return Err(format!("{code}: {} says {}", report.class, report.member));
        }
        if !report.replay(g) {
            return Err(format!("{code}: certificate for {} does not replay", report.class));
        }
        let dh_member = report.class == GraphClass::DistanceHereditary && report.member;
        if dh_member && !matches!(report.certificate, Certificate::Pruning { .. }) {
            return Err(format!("{code}: DH member without a pruning sequence"));
        }
    }
    for p in PatternId::ALL {
        let found = find_induced_pattern(g, p);
        if found.is_some() != reference_pattern(g, p) {
            return Err(format!("{code}: pattern {p} found = {}", found.is_some()));
        }
        if let Some(occ) = found {
            if !occ.replay(g) {
                return Err(format!("{code}: occurrence {occ:?} does not replay"));
            }
        }
    }
    let dh = distance_hereditary(g);
    if dh_oracle_pruning(g) != dh || dh_oracle_definition(g).unwrap() != dh {
        return Err(format!("{code}: DH oracles disagree"));
    }
    if ptolemaic_oracle_inequality(g).unwrap() != (dh && chordal(g)) {
        return Err(format!("{code}: four-point inequality disagrees"));
    }
    Ok(())
}

#[test]
fn all_connected_graphs_up_to_six() {
    for n in 1..=6 {
        for g in enumerate_connected_labeled(n).unwrap() {
            check_graph(&g).unwrap();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn random_connected_graphs(g in arb_connected_graph(7, 9)) {
        check_graph(&g).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn fixed_patterns_in_their_own_graphs() {
    for (p, g) in [
        (PatternId::House, house()),
        (PatternId::Domino, domino()),
        (PatternId::Fan3, fan3()),
        (PatternId::PGraph, pgraph()),
    ] {
        let occ = find_induced_pattern(&g, p).unwrap();
        assert!(occ.replay(&g));
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let g = house();
    let mut occ = find_induced_pattern(&g, PatternId::House).unwrap();
    occ.vertices.swap(0, 4);
    assert!(!occ.replay(&g));
    let mut occ = find_induced_pattern(&g, PatternId::InducedC4Plus).unwrap();
    occ.vertices.pop();
    assert!(!occ.replay(&g));
}
