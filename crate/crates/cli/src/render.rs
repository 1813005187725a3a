use std::fmt::Write;

use betweenness::claims::CorpusReport;
use betweenness::fixtures::{CheckStatus, FixtureReport};
use betweenness::recognize::{Certificate, RecognitionReport};
use betweenness::{AxiomResult, Graph, TransitFunction};
use serde::Serialize;

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: &mut dyn Iterator<Item = &str>| {
        let line: Vec<String> = cells.zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    emit(&mut header.iter().copied());
    for row in rows {
        emit(&mut row.iter().map(String::as_str));
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn axioms_table(source: &str, r: &TransitFunction, results: &[AxiomResult]) -> String {
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|res| {
            let detail = match (&res.witness, res.note) {
                (Some(w), _) => format!("witness {}", w.describe(r)),
                (None, Some(note)) => note.to_string(),
                (None, None) => String::new(),
            };
            vec![res.axiom.to_string(), yes_no(res.holds), detail]
        })
        .collect();
    format!("{source} (n = {})\n{}", r.n(), table(&["axiom", "holds", "detail"], &rows))
}

#[derive(Serialize)]
struct AxiomsReport<'a> {
    source: &'a str,
    n: usize,
    all_hold: bool,
    results: Vec<NamedResult<'a>>,
}

#[derive(Serialize)]
struct NamedResult<'a> {
    #[serde(flatten)]
    result: &'a AxiomResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_named: Option<String>,
}

pub fn axioms_json(source: &str, r: &TransitFunction, results: &[AxiomResult]) -> String {
    json(&AxiomsReport {
        source,
        n: r.n(),
        all_hold: results.iter().all(|res| res.holds),
        results: results
            .iter()
            .map(|result| NamedResult {
                result,
                witness_named: result.witness.as_ref().map(|w| w.describe(r)),
            })
            .collect(),
    })
}

fn certificate(c: &Certificate) -> String {
    match c {
        Certificate::Pattern(occ) => format!("induced {} on {:?}", occ.pattern, occ.vertices),
        Certificate::Order { order } => format!("perfect elimination order {order:?}"),
        Certificate::Pruning { pruning } => {
            let steps: Vec<String> = pruning
                .iter()
                .map(|s| {
                    let rule = serde_json::to_value(s.rule).expect("rules serialize");
                    format!("{} {} of {}", s.vertex, rule.as_str().unwrap_or("?"), s.partner)
                })
                .collect();
            format!("pruning: {}", steps.join(", "))
        }
        Certificate::None => String::new(),
    }
}

pub fn classify_table(g: &Graph, reports: &[RecognitionReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| vec![r.class.to_string(), yes_no(r.member), certificate(&r.certificate)])
        .collect();
    format!(
        "graph6 {} (n = {}, m = {})\n{}",
        g.to_graph6(),
        g.n(),
        g.edge_count(),
        table(&["class", "member", "certificate"], &rows)
    )
}

pub fn theorems_table(rep: &CorpusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "corpus: {} exhaustive graphs (n <= {}), {} random graphs, {} transit functions, seed {}",
        rep.exhaustive_graphs, rep.spec.exhaustive_max_n, rep.random_graphs, rep.transit_functions, rep.spec.seed
    );
    let rows: Vec<Vec<String>> = rep
        .claims
        .iter()
        .map(|s| {
            vec![
                s.claim.to_string(),
                serde_json::to_value(s.kind).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default(),
                s.instances.to_string(),
                s.consistent.to_string(),
                s.vacuous.to_string(),
                s.counterexamples.len().to_string(),
                s.errors.len().to_string(),
            ]
        })
        .collect();
    out.push_str(&table(
        &["claim", "kind", "instances", "consistent", "vacuous", "counterexamples", "errors"],
        &rows,
    ));
    for s in &rep.claims {
        if let Some(first) = s.counterexamples.first() {
            let evidence = serde_json::to_string(&first.witness).expect("evidence serializes");
            let _ = writeln!(out, "{}: first counterexample {} evidence {evidence}", s.claim, first.instance);
        }
        if let Some(e) = s.errors.first() {
            let _ = writeln!(out, "{}: first error {e}", s.claim);
        }
    }
    if let Some(f) = &rep.class_facts {
        let _ = writeln!(
            out,
            "classes: {} ptolemaic, {} distance hereditary, {} bridged; ptolemaic but not DH {}, \
             ptolemaic but not bridged {}, DH but not bridged {}, bridged but not DH {}",
            f.ptolemaic,
            f.distance_hereditary,
            f.bridged,
            f.ptolemaic_not_dh,
            f.ptolemaic_not_bridged,
            f.dh_not_bridged,
            f.bridged_not_dh
        );
    }
    let _ = writeln!(out, "total counterexamples: {}", rep.counterexample_count());
    out
}

pub fn fixtures_table(reports: &[FixtureReport]) -> String {
    let mut rows = Vec::new();
    for r in reports {
        for c in &r.checks {
            let status = match c.status {
                CheckStatus::Confirmed => "confirmed",
                CheckStatus::KnownDiscrepancy => "known discrepancy",
                CheckStatus::Discrepancy => "DISCREPANCY",
            };
            rows.push(vec![
                r.fixture.to_string(),
                c.axiom.to_string(),
                if c.claimed { "holds" } else { "fails" }.to_string(),
                if c.engine { "holds" } else { "fails" }.to_string(),
                status.to_string(),
                c.witness_named.clone().unwrap_or_default(),
            ]);
        }
    }
    let mut out = table(&["fixture", "axiom", "claimed", "engine", "status", "witness"], &rows);
    let confirmed = reports.iter().filter(|r| r.confirmed()).count();
    let accounted = reports.iter().filter(|r| r.accounted()).count();
    let _ = writeln!(
        out,
        "{confirmed}/{} fixtures confirmed exactly, {accounted}/{} with every disagreement registered",
        reports.len(),
        reports.len()
    );
    for r in reports {
        if let Some(note) = r.note {
            let _ = writeln!(out, "note on {}: {note}", r.fixture);
        }
    }
    out
}
