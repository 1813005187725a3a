//! `betweenness`: axiom checks, class recognition, corpus runs and fixture
//! verification from the command line.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betweenness::axioms::parse_axiom_list;
use betweenness::claims::{parse_claim_list, run_corpus, ClaimId, CorpusSpec};
use betweenness::fixtures::{all_fixtures, load_fixture, verify_all};
use betweenness::graph::{generate, parse_graph, GraphKind};
use betweenness::recognize::classify;
use betweenness::transit::TransitDocument;
use betweenness::{check_axiom, induced_path_function, interval_function, Graph, TransitFunction};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Worker threads for corpus runs. Results never depend on it.
const WORKERS_ENV: &str = "BETWEENNESS_WORKERS";

#[derive(Parser)]
#[command(name = "betweenness", version, about = "Transit functions, betweenness axioms and graph classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms on a transit function or on a graph's interval function.
    Axioms(AxiomsArgs),
    /// Decide all seven graph classes, with certificates.
    Classify(ClassifyArgs),
    /// Run claims over the graph and transit-function corpus.
    Theorems(TheoremsArgs),
    /// Verify the worked examples against their claimed verdicts.
    Fixtures(FixturesArgs),
    /// Write a named or random graph.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["graph", "tf", "fixture"])))]
struct AxiomsArgs {
    /// Graph file (graph6 or edge-list JSON); its interval function is checked.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Transit-function document (JSON).
    #[arg(long)]
    tf: Option<PathBuf>,
    /// A built-in worked example, by name.
    #[arg(long)]
    fixture: Option<String>,
    /// Comma-separated axiom names, or `all`.
    #[arg(long, default_value = "all")]
    axioms: String,
    /// Use the induced-path function instead of the interval function.
    #[arg(long, requires = "graph")]
    induced: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Graph file (graph6 or edge-list JSON).
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Args)]
struct TheoremsArgs {
    /// Comma-separated claim ids, or `all`.
    #[arg(long, default_value = "all")]
    claims: String,
    /// Enumerate every connected graph with up to this many vertices.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Number of seeded random connected graphs.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sampled transit functions per size per sampling mode.
    #[arg(long, default_value_t = 10_000)]
    tf_samples: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Args)]
struct FixturesArgs {
    /// Also write every fixture as a transit-function document into DIR.
    #[arg(long, value_name = "DIR")]
    write: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Complete,
    Cycle,
    Path,
    House,
    Domino,
    Fan3,
    Pgraph,
    Er,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertex count for complete, cycle, path and er.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for er.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

/// A failure that maps to exit code 2.
struct InputError(String);

impl From<betweenness::Error> for InputError {
    fn from(e: betweenness::Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(InputError(msg)) = configure_workers() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Axioms(a) => cmd_axioms(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Theorems(a) => cmd_theorems(a),
        Command::Fixtures(a) => cmd_fixtures(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_workers() -> Result<(), InputError> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| InputError(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| InputError(format!("cannot start {n} workers: {e}")))
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, InputError> {
    parse_graph(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_tf(path: &Path) -> Result<TransitFunction, InputError> {
    TransitDocument::parse(&read(path)?)
        .and_then(|d| d.to_transit_function())
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn exit_if(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_axioms(a: AxiomsArgs) -> CmdResult {
    let axioms = parse_axiom_list(&a.axioms)?;
    let (source, r) = if let Some(path) = &a.graph {
        let g = read_graph(path)?;
        if a.induced {
            (format!("J_G of {}", path.display()), induced_path_function(&g)?)
        } else {
            (format!("I_G of {}", path.display()), interval_function(&g)?)
        }
    } else if let Some(path) = &a.tf {
        (path.display().to_string(), read_tf(path)?)
    } else {
        let name = a.fixture.as_deref().expect("clap enforces one source");
        let fx = load_fixture(name)?;
        (format!("fixture {}", fx.name), fx.r)
    };
    let results: Vec<_> = axioms.iter().map(|&ax| check_axiom(&r, ax)).collect();
    let ok = results.iter().all(|res| res.holds);
    match a.format {
        ReportFormat::Table => print!("{}", render::axioms_table(&source, &r, &results)),
        ReportFormat::Json => println!("{}", render::axioms_json(&source, &r, &results)),
    }
    Ok(exit_if(ok))
}

fn cmd_classify(a: ClassifyArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let reports = classify(&g)?;
    match a.format {
        ReportFormat::Table => print!("{}", render::classify_table(&g, &reports)),
        ReportFormat::Json => println!("{}", render::json(&serde_json::json!({
            "graph6": g.to_graph6(),
            "n": g.n(),
            "classes": reports,
        }))),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_theorems(a: TheoremsArgs) -> CmdResult {
    let claims: Vec<ClaimId> = parse_claim_list(&a.claims)?;
    if a.max_n > betweenness::graph::MAX_ENUMERATION_N {
        return Err(InputError(format!(
            "--max-n {} exceeds the exhaustive enumeration limit {}",
            a.max_n,
            betweenness::graph::MAX_ENUMERATION_N
        )));
    }
    let spec = CorpusSpec {
        exhaustive_max_n: a.max_n,
        random_count: a.samples,
        seed: a.seed,
        tf_samples: a.tf_samples,
        ..CorpusSpec::default()
    };
    let report = run_corpus(&claims, &spec)?;
    match a.format {
        ReportFormat::Table => print!("{}", render::theorems_table(&report)),
        ReportFormat::Json => println!("{}", render::json(&report)),
    }
    Ok(exit_if(report.counterexample_count() == 0 && report.error_count() == 0))
}

fn cmd_fixtures(a: FixturesArgs) -> CmdResult {
    if let Some(dir) = &a.write {
        fs::create_dir_all(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
        for fx in all_fixtures() {
            let path = dir.join(format!("{}.json", fx.name.to_ascii_lowercase()));
            fs::write(&path, fx.to_document().to_json() + "\n")
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        }
    }
    let reports = verify_all();
    match a.format {
        ReportFormat::Table => print!("{}", render::fixtures_table(&reports)),
        ReportFormat::Json => println!("{}", render::json(&serde_json::json!({
            "fixtures": reports,
            "known_discrepancies": betweenness::fixtures::DISCREPANCIES,
        }))),
    }
    Ok(exit_if(reports.iter().all(|r| r.accounted())))
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let need_n = || a.n.ok_or_else(|| InputError("--n is required for this kind".into()));
    let kind = match a.kind {
        Kind::Complete => GraphKind::Complete(need_n()?),
        Kind::Cycle => GraphKind::Cycle(need_n()?),
        Kind::Path => GraphKind::Path(need_n()?),
        Kind::House => GraphKind::House,
        Kind::Domino => GraphKind::Domino,
        Kind::Fan3 => GraphKind::Fan3,
        Kind::Pgraph => GraphKind::PGraph,
        Kind::Er => GraphKind::ErRandom { n: need_n()?, p: a.p, seed: a.seed },
    };
    let g = generate(kind)?;
    let text = match a.format {
        GraphFormat::Graph6 => g.to_graph6(),
        GraphFormat::Edges => render::json(&g.to_edge_list_document()),
    } + "\n";
    match &a.output {
        Some(path) => fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
