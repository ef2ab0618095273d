use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use edgereg::corpus::CorpusSpec;
use edgereg::error::Error;
use edgereg::graph::{Graph, GraphFamily};
use edgereg::verify::{explore_conjecture, run_suite, CheckId, Report, RunParams};
use edgereg::{betti_table, edge_ideal, sqf_power, sqf_symbolic, FieldSpec, SqfIdeal};

/// Exact invariants of edge ideals and their squarefree symbolic powers,
/// with a verification suite over small-graph corpora.
#[derive(Parser)]
#[command(name = "edgereg", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print matching-type invariants and structure predicates of a graph.
    Invariants {
        /// Graph: g6:STRING, a named family (path:4, cycle:5, star:3,
        /// startri:2, kbip:3,5), or a file path (graph6 or edge list).
        graph: String,
        /// Emit JSON instead of the text rendering.
        #[arg(long)]
        json: bool,
    },
    /// Print the minimal generators of an ideal attached to a graph.
    Ideal {
        graph: String,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Print the graded Betti table and regularity of an ideal.
    Betti {
        graph: String,
        #[command(flatten)]
        kind: KindArgs,
        /// Coefficient field: Q, or a prime p.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Run named checks over a corpus and write a JSON report.
    Verify {
        /// Comma-separated check ids, or 'all'.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Corpus: enumerate:N, g6file:PATH, edgefile:PATH, named:FAMILY:PARAMS.
        #[arg(long)]
        corpus: String,
        /// Conjunctive filters: connected, chordal, bipartite,
        /// cameron-walker, height>=K (repeatable, comma-separated).
        #[arg(long)]
        filter: Vec<String>,
        /// Worker threads (default: rayon's choice, or EDGEREG_JOBS).
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for sampled sub-checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<String>,
    },
    /// Hunt for tight instances or counterexamples to the regularity
    /// conjecture over exhaustively enumerated graphs.
    Explore {
        /// Enumerate all graphs with up to this many vertices (max 6).
        #[arg(long)]
        max_n: usize,
        /// Only exponents up to this value.
        #[arg(long)]
        max_s: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct KindArgs {
    /// Which ideal to build from the graph.
    #[arg(long, value_enum, default_value_t = IdealKind::Edge)]
    kind: IdealKind,
    /// Exponent for the power kinds.
    #[arg(short, long, default_value_t = 1)]
    s: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    Edge,
    SqfPower,
    SqfSymbolic,
}

fn parse_graph_arg(arg: &str) -> Result<Graph, Error> {
    if let Some(g6) = arg.strip_prefix("g6:") {
        return edgereg::graph6::parse_graph6(g6);
    }
    if let Some((family, params)) = arg.split_once(':') {
        if let Ok(family) = GraphFamily::from_str(family) {
            let params = params
                .split(',')
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Parameter(format!("invalid family parameter '{p}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Graph::build_named(family, &params);
        }
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path)?;
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .unwrap_or("");
        if first.starts_with("n ") {
            return edgereg::edgelist::parse_edge_list(&text);
        }
        return edgereg::graph6::parse_graph6(text.lines().next().unwrap_or(""));
    }
    Err(Error::Parameter(format!(
        "'{arg}' is neither g6:..., a named family, nor an existing file"
    )))
}

fn build_ideal(g: &Graph, kind: &KindArgs) -> Result<SqfIdeal, Error> {
    match kind.kind {
        IdealKind::Edge => Ok(edge_ideal(g)),
        IdealKind::SqfPower => sqf_power(g, kind.s),
        IdealKind::SqfSymbolic => sqf_symbolic(&edge_ideal(g), kind.s),
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    if s == "Q" || s == "q" || s == "0" {
        return Ok(FieldSpec::rationals());
    }
    let p: u32 = s
        .parse()
        .map_err(|_| Error::Parameter(format!("field must be Q or a prime, got '{s}'")))?;
    FieldSpec::prime(p)
}

fn emit_report(report: &Report, out: Option<&str>) -> Result<(), Error> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Parameter(format!("report serialization: {e}")))?;
    match out {
        Some(path) => fs::write(path, json)?,
        None => println!("{json}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Invariants { graph, json } => {
            let g = parse_graph_arg(&graph)?;
            let report = g.classify();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Parameter(e.to_string()))?
                );
            } else {
                println!("{report}");
            }
            Ok(0)
        }
        Cmd::Ideal { graph, kind } => {
            let g = parse_graph_arg(&graph)?;
            let ideal = build_ideal(&g, &kind)?;
            if ideal.is_zero() {
                println!("(0)");
                return Ok(0);
            }
            let stats = ideal.generator_degrees()?;
            println!(
                "{} minimal generator(s), degrees {:?}",
                ideal.gens().len(),
                stats.multiset
            );
            for m in ideal.gens() {
                println!("{m}");
            }
            Ok(0)
        }
        Cmd::Betti { graph, kind, field } => {
            let g = parse_graph_arg(&graph)?;
            let ideal = build_ideal(&g, &kind)?;
            let field = parse_field(&field)?;
            let table = betti_table(&ideal, &field)?;
            println!("{table}");
            Ok(0)
        }
        Cmd::Verify { checks, corpus, filter, jobs, seed, out } => {
            let ids: Vec<CheckId> = if checks == "all" {
                CheckId::ALL.to_vec()
            } else {
                checks
                    .split(',')
                    .map(CheckId::from_str)
                    .collect::<Result<Vec<_>, _>>()?
            };
            let spec = CorpusSpec::parse(&corpus, &filter)?;
            let graphs = spec.load()?;
            let rp = RunParams { s: None, seed };
            let report = run_suite(&graphs, &ids, &spec.describe(), &rp, jobs)?;
            eprintln!(
                "{} graph(s), {} check(s), {} ms",
                graphs.len(),
                ids.len(),
                report.wall_ms
            );
            eprint!("{}", report.summary_lines());
            emit_report(&report, out.as_deref())?;
            Ok(if report.total_failures() == 0 { 0 } else { 1 })
        }
        Cmd::Explore { max_n, max_s, jobs, out } => {
            let spec = CorpusSpec::parse(&format!("enumerate:{max_n}"), &[])?;
            let graphs = spec.load()?;
            let rp = RunParams::default();
            let report = explore_conjecture(&graphs, max_s, &spec.describe(), &rp, jobs)?;
            let violations = report.total_failures();
            let tight = report.tight.as_ref().map_or(0, Vec::len);
            eprintln!(
                "{} graph(s): {} tight instance(s), {} violation(s), {} ms",
                graphs.len(),
                tight,
                violations,
                report.wall_ms
            );
            if violations > 0 {
                eprintln!("conjecture violated; witnesses are in the report");
            }
            emit_report(&report, out.as_deref())?;
            Ok(if violations == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Capability(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
