use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use regtet::cache::CacheError;
use regtet::numtheory::{self, NumError};
use regtet::oracle::{self, OracleError};
use regtet::pipeline::{self, CountTable, PipelineError};
use regtet::rtgraph;

#[derive(Parser)]
#[command(
    name = "regtet",
    version,
    about = "Regular tetrahedra in the integer cube"
)]
struct Cli {
    /// Worker threads for the parallel phases (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Quadruple,
    Triangle,
}

#[derive(Subcommand)]
enum Command {
    /// Print A103158(n) for n = 1..=max-n.
    Sequence {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Irreducible-record cache, created or extended as needed.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Also print T(n), the raw tetrahedron count.
        #[arg(long)]
        emit_total: bool,
    },
    /// List the positive ordered primitive solutions of a² + b² + c² = 3d².
    Solutions {
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Count tetrahedra by brute force.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value = "triangle")]
        method: Method,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Lift the time guard of the triangle method.
        #[arg(long)]
        no_guard: bool,
    },
    /// Build the graph of face planes meeting at the tetrahedral angle.
    Graph {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_d: u64,
        /// Write the graph in DOT format ("-" for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print the connected components as CSV.
        #[arg(long)]
        components: bool,
    },
    /// Print n, A103158(n) and ln A103158(n) / ln(n + 1).
    Plotdata {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Guard(String),
    Io(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Guard(m) | Failure::Io(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<NumError> for Failure {
    fn from(e: NumError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Guard(e.to_string())
    }
}

impl From<CacheError> for Failure {
    fn from(e: CacheError) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Cache(c) => c.into(),
            PipelineError::Num(n) => n.into(),
            other => Failure::Internal(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct SequenceRow {
    n: u32,
    a103158: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<u64>,
}

#[derive(Serialize)]
struct OracleRow {
    n: u32,
    total: u64,
    a103158: u64,
}

#[derive(Serialize)]
struct SolutionsReport {
    d: u64,
    lambda: u64,
    gamma2: u64,
    pi_epsilon: u64,
    solutions: Vec<[i64; 4]>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn sequence_output(table: &CountTable, format: Format, emit_total: bool) -> String {
    let rows: Vec<SequenceRow> = table
        .rows
        .iter()
        .map(|r| SequenceRow {
            n: r.n,
            a103158: r.half,
            total: emit_total.then_some(r.total),
        })
        .collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = String::from(if emit_total {
                "n,a103158,total\n"
            } else {
                "n,a103158\n"
            });
            for r in rows {
                match r.total {
                    Some(t) => writeln!(out, "{},{},{t}", r.n, r.a103158),
                    None => writeln!(out, "{},{}", r.n, r.a103158),
                }
                .unwrap();
            }
            out
        }
    }
}

fn solutions_output(d: u64, format: Format) -> Result<String, Failure> {
    let solutions = numtheory::three_squares_primitive(d)?;
    let report = SolutionsReport {
        d,
        lambda: numtheory::lambda_count(d)?,
        gamma2: numtheory::gamma2(3 * d * d)?,
        pi_epsilon: numtheory::pi_epsilon(d)?,
        solutions: solutions.iter().map(|s| [s.a, s.b, s.c, s.d]).collect(),
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = format!(
                "# d={} lambda={} gamma2={} pi_epsilon={}\na,b,c,d\n",
                report.d, report.lambda, report.gamma2, report.pi_epsilon
            );
            for [a, b, c, d] in report.solutions {
                writeln!(out, "{a},{b},{c},{d}").unwrap();
            }
            out
        }
    })
}

fn oracle_output(
    max_n: u32,
    method: Method,
    no_guard: bool,
    format: Format,
) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let total = match (method, no_guard) {
            (Method::Quadruple, _) => oracle::quadruple_count(n)?,
            (Method::Triangle, false) => oracle::triangle_count(n)?,
            (Method::Triangle, true) => oracle::triangle_count_unguarded(n),
        };
        rows.push(OracleRow {
            n,
            total,
            a103158: total / 2,
        });
    }
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = String::from("n,total,a103158\n");
            for r in rows {
                writeln!(out, "{},{},{}", r.n, r.total, r.a103158).unwrap();
            }
            out
        }
    })
}

fn graph_output(max_d: u64, dot: Option<PathBuf>, components: bool) -> Result<String, Failure> {
    let graph = rtgraph::build_graph(max_d)?;
    let mut out = String::new();
    match dot {
        Some(path) if path.as_os_str() == "-" => out.push_str(&graph.to_dot()),
        Some(path) => fs::write(&path, graph.to_dot())
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => {}
    }
    if components {
        out.push_str(&graph.components_csv());
    } else if out.is_empty() {
        writeln!(
            out,
            "nodes={} edges={} self_loops={} components={}",
            graph.nodes.len(),
            graph.edges.len(),
            graph.self_loops.len(),
            graph.connected_components().len()
        )
        .unwrap();
    }
    Ok(out)
}

fn plot_output(table: &CountTable) -> String {
    let mut out = String::from("n,a103158,ratio\n");
    for r in &table.rows {
        let ratio = (r.half as f64).ln() / ((r.n + 1) as f64).ln();
        writeln!(out, "{},{},{ratio:.6}", r.n, r.half).unwrap();
    }
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    let threads = cli.threads.map(usize::from);
    let in_pool = |f: Box<dyn FnOnce() -> Result<String, Failure> + Send>| {
        pipeline::with_threads(threads, f)?
    };
    match cli.command {
        Command::Sequence {
            max_n,
            format,
            cache,
            emit_total,
        } => in_pool(Box::new(move || {
            let table = pipeline::sequence(max_n, cache.as_deref())?;
            Ok(sequence_output(&table, format, emit_total))
        })),
        Command::Solutions { d, format } => solutions_output(d, format),
        Command::Oracle {
            max_n,
            method,
            format,
            no_guard,
        } => in_pool(Box::new(move || {
            oracle_output(max_n, method, no_guard, format)
        })),
        Command::Graph {
            max_d,
            dot,
            components,
        } => graph_output(max_d, dot, components),
        Command::Plotdata { max_n, cache } => in_pool(Box::new(move || {
            let table = pipeline::sequence(max_n, cache.as_deref())?;
            Ok(plot_output(&table))
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
