use clap::{Parser, Subcommand};
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use toughham_cli::{
    analyze, invariant_report, run_suite, search, RecordLog, SearchMode, SearchParams, Suite,
    SuiteConfig,
};
use toughham_core::engine::{EngineError, EngineOptions};
use toughham_core::graph::parse_graph;
use toughham_core::{Graph, Rational, SizeLimits};

/// Exit status for unreadable input and rejected graphs.
const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "toughham",
    version,
    about = "Certified Hamiltonicity for 2-tough 2K2-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the engine on a graph file and print its run record.
    Prove {
        file: PathBuf,
        /// Write the JSON-lines trace here instead of stderr.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Skip the up-front 2K2 check; violations surface during the run.
        #[arg(long = "pretrust-2k2free")]
        pretrust: bool,
    },
    /// Print n, m, toughness, independence number, 2K2-freeness and 2-factor existence.
    Invariants { file: PathBuf },
    /// Look for non-Hamiltonian 2K2-free graphs of toughness at least the threshold.
    Search {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// In-band graphs to collect when sampling.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "3/2")]
        tough: Rational,
        /// Every 2K2-free graph up to isomorphism instead of random samples.
        #[arg(long)]
        exhaustive: bool,
        /// Append run records to this JSON-lines file.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Run a property suite: lemmas, claims, engine or generators.
    Suite {
        name: Suite,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(message: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn prove(file: &Path, trace: Option<&Path>, pretrust: bool, limits: SizeLimits) -> ExitCode {
    let g = match read_graph(file) {
        Ok(g) => g,
        Err(e) => return fail(e, INPUT_ERROR),
    };
    let options = EngineOptions {
        pretrust_2k2_free: pretrust,
        limits,
        ..EngineOptions::default()
    };
    let id = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let analysis = match analyze(&g, &id, None, &options, None) {
        Ok(a) => a,
        Err(EngineError::Not2K2Free(q)) => {
            let [a, b, c, d] = q.vertices();
            return fail(
                format!(
                    "not 2K2-free: induced 2K2 on {{{a}, {b}, {c}, {d}}} (edges {}-{} and {}-{})",
                    q.first.0, q.first.1, q.second.0, q.second.1
                ),
                INPUT_ERROR,
            );
        }
        Err(e) => return fail(e, INPUT_ERROR),
    };
    let written = match trace {
        Some(path) => {
            File::create(path).and_then(|f| write_trace(BufWriter::new(f), &analysis.result.trace))
        }
        None => write_trace(io::stderr().lock(), &analysis.result.trace),
    };
    if let Err(e) = written {
        return fail(format!("writing trace: {e}"), INPUT_ERROR);
    }
    println!("{}", analysis.record.to_json_line());
    if let Err(e) = &analysis.audit {
        eprintln!("audit failed: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(analysis.exit_code() as u8)
}

fn write_trace<W: Write, T: serde::Serialize>(mut w: W, records: &[T]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

fn invariants(file: &Path, limits: SizeLimits) -> ExitCode {
    let g = match read_graph(file) {
        Ok(g) => g,
        Err(e) => return fail(e, INPUT_ERROR),
    };
    match invariant_report(&g, &limits) {
        Ok(r) => {
            println!("{r}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e, INPUT_ERROR),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let limits = match SizeLimits::from_env() {
        Ok(l) => l,
        Err(e) => return fail(e, INPUT_ERROR),
    };
    match cli.command {
        Command::Prove {
            file,
            trace,
            pretrust,
        } => prove(&file, trace.as_deref(), pretrust, limits),
        Command::Invariants { file } => invariants(&file, limits),
        Command::Search {
            n_min,
            n_max,
            count,
            seed,
            tough,
            exhaustive,
            log,
        } => {
            let params = SearchParams {
                n_min,
                n_max,
                threshold: tough,
                mode: if exhaustive {
                    SearchMode::Exhaustive
                } else {
                    SearchMode::Sampled { count }
                },
                seed,
                limits,
            };
            let sink = match log {
                Some(path) => match fs::OpenOptions::new().create(true).append(true).open(&path) {
                    Ok(f) => RecordLog::writing_to(Box::new(BufWriter::new(f))),
                    Err(e) => return fail(format!("{}: {e}", path.display()), INPUT_ERROR),
                },
                None => RecordLog::default(),
            };
            let report = match search(&params, sink) {
                Ok(r) => r,
                Err(e) => return fail(e, INPUT_ERROR),
            };
            for hit in &report.hits {
                println!("HIT {}", hit.id);
                if let Some(spec) = &hit.spec {
                    println!("spec: {}", serde_json::to_string(spec).unwrap_or_default());
                }
                println!("{}", hit.graph_text.trim_end());
                println!("{}", hit.report);
            }
            for problem in &report.inconsistencies {
                eprintln!("inconsistency: {problem}");
            }
            println!("{}", report.summary());
            if report.inconsistencies.is_empty() && report.stuck == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Command::Suite {
            name,
            instances,
            seed,
        } => {
            let config = SuiteConfig {
                random_instances: instances,
                seed,
                limits,
                ..SuiteConfig::default()
            };
            let report = run_suite(name, &config);
            println!("{report}");
            if report.audit.total() > 0 {
                println!("verified objects: {}", report.audit.total());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
