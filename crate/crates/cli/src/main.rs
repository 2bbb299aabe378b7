//! `smith` — second Hamiltonian cycles from the command line.

use smith_cli::{bench, commands};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use smith_core::lollipop::StartEdge;

use commands::CmdError;

#[derive(Parser)]
#[command(
    name = "smith",
    about = "Second Hamiltonian cycles in cubic graphs: exact search, lollipop walks, long-cycle approximation",
    version
)]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generation-backed commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Abort long-running solves after this many milliseconds.
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StartArg {
    V1v2,
    V1vn,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a second Hamiltonian cycle with the exact branch-and-force search.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Write run metrics as JSON.
        #[arg(long)]
        metrics: Option<PathBuf>,
        /// Explore both search seeds in parallel; first success wins.
        #[arg(long)]
        parallel: bool,
    },
    /// Run Thomason's lollipop walk.
    Lollipop {
        #[arg(long)]
        input: PathBuf,
        /// Which edge at vertex 1 to remove first.
        #[arg(long, value_enum, default_value = "v1vn")]
        start: StartArg,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        /// Write a JSONL step trace.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Audit the four coloring invariants at every step.
        #[arg(long)]
        check_invariants: bool,
    },
    /// Long second cycle for general instances of minimum degree >= 3.
    Approx {
        #[arg(long)]
        input: PathBuf,
    },
    /// Eliminate triangles; emits the reduced instance plus a lifting trace.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// JSONL sidecar with one record per reduction.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Enumerate all Hamiltonian cycles of a small instance.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Also print the per-edge cycle counts.
        #[arg(long)]
        per_edge: bool,
        /// Abort the enumeration beyond this many cycles.
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Generate instances.
    Gen {
        /// cubic | regular | min-degree | named
        #[arg(long, default_value = "cubic")]
        kind: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Degree for regular/min-degree kinds.
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Degree cap for the min-degree kind.
        #[arg(long)]
        max_degree: Option<usize>,
        /// k4 | k33 | prism | cube (with --kind named).
        #[arg(long)]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Benchmark ladder across sizes and seeds.
    Bench {
        /// Comma-separated: solve,lollipop,approx
        #[arg(long, default_value = "solve")]
        algorithms: String,
        /// Comma-separated instance sizes.
        #[arg(long, default_value = "20,24,28,32,36,40")]
        sizes: String,
        /// Seeds per (algorithm, size) cell.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// Lollipop pivot budget.
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 4)]
        threads: usize,
    },
    /// Check a claimed second Hamiltonian cycle.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// File with one `cycle v1 ... vn` line.
        #[arg(long)]
        c1: PathBuf,
    },
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CmdError> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse::<T>().map_err(|_| CmdError::Input(format!("bad {what} entry `{p}`"))))
        .collect()
}

fn run(cli: Cli) -> commands::CmdResult {
    match cli.command {
        Command::Solve { input, metrics, parallel } => commands::solve(&commands::SolveArgs {
            input,
            metrics,
            parallel,
            json: cli.json,
            timeout_ms: cli.timeout_ms,
        }),
        Command::Lollipop { input, start, max_steps, trace, check_invariants } => {
            commands::lollipop_cmd(&commands::LollipopArgs {
                input,
                start: match start {
                    StartArg::V1v2 => StartEdge::V1V2,
                    StartArg::V1vn => StartEdge::V1Vn,
                },
                max_steps,
                trace,
                check_invariants,
                json: cli.json,
            })
        }
        Command::Approx { input } => commands::approx_cmd(&commands::ApproxArgs { input, json: cli.json }),
        Command::Reduce { input, output, trace } => {
            commands::reduce_cmd(&commands::ReduceArgs { input, output, trace })
        }
        Command::Oracle { input, per_edge, cap } => {
            commands::oracle_cmd(&commands::OracleArgs { input, per_edge, cap, json: cli.json })
        }
        Command::Gen { kind, n, degree, max_degree, name, output } => commands::gen_cmd(&commands::GenArgs {
            kind,
            n,
            seed: cli.seed,
            degree,
            max_degree,
            name,
            output,
        }),
        Command::Bench { algorithms, sizes, seeds, max_steps, threads } => {
            let algorithms = algorithms
                .split(',')
                .filter(|p| !p.is_empty())
                .map(|p| {
                    bench::Algorithm::parse(p.trim())
                        .ok_or_else(|| CmdError::Input(format!("unknown algorithm `{p}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let sizes = parse_list::<usize>(&sizes, "size")?;
            bench::run(&bench::BenchArgs {
                algorithms,
                sizes,
                seeds,
                timeout_ms: cli.timeout_ms,
                max_steps,
                threads,
                json: cli.json,
            })
        }
        Command::Verify { input, c1 } => commands::verify_cmd(&commands::VerifyArgs { input, c1, json: cli.json }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
