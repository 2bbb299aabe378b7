//! Size-ladder benchmark: per-cell timings and counters, plus the
//! branch-count exponent fit for the exact solver.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use smith_core::gen::random_cubic;
use smith_core::lollipop::{self, LollipopOutcome, StartEdge};
use smith_core::solver;
use smith_core::{approx, graph::GeneralInstance};

use crate::commands::{CmdError, CmdResult, Watchdog};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Solve,
    Lollipop,
    Approx,
}

impl Algorithm {
    pub fn parse(s: &str) -> Option<Algorithm> {
        match s {
            "solve" => Some(Algorithm::Solve),
            "lollipop" => Some(Algorithm::Lollipop),
            "approx" => Some(Algorithm::Approx),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Algorithm::Solve => "solve",
            Algorithm::Lollipop => "lollipop",
            Algorithm::Approx => "approx",
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct BenchRow {
    pub algorithm: &'static str,
    pub n: usize,
    pub seed: u64,
    pub status: &'static str,
    pub time_ms: f64,
    /// Branch-tree leaves (solve), pivots (lollipop), cycle length (approx).
    pub work: u64,
    pub peak_mem_bytes: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct BenchSummary {
    pub rows: Vec<BenchRow>,
    /// Regression slope of log2(mean leaves) against n for `solve` cells.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve_exponent_fit: Option<f64>,
    /// Max over the ladder of mean log2(leaves)/n.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve_exponent_max_ratio: Option<f64>,
}

pub struct BenchArgs {
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub seeds: u64,
    pub timeout_ms: Option<u64>,
    pub max_steps: u64,
    pub threads: usize,
    pub json: bool,
}

fn run_cell(algorithm: Algorithm, n: usize, seed: u64, args: &BenchArgs) -> BenchRow {
    let base = BenchRow {
        algorithm: algorithm.name(),
        n,
        seed,
        status: "ok",
        time_ms: 0.0,
        work: 0,
        peak_mem_bytes: 0,
    };
    let inst = match random_cubic(n, seed) {
        Ok(g) => g,
        Err(_) => return BenchRow { status: "genfail", ..base },
    };
    match algorithm {
        Algorithm::Solve => {
            let watchdog = Watchdog::arm(args.timeout_ms);
            let stop = watchdog.as_ref().map(|w| w.flag.as_ref());
            let options = solver::SearchOptions { stop, ..solver::SearchOptions::default() };
            let started = Instant::now();
            match solver::solve_second_cycle_with(&inst, options) {
                Ok(out) => BenchRow {
                    time_ms: started.elapsed().as_secs_f64() * 1e3,
                    work: out.metrics.leaves,
                    peak_mem_bytes: out.metrics.peak_mem_bytes,
                    ..base
                },
                Err(solver::SolveError::Aborted) => BenchRow {
                    status: "timeout",
                    time_ms: started.elapsed().as_secs_f64() * 1e3,
                    ..base
                },
                Err(_) => BenchRow { status: "error", ..base },
            }
        }
        Algorithm::Lollipop => {
            let started = Instant::now();
            match lollipop::run_lollipop(&inst, StartEdge::V1Vn, args.max_steps, Default::default()) {
                LollipopOutcome::Done(run) => BenchRow {
                    time_ms: started.elapsed().as_secs_f64() * 1e3,
                    work: run.steps,
                    ..base
                },
                LollipopOutcome::StepLimit { steps } => BenchRow {
                    status: "step_limit",
                    time_ms: started.elapsed().as_secs_f64() * 1e3,
                    work: steps,
                    ..base
                },
            }
        }
        Algorithm::Approx => {
            let general: GeneralInstance = inst.to_general();
            let started = Instant::now();
            let out = approx::find_long_cycle(&general);
            BenchRow {
                time_ms: started.elapsed().as_secs_f64() * 1e3,
                work: out.cycle.len() as u64,
                ..base
            }
        }
    }
}

pub fn run(args: &BenchArgs) -> CmdResult {
    let mut cells = Vec::new();
    for &algorithm in &args.algorithms {
        for &n in &args.sizes {
            for seed in 0..args.seeds {
                cells.push((algorithm, n, seed));
            }
        }
    }

    // Cells are independent; a shared cursor feeds the worker threads.
    let cursor = AtomicUsize::new(0);
    let rows = Mutex::new(Vec::with_capacity(cells.len()));
    let workers = args.threads.max(1).min(cells.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= cells.len() {
                    return;
                }
                let (algorithm, n, seed) = cells[i];
                let row = run_cell(algorithm, n, seed, args);
                rows.lock().expect("bench rows").push(row);
            });
        }
    });
    let mut rows = rows.into_inner().expect("bench rows");
    rows.sort_by(|a, b| (a.algorithm, a.n, a.seed).cmp(&(b.algorithm, b.n, b.seed)));

    let (fit, max_ratio) = solve_exponent(&rows);
    let summary = BenchSummary { rows, solve_exponent_fit: fit, solve_exponent_max_ratio: max_ratio };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
    } else {
        println!("{:<9} {:>6} {:>5} {:>11} {:>12} {:>12}  status", "algo", "n", "seed", "time_ms", "work", "peak_bytes");
        for r in &summary.rows {
            println!(
                "{:<9} {:>6} {:>5} {:>11.3} {:>12} {:>12}  {}",
                r.algorithm, r.n, r.seed, r.time_ms, r.work, r.peak_mem_bytes, r.status
            );
        }
        if let Some(fit) = summary.solve_exponent_fit {
            println!("solve exponent fit: {fit:.4} (max per-n ratio {:.4})", summary.solve_exponent_max_ratio.unwrap_or(f64::NAN));
        }
    }
    if summary.rows.iter().any(|r| r.status == "error") {
        return Err(CmdError::Internal("some bench cells failed".into()));
    }
    Ok(())
}

/// (regression slope of log2(mean leaves) vs n, max_n mean(log2 leaves)/n).
pub fn solve_exponent(rows: &[BenchRow]) -> (Option<f64>, Option<f64>) {
    let mut by_n: std::collections::BTreeMap<usize, Vec<f64>> = Default::default();
    for r in rows {
        if r.algorithm == "solve" && r.status == "ok" {
            by_n.entry(r.n).or_default().push(r.work.max(1) as f64);
        }
    }
    if by_n.len() < 2 {
        let ratio = by_n.iter().next().map(|(&n, leaves)| {
            leaves.iter().map(|l| l.log2()).sum::<f64>() / leaves.len() as f64 / n as f64
        });
        return (None, ratio);
    }
    let points: Vec<(f64, f64)> = by_n
        .iter()
        .map(|(&n, leaves)| {
            let mean = leaves.iter().sum::<f64>() / leaves.len() as f64;
            (n as f64, mean.log2())
        })
        .collect();
    let m = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    let max_ratio = by_n
        .iter()
        .map(|(&n, leaves)| {
            leaves.iter().map(|l| l.log2()).sum::<f64>() / leaves.len() as f64 / n as f64
        })
        .fold(f64::MIN, f64::max);
    (Some(slope), Some(max_ratio))
}
