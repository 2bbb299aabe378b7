//! Subcommand implementations.
//!
//! Exit-code contract: 0 success, 2 invalid input (parse or validation),
//! 1 internal error — including a solver output that fails independent
//! re-verification, which is checked before anything is printed.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use smith_core::graph::{
    difference_is_connected, is_hamiltonian_cycle, CyclePerm, GeneralInstance, SmithInstance,
};
use smith_core::lollipop::{self, LollipopOutcome, RunOptions, StartEdge};
use smith_core::oracle;
use smith_core::reduce::{self, MakeTriangleFree};
use smith_core::solver::{
    self, SearchOptions, SearchOutcome, SeedEdge, SolveOutput, SolverMetrics,
};
use smith_core::{approx, gen};

use crate::formats::{self, ParsedInstance};
use crate::report::{self, MetricsReport};

/// Command failure, tagged with the exit code it should produce.
#[derive(Debug)]
pub enum CmdError {
    /// Exit 2: bad file, bad syntax, bad structure.
    Input(String),
    /// Exit 1: timeouts, verification failures, bugs.
    Internal(String),
}

impl CmdError {
    pub fn code(&self) -> u8 {
        match self {
            CmdError::Input(_) => 2,
            CmdError::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Input(m) | CmdError::Internal(m) => m,
        }
    }
}

pub type CmdResult = Result<(), CmdError>;

fn read_file(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CmdError> {
    fs::write(path, content).map_err(|e| CmdError::Internal(format!("{}: {e}", path.display())))
}

pub fn load_instance(path: &Path) -> Result<ParsedInstance, CmdError> {
    let text = read_file(path)?;
    formats::parse_instance(&text).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

pub fn load_smith(path: &Path) -> Result<SmithInstance, CmdError> {
    match load_instance(path)? {
        ParsedInstance::Smith(g) => Ok(g),
        ParsedInstance::General(_) => {
            Err(CmdError::Input(format!("{}: this command needs a `p smith` instance", path.display())))
        }
    }
}

fn load_general(path: &Path) -> Result<GeneralInstance, CmdError> {
    match load_instance(path)? {
        ParsedInstance::Smith(g) => Ok(g.to_general()),
        ParsedInstance::General(g) => Ok(g),
    }
}

/// Watchdog: sets the flag after `ms` unless disarmed first.
pub struct Watchdog {
    pub flag: Arc<AtomicBool>,
    disarm: Arc<AtomicBool>,
}

impl Watchdog {
    pub fn arm(ms: Option<u64>) -> Option<Watchdog> {
        let ms = ms?;
        let flag = Arc::new(AtomicBool::new(false));
        let disarm = Arc::new(AtomicBool::new(false));
        let (f, d) = (flag.clone(), disarm.clone());
        std::thread::spawn(move || {
            let deadline = Instant::now() + Duration::from_millis(ms);
            while Instant::now() < deadline {
                if d.load(Ordering::Relaxed) {
                    return;
                }
                std::thread::sleep(Duration::from_millis(5.min(ms)));
            }
            f.store(true, Ordering::Relaxed);
        });
        Some(Watchdog { flag, disarm })
    }
}

impl Drop for Watchdog {
    fn drop(&mut self) {
        self.disarm.store(true, Ordering::Relaxed);
    }
}

/// Independent re-verification of any claimed second Hamiltonian cycle.
fn verify_second_cycle(inst: &SmithInstance, c1: &CyclePerm) -> bool {
    is_hamiltonian_cycle(inst, c1) && *c1 != inst.c0() && difference_is_connected(&inst.c0(), c1)
}

fn route_name(route: solver::SolveRoute) -> String {
    match route {
        solver::SolveRoute::XCertificate => "x_certificate".into(),
        solver::SolveRoute::TriangleExit => "triangle_exit".into(),
        solver::SolveRoute::SmallOracle => "small_oracle".into(),
        solver::SolveRoute::Search { seed, anchor } => {
            let base = match seed {
                SeedEdge::V1V2 => "search_v1v2",
                SeedEdge::V1Vn => "search_v1vn",
            };
            if anchor == 0 {
                base.into()
            } else {
                format!("{base}_anchor{anchor}")
            }
        }
    }
}

/// Both search seeds in parallel; first success cancels the peer. The
/// shortcut pipeline (X-certificate, triangles, small oracle) runs first,
/// exactly as in the sequential path.
fn solve_parallel(inst: &SmithInstance, stop: Option<&AtomicBool>) -> Result<SolveOutput, solver::SolveError> {
    // Shortcut stages are cheap; reuse the sequential pipeline unless a
    // real search is needed.
    if reduce::find_x_certificate(inst).is_some() {
        return solver::solve_second_cycle(inst);
    }
    let (reduced, trace) = match reduce::make_triangle_free(inst) {
        MakeTriangleFree::SecondCycle(_) => return solver::solve_second_cycle(inst),
        MakeTriangleFree::Reduced(g, t) => (g, t),
    };
    if reduced.n() < 8 || reduce::find_x_certificate(&reduced).is_some() {
        return solver::solve_second_cycle(inst);
    }

    let cancel = AtomicBool::new(false);
    let result = std::thread::scope(|scope| {
        let handles: Vec<_> = [SeedEdge::V1V2, SeedEdge::V1Vn]
            .into_iter()
            .map(|seed| {
                let reduced = &reduced;
                let cancel = &cancel;
                scope.spawn(move || {
                    let options = SearchOptions { stop: Some(cancel), ..SearchOptions::default() };
                    let out = solver::search_second_cycle(reduced, seed, options, None);
                    if matches!(out.0, SearchOutcome::Found(..)) {
                        cancel.store(true, Ordering::Relaxed);
                    }
                    (seed, out)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search thread")).collect::<Vec<_>>()
    });
    if let Some(stop) = stop {
        if stop.load(Ordering::Relaxed) {
            return Err(solver::SolveError::Aborted);
        }
    }

    let mut metrics = SolverMetrics::default();
    let mut found = None;
    for (seed, (outcome, m)) in result {
        metrics.leaves += m.leaves;
        metrics.max_depth = metrics.max_depth.max(m.max_depth);
        metrics.forced_edges_total += m.forced_edges_total;
        metrics.quads_created += m.quads_created;
        metrics.contradictions += m.contradictions;
        metrics.peak_mem_bytes = metrics.peak_mem_bytes.max(m.peak_mem_bytes);
        if let SearchOutcome::Found(c1, _) = outcome {
            if found.is_none() {
                found = Some((seed, c1));
            }
        }
    }
    let found = match found {
        Some(f) => Some(f),
        // Anchored blind spot: fall back to the sequential pipeline, which
        // rotates the anchor until a valid alternating cycle exists.
        None => return solver::solve_second_cycle(inst),
    };
    let (seed, c1) = found.expect("present");
    let c1 = reduce::lift_cycle(&c1, &trace)
        .map_err(|e| solver::SolveError::Exhausted { diagnostics: format!("lift failed: {e}") })?;
    let d = smith_core::graph::symmetric_difference_components(&inst.c0(), &c1)
        .into_iter()
        .next()
        .unwrap_or_default();
    Ok(SolveOutput { c1, d, metrics, route: solver::SolveRoute::Search { seed, anchor: 0 } })
}

pub struct SolveArgs {
    pub input: PathBuf,
    pub metrics: Option<PathBuf>,
    pub parallel: bool,
    pub json: bool,
    pub timeout_ms: Option<u64>,
}

pub fn solve(args: &SolveArgs) -> CmdResult {
    let inst = load_smith(&args.input)?;
    let watchdog = Watchdog::arm(args.timeout_ms);
    let stop = watchdog.as_ref().map(|w| w.flag.as_ref());
    let started = Instant::now();
    let result = if args.parallel {
        solve_parallel(&inst, stop)
    } else {
        let options = SearchOptions { stop, ..SearchOptions::default() };
        solver::solve_second_cycle_with(&inst, options)
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let out = result.map_err(|e| CmdError::Internal(e.to_string()))?;

    // Never print an unverified cycle.
    if !verify_second_cycle(&inst, &out.c1) {
        return Err(CmdError::Internal("output failed independent verification".into()));
    }

    let metrics_report = MetricsReport::new(inst.n(), &out.metrics, elapsed);
    if let Some(path) = &args.metrics {
        let body = serde_json::to_string_pretty(&metrics_report).expect("serializable");
        write_file(path, &body)?;
    }
    if args.json {
        let rep = report::SolveReport {
            algorithm: "solve",
            instance_digest: report::digest(&formats::serialize_smith(&inst)),
            n: inst.n(),
            cycle: out.c1.as_slice().to_vec(),
            length: out.c1.len(),
            verified: true,
            route: route_name(out.route),
            metrics: metrics_report,
        };
        println!("{}", serde_json::to_string(&rep).expect("serializable"));
    } else {
        print!("{}", formats::format_cycle(&out.c1));
    }
    Ok(())
}

pub struct LollipopArgs {
    pub input: PathBuf,
    pub start: StartEdge,
    pub max_steps: u64,
    pub trace: Option<PathBuf>,
    pub check_invariants: bool,
    pub json: bool,
}

pub fn lollipop_cmd(args: &LollipopArgs) -> CmdResult {
    let inst = load_smith(&args.input)?;
    let options = RunOptions {
        verify_invariants: args.check_invariants,
        record_trace: args.trace.is_some(),
    };
    let started = Instant::now();
    let outcome = lollipop::run_lollipop(&inst, args.start, args.max_steps, options);
    let elapsed = started.elapsed().as_secs_f64() * 1e3;

    match outcome {
        LollipopOutcome::Done(run) => {
            if args.check_invariants && !run.violations.is_empty() {
                let total: usize = run.violations.iter().map(|v| v.violations.len()).sum();
                return Err(CmdError::Internal(format!(
                    "{total} invariant violation(s), first at step {}",
                    run.violations[0].step
                )));
            }
            // The walk's output is a Hamiltonian cycle != C0 by construction;
            // its difference may consist of several alternating cycles,
            // which the verifier treats as a failure only for `solve`.
            if !is_hamiltonian_cycle(&inst, &run.c1) || run.c1 == inst.c0() {
                return Err(CmdError::Internal("lollipop output failed verification".into()));
            }
            if let Some(path) = &args.trace {
                let mut body = String::new();
                for rec in run.trace.as_deref().unwrap_or(&[]) {
                    body.push_str(&trace_line(rec));
                    body.push('\n');
                }
                write_file(path, &body)?;
            }
            if args.json {
                let rep = report::LollipopReport {
                    algorithm: "lollipop",
                    instance_digest: report::digest(&formats::serialize_smith(&inst)),
                    n: inst.n(),
                    status: "done",
                    steps: run.steps,
                    cycle: Some(run.c1.as_slice().to_vec()),
                    verified: true,
                    time_ms: elapsed,
                };
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                print!("{}", formats::format_cycle(&run.c1));
                eprintln!("steps {}", run.steps);
            }
            Ok(())
        }
        LollipopOutcome::StepLimit { steps } => {
            if args.json {
                let rep = report::LollipopReport {
                    algorithm: "lollipop",
                    instance_digest: report::digest(&formats::serialize_smith(&inst)),
                    n: inst.n(),
                    status: "step_limit",
                    steps,
                    cycle: None,
                    verified: false,
                    time_ms: elapsed,
                };
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            }
            Err(CmdError::Internal(format!("step limit reached after {steps} steps")))
        }
    }
}

fn trace_line(rec: &lollipop::StepRecord) -> String {
    let removed = match rec.removed {
        Some((u, v)) => format!("[{u},{v}]"),
        None => "null".into(),
    };
    let colors: Vec<String> = rec
        .colors_changed
        .iter()
        .map(|((u, v), c)| format!("[[{u},{v}],\"{c}\"]"))
        .collect();
    format!(
        "{{\"step\":{},\"added_edge\":[{},{}],\"removed_edge\":{},\"colors_changed\":[{}]}}",
        rec.step,
        rec.added.0,
        rec.added.1,
        removed,
        colors.join(",")
    )
}

pub struct ApproxArgs {
    pub input: PathBuf,
    pub json: bool,
}

pub fn approx_cmd(args: &ApproxArgs) -> CmdResult {
    let inst = load_general(&args.input)?;
    let n = inst.n();
    let started = Instant::now();
    let out = approx::find_long_cycle(&inst);
    let elapsed = started.elapsed().as_secs_f64() * 1e3;

    let valid = approx::is_valid_cycle(&inst, &out.cycle) && approx::differs_from_c0(&inst, &out.cycle);
    if !valid {
        return Err(CmdError::Internal("approx output failed verification".into()));
    }
    let alpha = approx::alpha_of(&inst);
    let bound = theorem_bound_floor(n, alpha);
    if args.json {
        let rep = report::ApproxReport {
            algorithm: "approx",
            instance_digest: report::digest(&formats::serialize_general(&inst)),
            n,
            length: out.cycle.len(),
            bound,
            certificate: out.certificate.kind(),
            verified: true,
            time_ms: elapsed,
            cycle: out.cycle.clone(),
        };
        println!("{}", serde_json::to_string(&rep).expect("serializable"));
    } else {
        print!("{}", formats::format_cycle_seq(&out.cycle));
        eprintln!(
            "length {} of {} (guarantee {}, certificate {})",
            out.cycle.len(),
            n,
            bound,
            out.certificate.kind()
        );
    }
    Ok(())
}

/// Largest integer length the theorem still guarantees: the tight value of
/// `n - 4α(√n + 2α) + 8` rounded the safe way.
pub fn theorem_bound_floor(n: usize, alpha: approx::Ratio) -> i64 {
    let mut len = n as i64;
    while len > 0 && approx::meets_theorem_bound(n, alpha, (len - 1).max(0) as usize) {
        len -= 1;
    }
    len
}

pub struct ReduceArgs {
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub trace: Option<PathBuf>,
}

pub fn reduce_cmd(args: &ReduceArgs) -> CmdResult {
    let inst = load_smith(&args.input)?;
    match reduce::make_triangle_free(&inst) {
        MakeTriangleFree::SecondCycle(c1) => {
            if !verify_second_cycle(&inst, &c1) {
                return Err(CmdError::Internal("reduction early exit failed verification".into()));
            }
            eprintln!("triangle elimination produced a second Hamiltonian cycle directly");
            print!("{}", formats::format_cycle(&c1));
            Ok(())
        }
        MakeTriangleFree::Reduced(g, trace) => {
            let body = formats::serialize_smith(&g);
            match &args.output {
                Some(path) => write_file(path, &body)?,
                None => print!("{body}"),
            }
            if let Some(path) = &args.trace {
                let mut text = String::new();
                for r in &trace {
                    text.push_str(&reduction_line(r));
                    text.push('\n');
                }
                write_file(path, &text)?;
            }
            eprintln!("{} reduction(s); n {} -> {}", trace.len(), inst.n(), g.n());
            Ok(())
        }
    }
}

fn reduction_line(r: &reduce::ReductionRecord) -> String {
    let names: Vec<String> = r.names.iter().map(|v| v.to_string()).collect();
    format!(
        "{{\"n_before\":{},\"pivot\":{},\"removed\":[{},{}],\"pivot_partner\":{},\"new_edges\":[[{},{}],[{},{}]],\"names\":[{}]}}",
        r.n_before,
        r.pivot,
        r.removed.0,
        r.removed.1,
        r.pivot_partner,
        r.new_edges.0 .0,
        r.new_edges.0 .1,
        r.new_edges.1 .0,
        r.new_edges.1 .1,
        names.join(",")
    )
}

pub struct OracleArgs {
    pub input: PathBuf,
    pub per_edge: bool,
    pub cap: usize,
    pub json: bool,
}

pub fn oracle_cmd(args: &OracleArgs) -> CmdResult {
    let inst = load_smith(&args.input)?;
    let hcs = oracle::enumerate_hamiltonian_cycles(&inst, args.cap)
        .map_err(|e| CmdError::Internal(format!("cap exceeded at {} cycles", e.cap)))?;
    let parity = match oracle::edge_parity_check(&inst) {
        oracle::ParityCheck::Pass => "pass",
        oracle::ParityCheck::Fail { .. } => "fail",
    };
    let per_edge = args.per_edge.then(|| {
        hcs.edge_counts()
            .iter()
            .map(|(&(u, v), &count)| report::EdgeCount { edge: [u, v], count })
            .collect::<Vec<_>>()
    });
    if args.json {
        let rep = report::OracleReport { n: inst.n(), cycles: hcs.len(), parity, per_edge };
        println!("{}", serde_json::to_string(&rep).expect("serializable"));
    } else {
        println!("cycles {}", hcs.len());
        println!("parity {parity}");
        if let Some(rows) = per_edge {
            for r in rows {
                println!("edge {} {} count {}", r.edge[0], r.edge[1], r.count);
            }
        }
    }
    Ok(())
}

pub struct GenArgs {
    pub kind: String,
    pub n: usize,
    pub seed: u64,
    pub degree: usize,
    pub max_degree: Option<usize>,
    pub name: Option<String>,
    pub output: Option<PathBuf>,
}

pub fn gen_cmd(args: &GenArgs) -> CmdResult {
    let kind = match args.kind.as_str() {
        "cubic" => gen::GenKind::Cubic,
        "regular" => gen::GenKind::Regular(args.degree),
        "min-degree" => gen::GenKind::MinDegree {
            delta: args.degree,
            max: args.max_degree.unwrap_or(args.degree + 2),
        },
        "named" => {
            let name = args.name.as_deref().ok_or_else(|| {
                CmdError::Input("--kind named requires --name k4|k33|prism|cube".into())
            })?;
            let named = gen::NamedInstance::from_id(name)
                .ok_or_else(|| CmdError::Input(format!("unknown named instance `{name}`")))?;
            gen::GenKind::Named(named)
        }
        other => return Err(CmdError::Input(format!("unknown generator kind `{other}`"))),
    };
    let spec = gen::GenSpec { kind, n: args.n, seed: args.seed };
    let body = match gen::generate(&spec).map_err(|e| CmdError::Input(e.to_string()))? {
        gen::Generated::Smith(g) => formats::serialize_smith(&g),
        gen::Generated::General(g) => formats::serialize_general(&g),
    };
    match &args.output {
        Some(path) => write_file(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

pub struct VerifyArgs {
    pub input: PathBuf,
    pub c1: PathBuf,
    pub json: bool,
}

pub fn verify_cmd(args: &VerifyArgs) -> CmdResult {
    let inst = load_smith(&args.input)?;
    let text = read_file(&args.c1)?;
    let c1 = formats::parse_cycle(&text)
        .map_err(|e| CmdError::Input(format!("{}: {e}", args.c1.display())))?;
    if c1.len() != inst.n() {
        return Err(CmdError::Input(format!(
            "cycle has {} vertices, instance has {}",
            c1.len(),
            inst.n()
        )));
    }
    let hamiltonian = is_hamiltonian_cycle(&inst, &c1);
    let differs = c1 != inst.c0();
    let single = hamiltonian && differs && difference_is_connected(&inst.c0(), &c1);
    let rep = report::VerifyReport {
        hamiltonian,
        differs_from_c0: differs,
        single_component_difference: single,
        valid: hamiltonian && differs && single,
    };
    if args.json {
        println!("{}", serde_json::to_string(&rep).expect("serializable"));
    } else {
        println!(
            "hamiltonian {}\ndiffers {}\nsingle-component {}\nvalid {}",
            rep.hamiltonian, rep.differs_from_c0, rep.single_component_difference, rep.valid
        );
    }
    if rep.valid {
        Ok(())
    } else {
        Err(CmdError::Internal("cycle is not a valid second Hamiltonian cycle".into()))
    }
}
