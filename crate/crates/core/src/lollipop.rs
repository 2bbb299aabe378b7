//! Thomason's lollipop walk, instrumented with the four-color edge scheme.
//!
//! The walk starts from the designated cycle, removes one edge at vertex 1
//! and then repeatedly pivots: at the current path end it adds the unique
//! usable third edge (building a "lollipop") and removes the edge after the
//! reached vertex (breaking it), until the added edge returns to vertex 1
//! and closes a different Hamiltonian cycle.
//!
//! Colors track the walk: black/red are cycle edges inside/outside the
//! current path, blue/yellow are chords inside/outside it. `check_invariants`
//! audits four structural invariants at runtime: cycle edges stay
//! black/red, chords stay blue/yellow, black ∪ blue is the current path,
//! and at every freshly built lollipop the red and blue edges form one
//! alternating path of even length anchored at vertex 1 — becoming the
//! alternating cycle `C0 Δ C1` at the final step.
//!
//! The fourth invariant is a conjecture this crate deliberately audits
//! rather than assumes: on some instances the trailing red edge of a break
//! attaches to an interior path vertex and the next pivot detaches a closed
//! alternating cycle, after which the final difference can even come out
//! disconnected (see `red_blue_can_detach_mid_walk` in the tests for a
//! 12-vertex witness). The walk itself still terminates with a valid
//! second Hamiltonian cycle either way.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{norm_edge, CyclePerm, EdgeColor, EdgeId, SmithInstance, Vertex};

/// Which cycle edge at vertex 1 the walk removes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StartEdge {
    /// Remove `v_1 v_2`; the initial path runs backwards `(v_1, v_n, …, v_2)`.
    V1V2,
    /// Remove `v_1 v_n`; the initial path is `(v_1, v_2, …, v_n)`.
    V1Vn,
}

/// Whether the colors describe a freshly built lollipop (edge added, none
/// removed yet) or a completed step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Built,
    AfterStep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantViolation {
    /// Invariant 1: a cycle edge colored neither black nor red.
    CycleEdgeColor { pos: usize, color: EdgeColor },
    /// Invariant 2: a chord colored neither blue nor yellow.
    ChordColor { a: Vertex, b: Vertex, color: EdgeColor },
    /// Invariant 3: black ∪ blue is not the current Hamiltonian path.
    PathMismatch { detail: String },
    /// Invariant 4: red ∪ blue is not the required alternating structure.
    AlternatingShape { detail: String },
}

impl InvariantViolation {
    pub fn invariant(&self) -> u8 {
        match self {
            InvariantViolation::CycleEdgeColor { .. } => 1,
            InvariantViolation::ChordColor { .. } => 2,
            InvariantViolation::PathMismatch { .. } => 3,
            InvariantViolation::AlternatingShape { .. } => 4,
        }
    }
}

/// Violations observed at one audited instant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepViolations {
    pub step: u64,
    pub phase: Phase,
    pub violations: Vec<InvariantViolation>,
}

/// One walk step for trace output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub step: u64,
    pub added: (Vertex, Vertex),
    pub removed: Option<(Vertex, Vertex)>,
    pub colors_changed: Vec<((Vertex, Vertex), EdgeColor)>,
}

pub struct LollipopState<'a> {
    inst: &'a SmithInstance,
    colors: Vec<EdgeColor>,
    /// Current Hamiltonian path; `order[0]` is always vertex 1.
    order: Vec<Vertex>,
    pos: Vec<usize>,
    /// Far endpoint of the edge removed last (incident to the path end).
    removed_other: Vertex,
    step: u64,
    phase: Phase,
}

pub enum StepOutcome {
    Continue,
    Finished(CyclePerm),
}

impl<'a> LollipopState<'a> {
    /// Steps 0 and 1: color the cycle black and the chords yellow, then
    /// remove the chosen edge at vertex 1 (coloring it red).
    pub fn new(inst: &'a SmithInstance, start: StartEdge) -> Self {
        let n = inst.n();
        let mut colors = vec![EdgeColor::Black; inst.edge_count()];
        for c in colors.iter_mut().skip(n) {
            *c = EdgeColor::Yellow;
        }
        let order: Vec<Vertex> = match start {
            StartEdge::V1Vn => (1..=n).collect(),
            StartEdge::V1V2 => core::iter::once(1).chain((2..=n).rev()).collect(),
        };
        let removed_pos = match start {
            StartEdge::V1Vn => n,
            StartEdge::V1V2 => 1,
        };
        colors[removed_pos - 1] = EdgeColor::Red;
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        LollipopState { inst, colors, order, pos, removed_other: 1, step: 1, phase: Phase::AfterStep }
    }

    pub fn instance(&self) -> &SmithInstance {
        self.inst
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn path(&self) -> &[Vertex] {
        &self.order
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<EdgeColor> {
        self.inst.edge_between(u, v).map(|e| self.colors[e.index()])
    }

    /// Fault-injection hook for invariant tests.
    pub fn override_color(&mut self, u: Vertex, v: Vertex, c: EdgeColor) {
        let e = self.inst.edge_between(u, v).expect("existing edge");
        self.colors[e.index()] = c;
    }

    fn recolor(&mut self, e: EdgeId, c: EdgeColor, changed: &mut Vec<((Vertex, Vertex), EdgeColor)>) {
        self.colors[e.index()] = c;
        let (u, v) = self.inst.endpoints(e);
        changed.push((norm_edge(u, v), c));
    }

    /// The edge the next build phase will add: at the path end `u`, the
    /// unique edge that is neither the path edge at `u` nor the last
    /// removed one.
    fn next_added_edge(&self) -> (Vertex, Vertex) {
        let n = self.inst.n();
        let u = self.order[n - 1];
        let path_nbr = self.order[n - 2];
        let w = self
            .inst
            .neighbors3(u)
            .into_iter()
            .find(|&w| w != path_nbr && w != self.removed_other)
            .expect("cubic vertex has a third edge");
        (u, w)
    }

    /// One full pivot: build the lollipop, and unless the walk closed into
    /// a second Hamiltonian cycle, break it again. `record` (if given)
    /// receives the step's trace entry.
    pub fn step(&mut self, record: Option<&mut StepRecord>) -> StepOutcome {
        self.step_inner(record, None)
    }

    fn step_inner(
        &mut self,
        mut record: Option<&mut StepRecord>,
        mut violations: Option<&mut Vec<StepViolations>>,
    ) -> StepOutcome {
        debug_assert_eq!(self.phase, Phase::AfterStep);
        let mut changed = Vec::with_capacity(2);
        let (u, w) = self.next_added_edge();
        let added = self.inst.edge_between(u, w).expect("neighbor");
        let new_color = if self.inst.is_c0_edge(added) { EdgeColor::Black } else { EdgeColor::Blue };
        debug_assert_eq!(
            self.colors[added.index()],
            match new_color {
                EdgeColor::Black => EdgeColor::Red,
                _ => EdgeColor::Yellow,
            },
            "added edge was outside the path"
        );
        self.recolor(added, new_color, &mut changed);
        self.step += 1;
        self.phase = Phase::Built;
        if w != 1 {
            if let Some(v) = violations.as_deref_mut() {
                let found = self.audit(Phase::Built);
                if !found.is_empty() {
                    v.push(StepViolations { step: self.step, phase: Phase::Built, violations: found });
                }
            }
        }

        if w == 1 {
            // Final step: the path plus the added edge is the second cycle.
            let c1 = CyclePerm::new(self.order.clone()).expect("path is a permutation");
            if let Some(rec) = record.as_deref_mut() {
                *rec = StepRecord { step: self.step, added: norm_edge(u, w), removed: None, colors_changed: changed };
            }
            return StepOutcome::Finished(c1);
        }

        // Break: remove the edge after w (seen from vertex 1), reversing the
        // tail of the path between that vertex and the old end.
        let pw = self.pos[w];
        let z = self.order[pw + 1];
        let removed = self.inst.edge_between(w, z).expect("path edge");
        let color = if self.inst.is_c0_edge(removed) { EdgeColor::Red } else { EdgeColor::Yellow };
        debug_assert!(self.colors[removed.index()].in_target_cycle(), "removed edge was on the path");
        self.recolor(removed, color, &mut changed);
        self.order[pw + 1..].reverse();
        for i in pw + 1..self.order.len() {
            self.pos[self.order[i]] = i;
        }
        self.removed_other = w;
        self.phase = Phase::AfterStep;
        if let Some(v) = violations.as_deref_mut() {
            let found = self.audit(Phase::AfterStep);
            if !found.is_empty() {
                v.push(StepViolations { step: self.step, phase: Phase::AfterStep, violations: found });
            }
        }

        if let Some(rec) = record {
            *rec = StepRecord { step: self.step, added: norm_edge(u, w), removed: Some(norm_edge(w, z)), colors_changed: changed };
        }
        StepOutcome::Continue
    }

    /// Like [`step`](Self::step) but audits the invariants at the built
    /// instant and again after the break, collecting any violations.
    pub fn step_checked(
        &mut self,
        record: Option<&mut StepRecord>,
        violations: &mut Vec<StepViolations>,
    ) -> StepOutcome {
        let outcome = self.step_inner(record, Some(violations));
        outcome
    }

    /// Phase-aware invariant audit of the current state.
    pub fn check_invariants(&self) -> Vec<InvariantViolation> {
        self.audit(self.phase)
    }

    /// Audit under an explicit phase interpretation (fault injection uses
    /// this to probe both forms).
    pub fn audit(&self, phase: Phase) -> Vec<InvariantViolation> {
        let inst = self.inst;
        let n = inst.n();
        let mut out = Vec::new();

        for pos in 1..=n {
            let c = self.colors[inst.c0_edge(pos).index()];
            if !matches!(c, EdgeColor::Black | EdgeColor::Red) {
                out.push(InvariantViolation::CycleEdgeColor { pos, color: c });
            }
        }
        for &(a, b) in inst.chords() {
            let c = self.colors[inst.chord_at(a).index()];
            if !matches!(c, EdgeColor::Blue | EdgeColor::Yellow) {
                out.push(InvariantViolation::ChordColor { a, b, color: c });
            }
        }

        match phase {
            Phase::AfterStep => {
                // Black ∪ blue must be exactly the current path.
                let in_path_count = self.colors.iter().filter(|c| c.in_target_cycle()).count();
                if in_path_count != n - 1 {
                    out.push(InvariantViolation::PathMismatch {
                        detail: format!("{} path-colored edges, expected {}", in_path_count, n - 1),
                    });
                } else {
                    for i in 0..n - 1 {
                        let (u, v) = (self.order[i], self.order[i + 1]);
                        let e = inst.edge_between(u, v).expect("path edge");
                        if !self.colors[e.index()].in_target_cycle() {
                            out.push(InvariantViolation::PathMismatch {
                                detail: format!("path edge {u}-{v} colored {}", self.colors[e.index()]),
                            });
                            break;
                        }
                    }
                }
            }
            Phase::Built => {
                if let Err(detail) = self.alternating_path_shape() {
                    out.push(InvariantViolation::AlternatingShape { detail });
                }
            }
        }
        out
    }

    /// Red ∪ blue must form one alternating path of even length from
    /// vertex 1, starting red and ending blue (the built-instant shape).
    fn alternating_path_shape(&self) -> Result<(), String> {
        let inst = self.inst;
        let n = inst.n();
        let mut d_edges = 0usize;
        let mut d_deg = vec![0u8; n + 1];
        for idx in 0..inst.edge_count() {
            let c = self.colors[idx];
            if matches!(c, EdgeColor::Red | EdgeColor::Blue) {
                d_edges += 1;
                let (u, v) = inst.endpoints(EdgeId(idx));
                d_deg[u] += 1;
                d_deg[v] += 1;
            }
        }
        if d_deg[1] != 1 {
            return Err(format!("vertex 1 has {} red/blue edges, expected 1", d_deg[1]));
        }
        // Walk from vertex 1, alternating red and blue.
        let mut prev = 0;
        let mut cur: Vertex = 1;
        let mut expect = EdgeColor::Red;
        let mut walked = 0usize;
        loop {
            let mut next = None;
            for w in inst.neighbors3(cur) {
                if w == prev {
                    continue;
                }
                let e = inst.edge_between(cur, w).expect("neighbor");
                if self.colors[e.index()] == expect {
                    next = Some(w);
                    break;
                }
            }
            match next {
                Some(w) => {
                    walked += 1;
                    prev = cur;
                    cur = w;
                    expect = if expect == EdgeColor::Red { EdgeColor::Blue } else { EdgeColor::Red };
                }
                None => break,
            }
            if walked > d_edges {
                return Err("alternating walk does not terminate".into());
            }
        }
        if walked != d_edges {
            return Err(format!("alternating walk covers {walked} of {d_edges} red/blue edges"));
        }
        if walked % 2 != 0 {
            return Err(format!("alternating path length {walked} is odd"));
        }
        Ok(())
    }

    /// Red ∪ blue as an edge list (the alternating structure `D`).
    pub fn red_blue_edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.inst.edge_count())
            .filter(|&i| matches!(self.colors[i], EdgeColor::Red | EdgeColor::Blue))
            .map(|i| {
                let (u, v) = self.inst.endpoints(EdgeId(i));
                norm_edge(u, v)
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct LollipopRun {
    pub c1: CyclePerm,
    /// Red ∪ blue at the final step; always equals `C0 Δ C1` as an edge
    /// set, and is a single alternating cycle whenever no violation was
    /// recorded.
    pub d: Vec<(Vertex, Vertex)>,
    pub steps: u64,
    pub trace: Option<Vec<StepRecord>>,
    /// Invariant audit results (empty unless `verify_invariants`).
    pub violations: Vec<StepViolations>,
}

#[derive(Clone, Debug)]
pub enum LollipopOutcome {
    Done(LollipopRun),
    /// The walk exceeded its step budget (it can take exponentially many).
    StepLimit { steps: u64 },
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Audit invariants 1-4 at the end of every step.
    pub verify_invariants: bool,
    /// Keep per-step records (memory grows with the walk).
    pub record_trace: bool,
}

/// Drive the walk to completion or `max_steps` pivots, whichever first.
/// With `verify_invariants` every built and after-break instant is audited
/// and the findings returned alongside the result.
pub fn run_lollipop(
    inst: &SmithInstance,
    start: StartEdge,
    max_steps: u64,
    options: RunOptions,
) -> LollipopOutcome {
    let mut state = LollipopState::new(inst, start);
    let mut trace = options.record_trace.then(Vec::new);
    let mut violations: Vec<StepViolations> = Vec::new();
    let mut budget = max_steps;
    loop {
        if budget == 0 {
            return LollipopOutcome::StepLimit { steps: state.step_count() };
        }
        budget -= 1;
        let mut rec = StepRecord { step: 0, added: (0, 0), removed: None, colors_changed: Vec::new() };
        let outcome = if options.verify_invariants {
            state.step_checked(Some(&mut rec), &mut violations)
        } else {
            state.step(Some(&mut rec))
        };
        if let Some(t) = trace.as_mut() {
            t.push(rec);
        }
        if let StepOutcome::Finished(c1) = outcome {
            let d = state.red_blue_edges();
            if options.verify_invariants {
                // Final form of the fourth invariant: one alternating
                // cycle equal to C0 Δ C1.
                if let Err(detail) = final_d_is_alternating_cycle(inst, &state, &c1) {
                    violations.push(StepViolations {
                        step: state.step_count(),
                        phase: Phase::Built,
                        violations: vec![InvariantViolation::AlternatingShape { detail }],
                    });
                }
            }
            return LollipopOutcome::Done(LollipopRun {
                c1,
                d,
                steps: state.step_count(),
                trace,
                violations,
            });
        }
    }
}

/// Final-step half of invariant 4: red ∪ blue is a single alternating
/// cycle and coincides with `C0 Δ C1`.
fn final_d_is_alternating_cycle(
    inst: &SmithInstance,
    state: &LollipopState<'_>,
    c1: &CyclePerm,
) -> Result<(), String> {
    let d = state.red_blue_edges();
    let comps = crate::graph::symmetric_difference_components(&inst.c0(), c1);
    if comps.len() != 1 {
        return Err(format!("C0 Δ C1 has {} components", comps.len()));
    }
    let mut want: Vec<(Vertex, Vertex)> = comps[0].clone();
    want.sort_unstable();
    let mut got = d;
    got.sort_unstable();
    if got != want {
        return Err("red/blue edges differ from C0 Δ C1".into());
    }
    // Alternation around the cycle: every vertex on D touches one red and
    // one blue edge.
    let n = inst.n();
    let mut red = vec![0u8; n + 1];
    let mut blue = vec![0u8; n + 1];
    for &(u, v) in &got {
        let e = inst.edge_between(u, v).expect("edge");
        let bucket = if state.colors[e.index()] == EdgeColor::Red { &mut red } else { &mut blue };
        bucket[u] += 1;
        bucket[v] += 1;
    }
    for v in 1..=n {
        if red[v] + blue[v] > 0 && (red[v] != 1 || blue[v] != 1) {
            return Err(format!("vertex {v} breaks red-blue alternation"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{difference_is_connected, is_hamiltonian_cycle};
    use crate::oracle::enumerate_hamiltonian_cycles;

    fn k33() -> SmithInstance {
        SmithInstance::new(6, &[(1, 4), (2, 5), (3, 6)]).unwrap()
    }

    fn cube() -> SmithInstance {
        SmithInstance::new(8, &[(1, 4), (2, 7), (3, 6), (5, 8)]).unwrap()
    }

    fn opts() -> RunOptions {
        RunOptions { verify_invariants: true, record_trace: true }
    }

    #[test]
    fn first_pivot_on_k33_matches_hand_simulation() {
        let g = k33();
        let mut state = LollipopState::new(&g, StartEdge::V1Vn);
        assert_eq!(state.color_of(1, 6), Some(EdgeColor::Red));
        assert!(state.check_invariants().is_empty());
        let out = state.step(None);
        assert!(matches!(out, StepOutcome::Continue));
        // Last vertex 6, chord partner 3: add 6-3 blue, remove 3-4 red.
        assert_eq!(state.color_of(6, 3), Some(EdgeColor::Blue));
        assert_eq!(state.color_of(3, 4), Some(EdgeColor::Red));
        assert_eq!(state.path(), &[1, 2, 3, 6, 5, 4]);
        assert!(state.check_invariants().is_empty());
    }

    #[test]
    fn zero_budget_hits_step_limit() {
        match run_lollipop(&k33(), StartEdge::V1Vn, 0, RunOptions::default()) {
            LollipopOutcome::StepLimit { .. } => {}
            LollipopOutcome::Done(_) => panic!("no budget, no walk"),
        }
    }

    #[test]
    fn terminates_on_k33_with_verified_output() {
        let g = k33();
        for start in [StartEdge::V1V2, StartEdge::V1Vn] {
            match run_lollipop(&g, start, 1_000_000, opts()) {
                LollipopOutcome::Done(run) => {
                    assert!(run.violations.is_empty());
                    assert!(is_hamiltonian_cycle(&g, &run.c1));
                    assert_ne!(run.c1, g.c0());
                    assert!(difference_is_connected(&g.c0(), &run.c1));
                    let hcs = enumerate_hamiltonian_cycles(&g, usize::MAX).unwrap();
                    assert!(hcs.contains(&run.c1));
                }
                LollipopOutcome::StepLimit { .. } => panic!("K3,3 walk is short"),
            }
        }
    }

    #[test]
    fn terminates_on_cube() {
        let g = cube();
        match run_lollipop(&g, StartEdge::V1Vn, 1_000_000, opts()) {
            LollipopOutcome::Done(run) => {
                assert!(run.violations.is_empty());
                assert!(is_hamiltonian_cycle(&g, &run.c1));
                let hcs = enumerate_hamiltonian_cycles(&g, usize::MAX).unwrap();
                assert!(hcs.contains(&run.c1));
                assert_eq!(crate::graph::symmetric_difference_components(&g.c0(), &run.c1).len(), 1);
                assert!(run.trace.is_some());
            }
            LollipopOutcome::StepLimit { .. } => panic!("cube walk is short"),
        }
    }

    #[test]
    fn corollary_witness_on_small_instances() {
        // Some run among the two starts misses v1-vn or v_{n-1}-v_n.
        for g in [k33(), cube()] {
            let n = g.n();
            let mut witnessed = false;
            for start in [StartEdge::V1V2, StartEdge::V1Vn] {
                if let LollipopOutcome::Done(run) = run_lollipop(&g, start, 1_000_000, opts()) {
                    let miss_last = !run.c1.contains_edge(1, n);
                    let miss_prev = !run.c1.contains_edge(n - 1, n);
                    if miss_last || miss_prev {
                        witnessed = true;
                    }
                }
            }
            assert!(witnessed);
        }
    }

    #[test]
    fn fault_injection_is_detected() {
        // A red chord violates invariant 2.
        let g = k33();
        let mut faulty = LollipopState::new(&g, StartEdge::V1Vn);
        faulty.step(None);
        faulty.override_color(2, 5, EdgeColor::Red);
        let violations = faulty.check_invariants();
        assert!(violations.iter().any(|v| v.invariant() == 2));

        // Recolor a path cycle-edge red: invariant 3 breaks after a step.
        let mut state = LollipopState::new(&g, StartEdge::V1Vn);
        state.step(None);
        state.override_color(1, 2, EdgeColor::Red);
        let violations = state.check_invariants();
        assert!(violations.iter().any(|v| v.invariant() == 3));
        // Under the built-instant interpretation the same fault breaks the
        // alternating-path shape (odd number of red/blue edges).
        let violations = state.audit(Phase::Built);
        assert!(violations.iter().any(|v| v.invariant() == 4));
    }

    #[test]
    fn red_blue_can_detach_mid_walk() {
        // 12-vertex witness: the break at one pivot hangs its trailing red
        // edge on an interior path vertex; the next build detaches a closed
        // alternating 6-cycle, and the walk ends with a valid second
        // Hamiltonian cycle whose difference from C0 has two components.
        let g = SmithInstance::new(12, &[(1, 7), (2, 11), (3, 6), (4, 9), (5, 10), (8, 12)]).unwrap();
        match run_lollipop(&g, StartEdge::V1Vn, 1_000_000, opts()) {
            LollipopOutcome::Done(run) => {
                assert!(is_hamiltonian_cycle(&g, &run.c1));
                assert_ne!(run.c1, g.c0());
                assert_eq!(run.c1.as_slice(), &[1, 2, 11, 12, 8, 9, 10, 5, 4, 3, 6, 7]);
                let comps = crate::graph::symmetric_difference_components(&g.c0(), &run.c1);
                assert_eq!(comps.len(), 2);
                // The audit catches both the mid-walk shape break and the
                // disconnected final difference.
                assert!(!run.violations.is_empty());
                assert!(run.violations.iter().all(|v| v.violations.iter().all(|x| x.invariant() == 4)));
            }
            LollipopOutcome::StepLimit { .. } => panic!("short walk"),
        }
    }

    #[test]
    fn anchored_search_blind_spot_instance_still_walks() {
        // 10-vertex witness where every connected-difference second cycle
        // keeps both cycle edges at vertex 1; the walk must still terminate
        // with a valid (connected-difference) second cycle.
        let g = SmithInstance::new(10, &[(1, 6), (2, 5), (3, 9), (4, 8), (7, 10)]).unwrap();
        for start in [StartEdge::V1V2, StartEdge::V1Vn] {
            match run_lollipop(&g, start, 1_000_000, opts()) {
                LollipopOutcome::Done(run) => {
                    assert!(is_hamiltonian_cycle(&g, &run.c1));
                    assert!(difference_is_connected(&g.c0(), &run.c1));
                    assert!(run.c1.contains_edge(1, 2) && run.c1.contains_edge(1, 10));
                }
                LollipopOutcome::StepLimit { .. } => panic!("short walk"),
            }
        }
    }
}
