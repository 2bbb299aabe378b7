//! Oracle-backed structural properties across the modules.

use proptest::prelude::*;
use smith_core::approx;
use smith_core::gen::{generate, random_cubic, GenKind, GenSpec, Generated, NamedInstance};
use smith_core::graph::{
    is_hamiltonian_cycle, norm_edge, symmetric_difference_components, CyclePerm, SmithInstance,
    Vertex,
};
use smith_core::lollipop::{run_lollipop, LollipopOutcome, RunOptions, StartEdge};
use smith_core::oracle::{edge_parity_check, enumerate_hamiltonian_cycles, ParityCheck};
use smith_core::reduce::{
    find_x_certificate, lift_one, project_cycle, reduce_one_triangle, second_cycle_from_x_certificate,
    TriangleStep, XCertificate,
};
use smith_core::solver::{propagate, search_second_cycle, SearchOptions, SeedEdge, WorkOrder};

fn named() -> Vec<SmithInstance> {
    [NamedInstance::K4, NamedInstance::K33, NamedInstance::Prism, NamedInstance::Cube]
        .into_iter()
        .map(|m| m.build())
        .collect()
}

fn small_corpus() -> Vec<SmithInstance> {
    let mut out = named();
    for n in [8usize, 10, 12, 14] {
        for seed in 0..12u64 {
            out.push(random_cubic(n, seed).unwrap());
        }
    }
    out
}

#[test]
fn difference_components_alternate_and_have_even_length() {
    for inst in small_corpus() {
        let hcs = enumerate_hamiltonian_cycles(&inst, usize::MAX).unwrap();
        let cycles = hcs.cycles();
        for a in cycles {
            for b in cycles {
                let comps = symmetric_difference_components(a, b);
                assert_eq!(comps.is_empty(), a == b);
                for comp in comps {
                    assert_eq!(comp.len() % 2, 0, "odd component on n={}", inst.n());
                    let on_c0 = |&(u, v): &(Vertex, Vertex)| {
                        inst.next(u) == v || inst.next(v) == u
                    };
                    let c0_edges = comp.iter().filter(|e| on_c0(e)).count();
                    assert_eq!(2 * c0_edges, comp.len(), "component must alternate");
                }
            }
        }
    }
}

#[test]
fn x_certificate_agrees_with_quadratic_scan() {
    // Independent oracle: try all chord pairs against the pattern.
    fn scan(inst: &SmithInstance) -> Option<XCertificate> {
        let n = inst.n();
        let mut best: Option<(usize, usize)> = None;
        for &(a, b) in inst.chords() {
            for &(c, d) in inst.chords() {
                if (a, b) == (c, d) {
                    continue;
                }
                // Pattern: chords v_i v_k and v_{i+1} v_{k+1}.
                for (i, k) in [(a, b), (b, a)] {
                    for (i2, k2) in [(c, d), (d, c)] {
                        if i2 == (i % n) + 1 && k2 == (k % n) + 1 {
                            let (lo, hi) = (i.min(k), i.max(k));
                            if hi != lo + 1 && !(lo == 1 && hi == n) {
                                let cand = (lo, hi);
                                if best.map(|b| cand < b).unwrap_or(true) {
                                    best = Some(cand);
                                }
                            }
                        }
                    }
                }
            }
        }
        best.map(|(i, k)| XCertificate { i, k })
    }

    let mut checked = 0;
    for n in (10..=40).step_by(2) {
        for seed in 0..14u64 {
            let inst = random_cubic(n, seed).unwrap();
            let fast = find_x_certificate(&inst);
            assert_eq!(fast, scan(&inst), "n={n} seed={seed}");
            if let Some(cert) = fast {
                let c1 = second_cycle_from_x_certificate(&inst, cert);
                assert!(is_hamiltonian_cycle(&inst, &c1));
                assert_ne!(c1, inst.c0());
                checked += 1;
            }
        }
    }
    assert!(checked >= 200, "want at least 200 certified instances, got {checked}");
}

#[test]
fn triangle_reduction_is_a_bijection() {
    let mut reduced_seen = 0;
    for inst in small_corpus() {
        let step = match reduce_one_triangle(&inst) {
            Ok(s) => s,
            Err(_) => continue, // triangle-free
        };
        match step {
            TriangleStep::SecondCycle(c1) => {
                assert!(is_hamiltonian_cycle(&inst, &c1));
                assert_ne!(c1, inst.c0());
            }
            TriangleStep::Reduced(smaller, record) => {
                reduced_seen += 1;
                let up = enumerate_hamiltonian_cycles(&inst, usize::MAX).unwrap();
                let down = enumerate_hamiltonian_cycles(&smaller, usize::MAX).unwrap();
                assert_eq!(up.len(), down.len(), "bijection must preserve counts");
                for c in up.cycles() {
                    let p = project_cycle(c, &record).unwrap();
                    assert!(down.contains(&p));
                    assert_eq!(&lift_one(&p, &record).unwrap(), c, "lift o project = id");
                }
                for c in down.cycles() {
                    assert!(up.contains(&lift_one(c, &record).unwrap()));
                }
            }
        }
    }
    assert!(reduced_seen >= 5, "corpus too triangle-poor: {reduced_seen}");
}

#[test]
fn lollipop_terminates_with_second_cycles_on_small_corpus() {
    for inst in small_corpus() {
        for start in [StartEdge::V1V2, StartEdge::V1Vn] {
            match run_lollipop(&inst, start, 10_000_000, RunOptions::default()) {
                LollipopOutcome::Done(run) => {
                    assert!(is_hamiltonian_cycle(&inst, &run.c1));
                    assert_ne!(run.c1, inst.c0());
                    // The difference is red ∪ blue by construction.
                    let mut want: Vec<_> = symmetric_difference_components(&inst.c0(), &run.c1)
                        .into_iter()
                        .flatten()
                        .collect();
                    want.sort_unstable();
                    let mut got = run.d.clone();
                    got.sort_unstable();
                    assert_eq!(got, want);
                }
                LollipopOutcome::StepLimit { .. } => panic!("small walks terminate"),
            }
        }
    }
}

#[test]
fn lollipop_invariants_clean_on_named_instances() {
    let opts = RunOptions { verify_invariants: true, record_trace: false };
    for inst in named() {
        for start in [StartEdge::V1V2, StartEdge::V1Vn] {
            match run_lollipop(&inst, start, 1_000_000, opts) {
                LollipopOutcome::Done(run) => assert!(run.violations.is_empty()),
                LollipopOutcome::StepLimit { .. } => panic!("short walk"),
            }
        }
    }
}

#[test]
fn approx_never_overclaims_against_oracle() {
    use smith_core::oracle::longest_second_cycle;
    for n in [8usize, 10, 12, 14] {
        for seed in 0..8u64 {
            let smith = random_cubic(n, seed).unwrap();
            let inst = smith.to_general();
            let out = approx::find_long_cycle(&inst);
            assert!(approx::is_valid_cycle(&inst, &out.cycle));
            assert!(approx::differs_from_c0(&inst, &out.cycle));
            let best = longest_second_cycle(&smith, &smith.c0());
            assert!(
                out.cycle.len() <= best,
                "n={n} seed={seed}: returned {} > optimum {best}",
                out.cycle.len()
            );
            assert!(out.cycle.len() >= out.certificate.guaranteed(n));
        }
    }
}

/// Maximum bipartite matching by augmenting paths (test oracle).
fn max_matching(left: &[Vertex], edges: &[(Vertex, Vertex)]) -> usize {
    use std::collections::HashMap;
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
    }
    let mut matched_right: HashMap<Vertex, Vertex> = HashMap::new();

    fn augment(
        v: Vertex,
        adj: &HashMap<Vertex, Vec<Vertex>>,
        matched_right: &mut HashMap<Vertex, Vertex>,
        seen: &mut std::collections::HashSet<Vertex>,
    ) -> bool {
        for &w in adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
            if !seen.insert(w) {
                continue;
            }
            let free = match matched_right.get(&w) {
                None => true,
                Some(&owner) => augment(owner, adj, matched_right, seen),
            };
            if free {
                matched_right.insert(w, v);
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for &v in left {
        let mut seen = std::collections::HashSet::new();
        if augment(v, &adj, &mut matched_right, &mut seen) {
            size += 1;
        }
    }
    size
}

#[test]
fn block_chord_graphs_meet_the_matching_bound() {
    // All-long-chord instances so the block machinery applies.
    let n = 400;
    let families: Vec<Vec<(Vertex, Vertex)>> = vec![
        (1..=n / 2).map(|i| (i, i + n / 2)).collect(),
        {
            let mut chords = Vec::new();
            for i in 0..10usize {
                for t in 1..=20usize {
                    chords.push((20 * i + t, 200 + 20 * i + 21 - t));
                }
            }
            chords
        },
    ];
    for chords in families {
        let inst = smith_core::graph::GeneralInstance::new(n, &chords).unwrap();
        let alpha = approx::alpha_of(&inst);
        let partition = approx::partition_blocks(n, alpha).unwrap();
        let block = partition.block_of(n);
        let delta_cap = inst.max_degree();
        for (i, (&start, &len)) in partition.starts.iter().zip(&partition.sizes).enumerate() {
            let left: Vec<Vertex> = (start..start + len).collect();
            let mut edges = Vec::new();
            for &v in &left {
                for &w in inst.chord_neighbors(v) {
                    edges.push((v, w));
                }
            }
            let m = max_matching(&left, &edges);
            // Matching bound: |E_i| / Δ, rounded up.
            let bound = edges.len().div_ceil(delta_cap);
            assert!(m >= bound, "block {i}: matching {m} < bound {bound}");
            let _ = block;
        }
    }
}

#[test]
fn generated_cubic_instances_pass_parity() {
    for n in [8usize, 12, 16] {
        for seed in 0..6u64 {
            let inst = random_cubic(n, seed).unwrap();
            assert_eq!(edge_parity_check(&inst), ParityCheck::Pass, "n={n} seed={seed}");
        }
    }
}

#[test]
fn generation_is_deterministic_across_kinds() {
    for kind in [GenKind::Cubic, GenKind::Regular(4), GenKind::MinDegree { delta: 3, max: 5 }] {
        let spec = GenSpec { kind, n: 20, seed: 9 };
        let a = format!("{:?}", generate(&spec).unwrap());
        let b = format!("{:?}", generate(&spec).unwrap());
        assert_eq!(a, b);
    }
}

#[test]
fn forcing_paths_share_no_interior_vertex() {
    use smith_core::solver::{compute_forcing_paths, DState, SearchNode};
    for n in [10usize, 14, 18] {
        for seed in 0..20u64 {
            let inst = random_cubic(n, seed).unwrap();
            if smith_core::reduce::find_triangle(&inst).is_some() {
                continue;
            }
            for seed_edge in [SeedEdge::V1V2, SeedEdge::V1Vn] {
                let node = match SearchNode::seeded(&inst, seed_edge) {
                    Ok(n) => n,
                    Err(_) => continue,
                };
                if let DState::Tip(tip) = node.d_state() {
                    let (plus, minus) = compute_forcing_paths(&node, tip);
                    let pi: std::collections::BTreeSet<_> =
                        plus.vertices[1..plus.vertices.len().saturating_sub(1)].iter().collect();
                    for v in &minus.vertices[1..minus.vertices.len().saturating_sub(1)] {
                        assert!(!pi.contains(v));
                    }
                }
            }
        }
    }
}

#[test]
fn propagation_confluent_on_solver_branch_nodes() {
    let mut samples = Vec::new();
    let mut instances = Vec::new();
    for n in [12usize, 16, 20] {
        for seed in 0..10u64 {
            let inst = random_cubic(n, seed).unwrap();
            if smith_core::reduce::find_triangle(&inst).is_none() {
                instances.push(inst);
            }
        }
    }
    for inst in &instances {
        let mut collected = Vec::new();
        let _ = search_second_cycle(inst, SeedEdge::V1V2, SearchOptions::default(), Some(&mut collected));
        samples.extend(collected);
    }
    assert!(samples.len() >= 100, "collected {} branch samples", samples.len());
    for sample in &samples {
        let mut fifo = sample.node.clone();
        let mut lifo = sample.node.clone();
        match (
            propagate(&mut fifo, &sample.assignments, WorkOrder::Fifo),
            propagate(&mut lifo, &sample.assignments, WorkOrder::Lifo),
        ) {
            (Ok(_), Ok(_)) => assert_eq!(fifo.coloring(), lifo.coloring()),
            (Err(_), Err(_)) => {}
            _ => panic!("orders disagree on contradiction"),
        }
    }
}

proptest! {
    #[test]
    fn cycle_perm_canonicalization_kills_rotation_and_reflection(
        n in 3usize..12,
        rot in 0usize..12,
        reflect in proptest::bool::ANY,
        swap_seed in 0u64..1000,
    ) {
        // Random permutation of 1..=n via a cheap shuffle.
        let mut seq: Vec<usize> = (1..=n).collect();
        let mut s = swap_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            seq.swap(i, j);
        }
        let original = CyclePerm::new(seq.clone()).unwrap();
        let mut moved = seq;
        moved.rotate_left(rot % n);
        if reflect {
            moved.reverse();
        }
        prop_assert_eq!(CyclePerm::new(moved).unwrap(), original);
    }

    #[test]
    fn chord_partner_is_a_fixed_point_free_involution(n in 3usize..20, seed in 0u64..500) {
        let n = 2 * n;
        let inst = random_cubic(n, seed).unwrap();
        for v in 1..=n {
            let p = inst.partner(v);
            prop_assert_ne!(p, v);
            prop_assert_eq!(inst.partner(p), v);
        }
    }

    #[test]
    fn chord_distance_is_symmetric(n in 8usize..60, a in 1usize..60, b in 1usize..60, c in 1usize..60, d in 1usize..60) {
        let (a, b, c, d) = (a % n + 1, b % n + 1, c % n + 1, d % n + 1);
        let ok = |x: usize, y: usize| {
            x != y && norm_edge(x, y).1 - norm_edge(x, y).0 != 1 && !(norm_edge(x, y) == (1, n))
        };
        prop_assume!(ok(a, b) && ok(c, d));
        prop_assume!(a != c && a != d && b != c && b != d);
        let e1 = (a, b);
        let e2 = (c, d);
        let r1 = approx::chord_distance(n, e1, e2).unwrap();
        let r2 = approx::chord_distance(n, e2, e1).unwrap();
        prop_assert_eq!(r1, r2);
    }
}
