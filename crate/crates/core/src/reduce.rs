//! Preprocessing: X-certificate shortcut and triangle elimination.
//!
//! An X-certificate is a pair of chords `v_i v_k`, `v_{i+1} v_{k+1}` crossing
//! like an "X"; reversing the enclosed arc immediately yields a second
//! Hamiltonian cycle. Triangle elimination removes one triangle at a time,
//! either producing a second cycle outright or shrinking the instance by two
//! vertices while keeping Hamiltonian cycles in bijection, so downstream
//! solvers may assume triangle-free inputs. Lifting records are kept so
//! cycles of the reduced instance can be mapped back.

use alloc::vec::Vec;

use crate::graph::{norm_edge, CyclePerm, SmithInstance, Vertex};

/// Positions `(i, k)` with chords `v_i v_k` and `v_{i+1} v_{k+1}`, `i < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XCertificate {
    pub i: usize,
    pub k: usize,
}

/// The lexicographically smallest X-certificate, if any. Single pass: each
/// position carries a unique chord, so the candidate `k` is determined by `i`.
pub fn find_x_certificate(inst: &SmithInstance) -> Option<XCertificate> {
    let n = inst.n();
    let mut best: Option<(usize, usize)> = None;
    for i in 1..=n {
        let k = inst.partner(i);
        if k == inst.next(i) || k == inst.prev(i) {
            continue;
        }
        if inst.partner(inst.next(i)) != inst.next(k) {
            continue;
        }
        let pair = if i < k { (i, k) } else { (k, i) };
        if best.map(|b| pair < b).unwrap_or(true) {
            best = Some(pair);
        }
    }
    best.map(|(i, k)| XCertificate { i, k })
}

/// Second Hamiltonian cycle from an X-certificate:
/// `(v_1, …, v_i, v_k, v_{k-1}, …, v_{i+1}, v_{k+1}, …, v_n)`.
pub fn second_cycle_from_x_certificate(inst: &SmithInstance, cert: XCertificate) -> CyclePerm {
    let n = inst.n();
    debug_assert!(cert.i < cert.k && cert.k <= n);
    let mut seq = Vec::with_capacity(n);
    seq.extend(1..=cert.i);
    seq.extend((cert.i + 1..=cert.k).rev());
    seq.extend(cert.k + 1..=n);
    CyclePerm::new(seq).expect("arc reversal is a permutation")
}

/// One triangle elimination step, in the vertex names of the instance it was
/// applied to. Replaying a record backwards maps any Hamiltonian cycle of
/// the reduced instance to one of the instance it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionRecord {
    pub n_before: usize,
    /// The triangle was `(removed.0, pivot, removed.1)`, consecutive on the cycle.
    pub pivot: Vertex,
    /// `(v_{i-1}, v_{i+1})` — the two dropped vertices.
    pub removed: (Vertex, Vertex),
    /// Chord partner of the pivot.
    pub pivot_partner: Vertex,
    /// New cycle edges of the smaller instance: `(v_{i-2} v_i, v_i v_{i+2})`.
    pub new_edges: ((Vertex, Vertex), (Vertex, Vertex)),
    /// `names[j]` is the before-name of reduced vertex `j+1`.
    pub names: Vec<Vertex>,
}

pub type ReductionTrace = Vec<ReductionRecord>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceError {
    NoTriangle,
    /// The cycle handed to a lifting map does not fit the instance.
    BadCycle,
}

impl core::fmt::Display for ReduceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReduceError::NoTriangle => f.write_str("instance is triangle-free"),
            ReduceError::BadCycle => f.write_str("cycle does not match the reduced instance"),
        }
    }
}

/// Result of one elimination step.
#[derive(Clone, Debug)]
pub enum TriangleStep {
    /// An early exit produced a second Hamiltonian cycle of the input.
    SecondCycle(CyclePerm),
    Reduced(SmithInstance, ReductionRecord),
}

/// Smallest position `i` such that `(v_{i-1}, v_i, v_{i+1})` is a triangle.
/// In a cubic graph every triangle has this consecutive form: a triangle
/// with fewer than two cycle edges would need two chords at one vertex.
pub fn find_triangle(inst: &SmithInstance) -> Option<usize> {
    (1..=inst.n()).find(|&i| inst.partner(inst.prev(i)) == inst.next(i))
}

/// Eliminate the first triangle: a second cycle via a local swap when
/// `v_i v_{i+2}` or `v_i v_{i-2}` is an edge, otherwise a reduced instance
/// on `n - 2` vertices plus its lifting record.
pub fn reduce_one_triangle(inst: &SmithInstance) -> Result<TriangleStep, ReduceError> {
    let i = find_triangle(inst).ok_or(ReduceError::NoTriangle)?;
    let n = inst.n();
    let (im1, ip1) = (inst.prev(i), inst.next(i));
    debug_assert_eq!(inst.partner(im1), ip1, "triangle chord");
    let im2 = inst.prev(im1);
    let ip2 = inst.next(ip1);

    if inst.partner(i) == ip2 {
        // Reroute (v_{i-1}, v_i, v_{i+1}, v_{i+2}) as (v_{i-1}, v_{i+1}, v_i, v_{i+2});
        // in the identity order that is a swap of the entries v_i and v_{i+1}.
        let mut seq: Vec<Vertex> = (1..=n).collect();
        seq.swap(i - 1, ip1 - 1);
        return Ok(TriangleStep::SecondCycle(CyclePerm::new(seq).expect("swap of two entries")));
    }
    if inst.partner(i) == im2 {
        // Mirror: (v_{i-2}, v_i, v_{i-1}, v_{i+1}).
        let mut seq: Vec<Vertex> = (1..=n).collect();
        seq.swap(i - 1, im1 - 1);
        return Ok(TriangleStep::SecondCycle(CyclePerm::new(seq).expect("swap of two entries")));
    }

    // Drop v_{i-1} and v_{i+1}, connect v_i to v_{i-2} and v_{i+2}, rename
    // the survivors to 1..n-2 in cycle order.
    let names: Vec<Vertex> = (1..=n).filter(|&v| v != im1 && v != ip1).collect();
    let mut new_id = alloc::vec![0usize; n + 1];
    for (j, &old) in names.iter().enumerate() {
        new_id[old] = j + 1;
    }
    let chords: Vec<(Vertex, Vertex)> = inst
        .chords()
        .iter()
        .filter(|&&c| c != norm_edge(im1, ip1))
        .map(|&(a, b)| (new_id[a], new_id[b]))
        .collect();
    let reduced = SmithInstance::new(n - 2, &chords)
        .expect("triangle elimination preserves the cubic matching structure");
    let record = ReductionRecord {
        n_before: n,
        pivot: i,
        removed: (im1, ip1),
        pivot_partner: inst.partner(i),
        new_edges: ((im2, i), (i, ip2)),
        names,
    };
    Ok(TriangleStep::Reduced(reduced, record))
}

/// Outcome of exhaustive triangle elimination.
#[derive(Clone, Debug)]
pub enum MakeTriangleFree {
    /// A second Hamiltonian cycle of the *original* instance surfaced early.
    SecondCycle(CyclePerm),
    /// Triangle-free instance plus the trace to lift cycles back.
    Reduced(SmithInstance, ReductionTrace),
}

/// Repeated [`reduce_one_triangle`] until triangle-free or a second cycle
/// surfaces; early-exit cycles are lifted back to the input instance.
pub fn make_triangle_free(inst: &SmithInstance) -> MakeTriangleFree {
    let mut cur = inst.clone();
    let mut trace: ReductionTrace = Vec::new();
    loop {
        if find_triangle(&cur).is_none() {
            return MakeTriangleFree::Reduced(cur, trace);
        }
        match reduce_one_triangle(&cur).expect("triangle present") {
            TriangleStep::SecondCycle(c) => {
                let lifted = lift_cycle(&c, &trace).expect("early-exit cycle lifts");
                return MakeTriangleFree::SecondCycle(lifted);
            }
            TriangleStep::Reduced(next, record) => {
                trace.push(record);
                cur = next;
            }
        }
    }
}

/// Map a Hamiltonian cycle of the instance produced by `record` back to one
/// of the instance `record` was made from. The three cases key on which two
/// of the pivot's edges `v_{i-2} v_i`, `v_i v_{i+2}`, `v_i v_i*` the cycle uses.
pub fn lift_one(cyc: &CyclePerm, record: &ReductionRecord) -> Result<CyclePerm, ReduceError> {
    let m = record.n_before - 2;
    if cyc.len() != m {
        return Err(ReduceError::BadCycle);
    }
    // Back to before-names, rotated so the pivot comes first.
    let mut rot: Vec<Vertex> = cyc.as_slice().iter().map(|&v| record.names[v - 1]).collect();
    let pivot = record.pivot;
    let p = rot.iter().position(|&v| v == pivot).ok_or(ReduceError::BadCycle)?;
    rot.rotate_left(p);
    let next = rot[1];
    let prev = *rot.last().expect("nonempty");
    let nbrs = norm_edge(next, prev);

    let (im1, ip1) = record.removed;
    let ((im2, _), (_, ip2)) = record.new_edges;
    let partner = record.pivot_partner;

    let mut out: Vec<Vertex> = Vec::with_capacity(record.n_before);
    if nbrs == norm_edge(im2, ip2) {
        // Straight through: …, v_{i-2}, v_{i-1}, v_i, v_{i+1}, v_{i+2}, …
        if next == ip2 {
            out.push(pivot);
            out.push(ip1);
            out.extend_from_slice(&rot[1..]);
            out.push(im1);
        } else {
            out.push(pivot);
            out.push(im1);
            out.extend_from_slice(&rot[1..]);
            out.push(ip1);
        }
    } else if nbrs == norm_edge(im2, partner) {
        // Used v_{i-2} v_i and the chord: detour v_{i-2}, v_{i-1}, v_{i+1}, v_i.
        if next == im2 {
            out.push(pivot);
            out.push(ip1);
            out.push(im1);
            out.extend_from_slice(&rot[1..]);
        } else {
            out.extend_from_slice(&rot);
            out.push(im1);
            out.push(ip1);
        }
    } else if nbrs == norm_edge(ip2, partner) {
        // Mirror: detour v_{i+2}, v_{i+1}, v_{i-1}, v_i.
        if next == ip2 {
            out.push(pivot);
            out.push(im1);
            out.push(ip1);
            out.extend_from_slice(&rot[1..]);
        } else {
            out.extend_from_slice(&rot);
            out.push(ip1);
            out.push(im1);
        }
    } else {
        return Err(ReduceError::BadCycle);
    }

    CyclePerm::new(out).map_err(|_| ReduceError::BadCycle)
}

/// Lift a cycle of the fully reduced instance back through a whole trace.
pub fn lift_cycle(cyc: &CyclePerm, trace: &ReductionTrace) -> Result<CyclePerm, ReduceError> {
    let mut cur = cyc.clone();
    for record in trace.iter().rev() {
        cur = lift_one(&cur, record)?;
    }
    Ok(cur)
}

/// Inverse of [`lift_one`]: drop the two removed vertices and rename.
pub fn project_cycle(cyc: &CyclePerm, record: &ReductionRecord) -> Result<CyclePerm, ReduceError> {
    if cyc.len() != record.n_before {
        return Err(ReduceError::BadCycle);
    }
    let (im1, ip1) = record.removed;
    let mut inv = alloc::vec![0usize; record.n_before + 1];
    for (j, &old) in record.names.iter().enumerate() {
        inv[old] = j + 1;
    }
    let seq: Vec<Vertex> =
        cyc.as_slice().iter().filter(|&&v| v != im1 && v != ip1).map(|&v| inv[v]).collect();
    CyclePerm::new(seq).map_err(|_| ReduceError::BadCycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{difference_is_connected, is_hamiltonian_cycle, symmetric_difference_components};
    use crate::oracle::enumerate_hamiltonian_cycles;
    use alloc::vec;

    fn k4() -> SmithInstance {
        SmithInstance::new(4, &[(1, 3), (2, 4)]).unwrap()
    }

    fn k33() -> SmithInstance {
        SmithInstance::new(6, &[(1, 4), (2, 5), (3, 6)]).unwrap()
    }

    fn cube() -> SmithInstance {
        SmithInstance::new(8, &[(1, 4), (2, 7), (3, 6), (5, 8)]).unwrap()
    }

    fn prism() -> SmithInstance {
        SmithInstance::new(6, &[(1, 4), (2, 6), (3, 5)]).unwrap()
    }

    #[test]
    fn x_certificates_on_named_instances() {
        assert_eq!(find_x_certificate(&k4()), Some(XCertificate { i: 1, k: 3 }));
        assert_eq!(find_x_certificate(&k33()), Some(XCertificate { i: 1, k: 4 }));
        assert_eq!(find_x_certificate(&cube()), None);
    }

    #[test]
    fn x_certificate_cycles() {
        let c = second_cycle_from_x_certificate(&k4(), XCertificate { i: 1, k: 3 });
        assert_eq!(c.as_slice(), &[1, 3, 2, 4]);
        assert!(is_hamiltonian_cycle(&k4(), &c));

        let c = second_cycle_from_x_certificate(&k33(), XCertificate { i: 1, k: 4 });
        assert_eq!(c.as_slice(), &[1, 4, 3, 2, 5, 6]);
        assert!(is_hamiltonian_cycle(&k33(), &c));

        let ladder = SmithInstance::new(8, &[(1, 5), (2, 6), (3, 7), (4, 8)]).unwrap();
        let c = second_cycle_from_x_certificate(&ladder, XCertificate { i: 1, k: 5 });
        assert_eq!(c.as_slice(), &[1, 5, 4, 3, 2, 6, 7, 8]);
        assert!(is_hamiltonian_cycle(&ladder, &c));
        assert!(difference_is_connected(&ladder.c0(), &c));
    }

    #[test]
    fn k4_triangle_early_exit() {
        match reduce_one_triangle(&k4()).unwrap() {
            TriangleStep::SecondCycle(c) => {
                assert!(is_hamiltonian_cycle(&k4(), &c));
                assert_ne!(c, k4().c0());
                // Exactly two edges differ from C0.
                let diff = symmetric_difference_components(&k4().c0(), &c);
                assert_eq!(diff.len(), 1);
                assert_eq!(diff[0].len(), 4);
            }
            TriangleStep::Reduced(..) => panic!("K4 must exit early"),
        }
    }

    #[test]
    fn prism_reduces_to_k4() {
        match reduce_one_triangle(&prism()).unwrap() {
            TriangleStep::Reduced(g, record) => {
                assert_eq!(g.n(), 4);
                // Survivors are (1, 3, 4, 5) in cycle order.
                assert_eq!(record.names, vec![1, 3, 4, 5]);
                assert_eq!(record.removed, (6, 2));
                assert_eq!(record.pivot, 1);
                // Renamed chords {1-4, 3-5} -> {1-3, 2-4}: K4.
                assert_eq!(g.chords(), &[(1, 3), (2, 4)]);
            }
            TriangleStep::SecondCycle(_) => panic!("prism has no early exit at its first triangle"),
        }
    }

    #[test]
    fn no_triangle_error() {
        assert_eq!(reduce_one_triangle(&k33()).unwrap_err(), ReduceError::NoTriangle);
        assert!(find_triangle(&cube()).is_none());
    }

    #[test]
    fn make_triangle_free_fixed_points() {
        match make_triangle_free(&k33()) {
            MakeTriangleFree::Reduced(g, trace) => {
                assert_eq!(g, k33());
                assert!(trace.is_empty());
            }
            _ => panic!(),
        }
        match make_triangle_free(&cube()) {
            MakeTriangleFree::Reduced(g, trace) => {
                assert_eq!(g, cube());
                assert!(trace.is_empty());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn prism_chain_ends_in_second_cycle() {
        // prism -> K4 (one reduction) -> K4 early exit, lifted back.
        match make_triangle_free(&prism()) {
            MakeTriangleFree::SecondCycle(c) => {
                assert!(is_hamiltonian_cycle(&prism(), &c));
                assert_ne!(c, prism().c0());
            }
            MakeTriangleFree::Reduced(..) => panic!("prism chain must surface a second cycle"),
        }
    }

    #[test]
    fn bijection_on_prism() {
        let (reduced, record) = match reduce_one_triangle(&prism()).unwrap() {
            TriangleStep::Reduced(g, r) => (g, r),
            _ => unreachable!(),
        };
        let up = enumerate_hamiltonian_cycles(&prism(), usize::MAX).unwrap();
        let down = enumerate_hamiltonian_cycles(&reduced, usize::MAX).unwrap();
        assert_eq!(up.len(), down.len());
        // lift ∘ project is the identity, and both maps land in the HC sets.
        for c in up.cycles() {
            let proj = project_cycle(c, &record).unwrap();
            assert!(down.contains(&proj));
            assert_eq!(&lift_one(&proj, &record).unwrap(), c);
        }
        for c in down.cycles() {
            let lifted = lift_one(c, &record).unwrap();
            assert!(up.contains(&lifted));
            assert!(is_hamiltonian_cycle(&prism(), &lifted));
        }
    }

    #[test]
    fn second_n6_example_reduces_to_k4() {
        let g = SmithInstance::new(6, &[(1, 3), (2, 5), (4, 6)]).unwrap();
        match reduce_one_triangle(&g).unwrap() {
            TriangleStep::Reduced(h, record) => {
                assert_eq!(h.n(), 4);
                assert_eq!(record.pivot, 2);
                assert_eq!(record.removed, (1, 3));
                assert_eq!(h.chords(), &[(1, 3), (2, 4)]);
            }
            TriangleStep::SecondCycle(_) => {
                panic!("chords 2-5: neither 2-4 nor 2-6 is an edge, reduction expected")
            }
        }
    }

    #[test]
    fn lift_rejects_wrong_length() {
        let (_, record) = match reduce_one_triangle(&prism()).unwrap() {
            TriangleStep::Reduced(g, r) => (g, r),
            _ => unreachable!(),
        };
        let too_long = CyclePerm::from_identity(6);
        assert_eq!(lift_one(&too_long, &record).unwrap_err(), ReduceError::BadCycle);
    }
}
