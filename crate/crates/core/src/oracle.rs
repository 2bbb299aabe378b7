//! Brute-force ground truth for small instances.
//!
//! Exhaustive enumeration of Hamiltonian cycles (rotation/reflection
//! dedup by anchoring at vertex 1 and requiring second < last), the
//! Smith–Tutte edge parity check, and the true longest second cycle.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{norm_edge, Adjacency, CyclePerm, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub cap: usize,
}

/// All Hamiltonian cycles of an instance, canonicalized, plus per-edge counts.
#[derive(Clone, Debug)]
pub struct HcSet {
    cycles: Vec<CyclePerm>,
    edge_counts: BTreeMap<(Vertex, Vertex), usize>,
}

impl HcSet {
    pub fn cycles(&self) -> &[CyclePerm] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains(&self, c: &CyclePerm) -> bool {
        self.cycles.contains(c)
    }

    /// Number of enumerated cycles through `u`-`v`.
    pub fn edge_count(&self, u: Vertex, v: Vertex) -> usize {
        self.edge_counts.get(&norm_edge(u, v)).copied().unwrap_or(0)
    }

    pub fn edge_counts(&self) -> &BTreeMap<(Vertex, Vertex), usize> {
        &self.edge_counts
    }
}

/// Exhaustive DFS from vertex 1 with neighbor order fixed; each cycle is
/// reported once. Intended for n ≤ 30.
pub fn enumerate_hamiltonian_cycles(g: &impl Adjacency, cap: usize) -> Result<HcSet, CapExceeded> {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut cycles = Vec::new();
    let mut edge_counts: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();

    let mut path: Vec<Vertex> = Vec::with_capacity(n);
    path.push(1);
    let mut used = vec![false; n + 1];
    used[1] = true;
    // Stack of neighbor cursors, parallel to `path`.
    let mut cursor = vec![0usize; 1];

    while let Some(&v) = path.last() {
        let depth = path.len();
        let nb = &adj[v];
        let i = cursor[depth - 1];
        if i >= nb.len() {
            path.pop();
            cursor.pop();
            used[v] = false;
            continue;
        }
        cursor[depth - 1] += 1;
        let w = nb[i];
        if depth == n {
            // Close the cycle; reflection broken by second < last.
            if w == 1 && path[1] < path[n - 1] {
                if cycles.len() == cap {
                    return Err(CapExceeded { cap });
                }
                let c = CyclePerm::new(path.clone()).expect("DFS path is a permutation");
                for e in c.edges() {
                    *edge_counts.entry(e).or_insert(0) += 1;
                }
                cycles.push(c);
            }
            continue;
        }
        if !used[w] && w != 1 {
            used[w] = true;
            path.push(w);
            cursor.push(0);
        }
    }

    cycles.sort_unstable();
    Ok(HcSet { cycles, edge_counts })
}

/// Outcome of the Smith–Tutte parity check: every edge of a cubic
/// Hamiltonian graph lies on an even number of Hamiltonian cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityCheck {
    Pass,
    Fail { odd_edges: Vec<(Vertex, Vertex)> },
}

pub fn edge_parity_check(g: &crate::graph::SmithInstance) -> ParityCheck {
    let hcs = enumerate_hamiltonian_cycles(g, usize::MAX).expect("uncapped");
    let mut odd = Vec::new();
    for pos in 1..=g.n() {
        let (u, v) = g.endpoints(g.c0_edge(pos));
        if hcs.edge_count(u, v) % 2 != 0 {
            odd.push(norm_edge(u, v));
        }
    }
    for &(u, v) in g.chords() {
        if hcs.edge_count(u, v) % 2 != 0 {
            odd.push((u, v));
        }
    }
    if odd.is_empty() {
        ParityCheck::Pass
    } else {
        ParityCheck::Fail { odd_edges: odd }
    }
}

/// Length of the longest simple cycle different from `c0`. Exhaustive;
/// intended for sparse instances with n ≤ 20.
pub fn longest_second_cycle(g: &impl Adjacency, c0: &CyclePerm) -> usize {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut best = 0;

    // Each cycle is found once, anchored at its smallest vertex.
    for anchor in 1..=n {
        let mut used = vec![false; n + 1];
        used[anchor] = true;
        let mut path = vec![anchor];
        longest_cycle_dfs(&adj, anchor, &mut path, &mut used, c0, &mut best);
    }
    best
}

fn longest_cycle_dfs(
    adj: &[Vec<Vertex>],
    anchor: Vertex,
    path: &mut Vec<Vertex>,
    used: &mut [bool],
    c0: &CyclePerm,
    best: &mut usize,
) {
    let v = *path.last().expect("non-empty path");
    for &w in &adj[v] {
        if w == anchor && path.len() >= 3 {
            let len = path.len();
            if len > *best {
                let is_c0 = len == c0.len()
                    && CyclePerm::new(path.clone()).map(|c| &c == c0).unwrap_or(false);
                if !is_c0 {
                    *best = len;
                }
            } else if len == *best {
                // Already matched; nothing longer down this closing edge.
            }
        }
        if w > anchor && !used[w] {
            used[w] = true;
            path.push(w);
            longest_cycle_dfs(adj, anchor, path, used, c0, best);
            path.pop();
            used[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SmithInstance;

    fn k4() -> SmithInstance {
        SmithInstance::new(4, &[(1, 3), (2, 4)]).unwrap()
    }

    fn k33() -> SmithInstance {
        SmithInstance::new(6, &[(1, 4), (2, 5), (3, 6)]).unwrap()
    }

    fn cube() -> SmithInstance {
        SmithInstance::new(8, &[(1, 4), (2, 7), (3, 6), (5, 8)]).unwrap()
    }

    #[test]
    fn counts_match_known_instances() {
        // (4-1)!/2 = 3 for K4; K3,3 and Q3 both have 6.
        assert_eq!(enumerate_hamiltonian_cycles(&k4(), usize::MAX).unwrap().len(), 3);
        assert_eq!(enumerate_hamiltonian_cycles(&k33(), usize::MAX).unwrap().len(), 6);
        assert_eq!(enumerate_hamiltonian_cycles(&cube(), usize::MAX).unwrap().len(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate_hamiltonian_cycles(&k33(), 2).unwrap_err(), CapExceeded { cap: 2 });
    }

    #[test]
    fn parity_passes_on_named_instances() {
        assert_eq!(edge_parity_check(&k4()), ParityCheck::Pass);
        assert_eq!(edge_parity_check(&k33()), ParityCheck::Pass);
        assert_eq!(edge_parity_check(&cube()), ParityCheck::Pass);
        // K4: each edge lies on exactly 2 of the 3 cycles.
        let hcs = enumerate_hamiltonian_cycles(&k4(), usize::MAX).unwrap();
        for (_, &c) in hcs.edge_counts() {
            assert_eq!(c, 2);
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let hcs = enumerate_hamiltonian_cycles(&cube(), usize::MAX).unwrap();
        for (i, a) in hcs.cycles().iter().enumerate() {
            for b in &hcs.cycles()[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn longest_second_cycle_on_named() {
        let g = k4();
        assert_eq!(longest_second_cycle(&g, &g.c0()), 4);
        let h = k33();
        assert_eq!(longest_second_cycle(&h, &h.c0()), 6);
        let q = cube();
        assert_eq!(longest_second_cycle(&q, &q.c0()), 8);
    }
}
