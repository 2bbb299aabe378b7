//! Shared data model: instances, cycles, edges, symmetric differences.
//!
//! Vertices are `1..=n` and the designated Hamiltonian cycle is always the
//! identity order `(1, 2, …, n)` — input files with arbitrary labels are
//! renamed at parse time so that every algorithm can use plain modular
//! index arithmetic for cycle neighbors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// 1-based vertex id; position on the designated cycle.
pub type Vertex = usize;

/// Normalize an undirected edge to `(min, max)`.
pub fn norm_edge(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The four edge states used by both the lollipop walk and the exact
/// solver. Cycle edges are only ever black or red, chords only blue or
/// yellow; black and blue mark membership in the cycle being built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Black,
    Red,
    Blue,
    Yellow,
}

impl EdgeColor {
    /// True for the colors that mark edges of the produced cycle.
    pub fn in_target_cycle(self) -> bool {
        matches!(self, EdgeColor::Black | EdgeColor::Blue)
    }

    pub fn flipped(self) -> EdgeColor {
        match self {
            EdgeColor::Black => EdgeColor::Red,
            EdgeColor::Red => EdgeColor::Black,
            EdgeColor::Blue => EdgeColor::Yellow,
            EdgeColor::Yellow => EdgeColor::Blue,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EdgeColor::Black => "black",
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
            EdgeColor::Yellow => "yellow",
        };
        f.write_str(s)
    }
}

/// Dense edge index: `0..n` are cycle edges (`i` is the edge `v_{i+1} v_{i+2}`
/// counted cyclically), `n..` are chords in sorted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub(crate) usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An edge named by its role relative to the designated cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRef {
    /// Cycle edge at position `pos`, i.e. the edge `v_pos v_{pos+1}` (1-based,
    /// position `n` is the closing edge `v_n v_1`).
    C0 { pos: usize },
    /// A chord, endpoints normalized.
    Chord { a: Vertex, b: Vertex },
}

/// Validation failures for instance construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceError {
    OrderTooSmall(usize),
    OddOrder(usize),
    VertexOutOfRange(Vertex),
    SelfLoop(Vertex),
    ChordOnCycle(Vertex, Vertex),
    DuplicateEdge(Vertex, Vertex),
    /// A vertex appears in two chords (or none) where a perfect matching is required.
    MatchingViolation(Vertex),
    WrongChordCount { expected: usize, got: usize },
    MinDegree(Vertex, usize),
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::OrderTooSmall(n) => write!(f, "instance needs at least 4 vertices, got {n}"),
            InstanceError::OddOrder(n) => write!(f, "cubic instance needs even order, got {n}"),
            InstanceError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            InstanceError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            InstanceError::ChordOnCycle(u, v) => write!(f, "edge {u}-{v} duplicates a cycle edge"),
            InstanceError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            InstanceError::MatchingViolation(v) => {
                write!(f, "chord matching violation at vertex {v}")
            }
            InstanceError::WrongChordCount { expected, got } => {
                write!(f, "need exactly {expected} chords for a cubic instance, got {got}")
            }
            InstanceError::MinDegree(v, d) => {
                write!(f, "vertex {v} has degree {d}, minimum degree 3 required")
            }
        }
    }
}

/// Minimal graph view shared by the instance types.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn has_edge(&self, u: Vertex, v: Vertex) -> bool;
    /// 1-based adjacency lists; entry 0 is unused.
    fn adjacency_lists(&self) -> Vec<Vec<Vertex>>;
}

/// A cubic Hamiltonian graph: the cycle `(1, …, n)` plus a perfect matching
/// of chords. Immutable after validation; algorithms keep their own overlay
/// state so instances can be shared freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithInstance {
    n: usize,
    /// `partner[v]` is the unique chord neighbor of `v`; entry 0 unused.
    partner: Vec<Vertex>,
    /// Chords sorted by normalized endpoints.
    chords: Vec<(Vertex, Vertex)>,
    /// `chord_pos[v]` indexes `chords` for the chord at `v`; entry 0 unused.
    chord_pos: Vec<usize>,
}

impl SmithInstance {
    pub fn new(n: usize, chord_list: &[(Vertex, Vertex)]) -> Result<Self, InstanceError> {
        if n < 4 {
            return Err(InstanceError::OrderTooSmall(n));
        }
        if n % 2 != 0 {
            return Err(InstanceError::OddOrder(n));
        }
        if chord_list.len() != n / 2 {
            return Err(InstanceError::WrongChordCount { expected: n / 2, got: chord_list.len() });
        }
        let mut partner = vec![0usize; n + 1];
        let mut chords = Vec::with_capacity(n / 2);
        for &(u, v) in chord_list {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(InstanceError::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            let (a, b) = norm_edge(u, v);
            if b - a == 1 || (a == 1 && b == n) {
                return Err(InstanceError::ChordOnCycle(a, b));
            }
            if partner[a] != 0 {
                return Err(InstanceError::MatchingViolation(a));
            }
            if partner[b] != 0 {
                return Err(InstanceError::MatchingViolation(b));
            }
            partner[a] = b;
            partner[b] = a;
            chords.push((a, b));
        }
        // Perfect matching: every vertex covered exactly once.
        if let Some(v) = (1..=n).find(|&v| partner[v] == 0) {
            return Err(InstanceError::MatchingViolation(v));
        }
        chords.sort_unstable();
        let mut chord_pos = vec![usize::MAX; n + 1];
        for (i, &(a, b)) in chords.iter().enumerate() {
            chord_pos[a] = i;
            chord_pos[b] = i;
        }
        Ok(SmithInstance { n, partner, chords, chord_pos })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cyclic successor on the designated cycle.
    pub fn next(&self, v: Vertex) -> Vertex {
        if v == self.n {
            1
        } else {
            v + 1
        }
    }

    /// Cyclic predecessor on the designated cycle.
    pub fn prev(&self, v: Vertex) -> Vertex {
        if v == 1 {
            self.n
        } else {
            v - 1
        }
    }

    /// The unique vertex joined to `v` by a chord. Involution without fixed points.
    pub fn partner(&self, v: Vertex) -> Vertex {
        debug_assert!(v >= 1 && v <= self.n);
        self.partner[v]
    }

    pub fn chords(&self) -> &[(Vertex, Vertex)] {
        &self.chords
    }

    pub fn neighbors3(&self, v: Vertex) -> [Vertex; 3] {
        [self.prev(v), self.next(v), self.partner(v)]
    }

    pub fn edge_count(&self) -> usize {
        self.n + self.n / 2
    }

    /// Dense id of the cycle edge `v_pos v_{pos+1}`, `pos` in `1..=n`.
    pub fn c0_edge(&self, pos: usize) -> EdgeId {
        debug_assert!(pos >= 1 && pos <= self.n);
        EdgeId(pos - 1)
    }

    /// Dense id of the chord incident to `v`.
    pub fn chord_at(&self, v: Vertex) -> EdgeId {
        EdgeId(self.n + self.chord_pos[v])
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        if e.0 < self.n {
            let u = e.0 + 1;
            (u, self.next(u))
        } else {
            self.chords[e.0 - self.n]
        }
    }

    pub fn is_c0_edge(&self, e: EdgeId) -> bool {
        e.0 < self.n
    }

    pub fn edge_ref(&self, e: EdgeId) -> EdgeRef {
        if e.0 < self.n {
            EdgeRef::C0 { pos: e.0 + 1 }
        } else {
            let (a, b) = self.chords[e.0 - self.n];
            EdgeRef::Chord { a, b }
        }
    }

    /// Dense id of the edge between `u` and `v`, if present.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u == 0 || v == 0 || u > self.n || v > self.n || u == v {
            return None;
        }
        if self.next(u) == v {
            return Some(self.c0_edge(u));
        }
        if self.next(v) == u {
            return Some(self.c0_edge(v));
        }
        if self.partner[u] == v {
            return Some(self.chord_at(u));
        }
        None
    }

    /// The two cycle edges incident to `v`: `(v_{v-1} v, v v_{v+1})`.
    pub fn c0_edges_at(&self, v: Vertex) -> (EdgeId, EdgeId) {
        (self.c0_edge(self.prev(v)), self.c0_edge(v))
    }

    /// The designated cycle as a [`CyclePerm`].
    pub fn c0(&self) -> CyclePerm {
        CyclePerm::from_identity(self.n)
    }

    /// Relaxed view for algorithms that do not use cubic structure.
    pub fn to_general(&self) -> GeneralInstance {
        GeneralInstance::new(self.n, &self.chords).expect("valid cubic instance is a valid general instance")
    }
}

impl Adjacency for SmithInstance {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for v in 1..=self.n {
            let mut nb = self.neighbors3(v).to_vec();
            nb.sort_unstable();
            adj[v] = nb;
        }
        adj
    }
}

/// A Hamiltonian graph of minimum degree ≥ 3: the cycle `(1, …, n)` plus an
/// arbitrary simple set of chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralInstance {
    n: usize,
    chords: Vec<(Vertex, Vertex)>,
    /// Chord-only adjacency; cycle neighbors are implicit. Entry 0 unused.
    chord_adj: Vec<Vec<Vertex>>,
    min_degree: usize,
    max_degree: usize,
}

impl GeneralInstance {
    pub fn new(n: usize, chord_list: &[(Vertex, Vertex)]) -> Result<Self, InstanceError> {
        if n < 4 {
            return Err(InstanceError::OrderTooSmall(n));
        }
        let mut seen = BTreeSet::new();
        let mut chord_adj = vec![Vec::new(); n + 1];
        let mut chords = Vec::with_capacity(chord_list.len());
        for &(u, v) in chord_list {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(InstanceError::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            let (a, b) = norm_edge(u, v);
            if b - a == 1 || (a == 1 && b == n) {
                return Err(InstanceError::ChordOnCycle(a, b));
            }
            if !seen.insert((a, b)) {
                return Err(InstanceError::DuplicateEdge(a, b));
            }
            chord_adj[a].push(b);
            chord_adj[b].push(a);
            chords.push((a, b));
        }
        let mut min_degree = usize::MAX;
        let mut max_degree = 0;
        for v in 1..=n {
            let d = 2 + chord_adj[v].len();
            if d < 3 {
                return Err(InstanceError::MinDegree(v, d));
            }
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
        }
        chords.sort_unstable();
        for list in chord_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(GeneralInstance { n, chords, chord_adj, min_degree, max_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn next(&self, v: Vertex) -> Vertex {
        if v == self.n {
            1
        } else {
            v + 1
        }
    }

    pub fn prev(&self, v: Vertex) -> Vertex {
        if v == 1 {
            self.n
        } else {
            v - 1
        }
    }

    pub fn chords(&self) -> &[(Vertex, Vertex)] {
        &self.chords
    }

    pub fn chord_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.chord_adj[v]
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn c0(&self) -> CyclePerm {
        CyclePerm::from_identity(self.n)
    }
}

impl Adjacency for GeneralInstance {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == 0 || v == 0 || u > self.n || v > self.n || u == v {
            return false;
        }
        if self.next(u) == v || self.next(v) == u {
            return true;
        }
        self.chord_adj[u].binary_search(&v).is_ok()
    }

    fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for v in 1..=self.n {
            let mut nb = vec![self.prev(v), self.next(v)];
            nb.extend_from_slice(&self.chord_adj[v]);
            nb.sort_unstable();
            nb.dedup();
            adj[v] = nb;
        }
        adj
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    Empty,
    NotAPermutation,
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::Empty => f.write_str("empty vertex sequence"),
            CycleError::NotAPermutation => f.write_str("sequence is not a permutation of 1..=n"),
        }
    }
}

/// A cyclic vertex sequence in canonical form: starts at vertex 1, second
/// element is the smaller of 1's two cycle neighbors. Canonicalization makes
/// cycle equality plain sequence equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclePerm {
    seq: Vec<Vertex>,
}

impl CyclePerm {
    /// Canonicalize `seq`, which must be a permutation of `1..=len`.
    pub fn new(seq: Vec<Vertex>) -> Result<Self, CycleError> {
        if seq.is_empty() {
            return Err(CycleError::Empty);
        }
        let n = seq.len();
        let mut seen = vec![false; n + 1];
        for &v in &seq {
            if v == 0 || v > n || seen[v] {
                return Err(CycleError::NotAPermutation);
            }
            seen[v] = true;
        }
        let mut seq = seq;
        let start = seq.iter().position(|&v| v == 1).expect("1 is present");
        seq.rotate_left(start);
        if n > 2 && seq[1] > seq[n - 1] {
            seq[1..].reverse();
        }
        Ok(CyclePerm { seq })
    }

    pub fn from_identity(n: usize) -> Self {
        CyclePerm { seq: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    /// Successive edges including the closing one, normalized.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.seq.len();
        (0..n).map(move |i| norm_edge(self.seq[i], self.seq[(i + 1) % n]))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        let e = norm_edge(u, v);
        self.edges().any(|f| f == e)
    }
}

/// True iff `cand` visits every vertex exactly once using only edges of `g`.
pub fn is_hamiltonian_cycle(g: &impl Adjacency, cand: &CyclePerm) -> bool {
    let n = g.vertex_count();
    if cand.len() != n {
        return false;
    }
    // CyclePerm construction already guarantees a permutation.
    let seq = cand.as_slice();
    (0..n).all(|i| g.has_edge(seq[i], seq[(i + 1) % n]))
}

/// Connected components of the symmetric difference of two cycles' edge
/// sets, each returned as its edge list in traversal order.
///
/// For two Hamiltonian cycles of a cubic graph every component is a single
/// cycle alternating between edges of `c0` and edges of `c1`; the result is
/// empty iff the cycles are equal.
pub fn symmetric_difference_components(c0: &CyclePerm, c1: &CyclePerm) -> Vec<Vec<(Vertex, Vertex)>> {
    let e0 = c0.edge_set();
    let e1 = c1.edge_set();
    let xor: BTreeSet<(Vertex, Vertex)> = e0.symmetric_difference(&e1).copied().collect();

    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in &xor {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }

    let mut remaining = xor;
    let mut comps = Vec::new();
    while let Some(&start_edge) = remaining.iter().next() {
        // Walk the component edge by edge; degrees are 2 in the cubic case,
        // so this traces the component as one closed cycle.
        let mut comp = Vec::new();
        let mut stack = vec![start_edge.0];
        let mut in_stack = BTreeSet::new();
        in_stack.insert(start_edge.0);
        while let Some(u) = stack.pop() {
            for &v in adj.get(&u).into_iter().flatten() {
                let e = norm_edge(u, v);
                if remaining.remove(&e) {
                    comp.push(e);
                }
                if in_stack.insert(v) {
                    stack.push(v);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

/// Convenience check used by every solver verifier: the symmetric
/// difference is one single cycle.
pub fn difference_is_connected(c0: &CyclePerm, c1: &CyclePerm) -> bool {
    c0 != c1 && symmetric_difference_components(c0, c1).len() == 1
}
