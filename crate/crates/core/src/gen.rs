//! Reproducible instance generation.
//!
//! Random cubic instances are the cycle `(1, …, n)` plus a random perfect
//! matching avoiding cycle edges, sampled by shuffling and pairing with
//! rejection on conflicts. δ-regular instances stack δ−2 such matchings
//! edge-disjointly. Same spec and seed, same instance.

use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{norm_edge, GeneralInstance, InstanceError, SmithInstance, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedInstance {
    K4,
    K33,
    Prism,
    Cube,
}

impl NamedInstance {
    pub fn id(self) -> &'static str {
        match self {
            NamedInstance::K4 => "k4",
            NamedInstance::K33 => "k33",
            NamedInstance::Prism => "prism",
            NamedInstance::Cube => "cube",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        match id {
            "k4" => Some(NamedInstance::K4),
            "k33" => Some(NamedInstance::K33),
            "prism" => Some(NamedInstance::Prism),
            "cube" => Some(NamedInstance::Cube),
            _ => None,
        }
    }

    pub fn build(self) -> SmithInstance {
        let (n, chords): (usize, &[(Vertex, Vertex)]) = match self {
            NamedInstance::K4 => (4, &[(1, 3), (2, 4)]),
            NamedInstance::K33 => (6, &[(1, 4), (2, 5), (3, 6)]),
            NamedInstance::Prism => (6, &[(1, 4), (2, 6), (3, 5)]),
            NamedInstance::Cube => (8, &[(1, 4), (2, 7), (3, 6), (5, 8)]),
        };
        SmithInstance::new(n, chords).expect("named fixtures are valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Cubic,
    Regular(usize),
    /// Minimum degree `delta` with extra chords up to max degree `max`.
    MinDegree { delta: usize, max: usize },
    Named(NamedInstance),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum Generated {
    Smith(SmithInstance),
    General(GeneralInstance),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    BadSpec(&'static str),
    /// Rejection sampling ran out of retries (tiny n mostly).
    RetryBudget,
    Invalid(InstanceError),
}

impl core::fmt::Display for GenError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GenError::BadSpec(s) => write!(f, "bad generator spec: {s}"),
            GenError::RetryBudget => f.write_str("matching sampler ran out of retries"),
            GenError::Invalid(e) => write!(f, "generated instance invalid: {e}"),
        }
    }
}

const RETRY_BUDGET: usize = 10_000;

/// One random perfect matching on `1..=n` avoiding cycle edges and every
/// edge in `taken`.
fn sample_matching(
    n: usize,
    rng: &mut ChaCha8Rng,
    taken: &dyn Fn(Vertex, Vertex) -> bool,
) -> Result<Vec<(Vertex, Vertex)>, GenError> {
    let mut verts: Vec<Vertex> = (1..=n).collect();
    'attempt: for _ in 0..RETRY_BUDGET {
        verts.shuffle(rng);
        let mut matching = Vec::with_capacity(n / 2);
        for pair in verts.chunks_exact(2) {
            let (a, b) = norm_edge(pair[0], pair[1]);
            let cyclic_adjacent = b - a == 1 || (a == 1 && b == n);
            if cyclic_adjacent || taken(a, b) {
                continue 'attempt;
            }
            matching.push((a, b));
        }
        return Ok(matching);
    }
    Err(GenError::RetryBudget)
}

/// Deterministic generation from a spec. Cubic and 3-regular specs yield
/// `Smith` instances; anything of higher degree is `General`.
pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    match spec.kind {
        GenKind::Named(name) => Ok(Generated::Smith(name.build())),
        GenKind::Cubic => Ok(Generated::Smith(random_cubic(spec.n, spec.seed)?)),
        GenKind::Regular(3) => Ok(Generated::Smith(random_cubic(spec.n, spec.seed)?)),
        GenKind::Regular(delta) => {
            if delta < 3 {
                return Err(GenError::BadSpec("regular degree must be at least 3"));
            }
            if (delta * spec.n) % 2 != 0 {
                return Err(GenError::BadSpec("degree times order must be even"));
            }
            let chords = stacked_matchings(spec.n, delta - 2, spec.seed)?;
            GeneralInstance::new(spec.n, &chords).map(Generated::General).map_err(GenError::Invalid)
        }
        GenKind::MinDegree { delta, max } => {
            if delta < 3 || max < delta {
                return Err(GenError::BadSpec("need 3 <= delta <= max"));
            }
            if (delta * spec.n) % 2 != 0 {
                return Err(GenError::BadSpec("degree times order must be even"));
            }
            let mut chords = stacked_matchings(spec.n, delta - 2, spec.seed)?;
            sprinkle_extra_chords(spec.n, max, spec.seed, &mut chords);
            GeneralInstance::new(spec.n, &chords).map(Generated::General).map_err(GenError::Invalid)
        }
    }
}

pub fn random_cubic(n: usize, seed: u64) -> Result<SmithInstance, GenError> {
    if n < 4 || n % 2 != 0 {
        return Err(GenError::BadSpec("cubic instances need even n >= 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matching = sample_matching(n, &mut rng, &|_, _| false)?;
    SmithInstance::new(n, &matching).map_err(GenError::Invalid)
}

fn stacked_matchings(n: usize, layers: usize, seed: u64) -> Result<Vec<(Vertex, Vertex)>, GenError> {
    if n < 5 && layers > 1 {
        return Err(GenError::BadSpec("order too small for the requested degree"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords: Vec<(Vertex, Vertex)> = Vec::with_capacity(layers * (n / 2));
    for _ in 0..layers {
        let existing = chords.clone();
        let matching = sample_matching(n, &mut rng, &move |a, b| existing.contains(&(a, b)))?;
        chords.extend(matching);
    }
    Ok(chords)
}

/// Add random chords until some vertex reaches degree `max` or the attempt
/// budget runs out; keeps the graph simple.
fn sprinkle_extra_chords(n: usize, max: usize, seed: u64, chords: &mut Vec<(Vertex, Vertex)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut degree = alloc::vec![2usize; n + 1];
    for &(a, b) in chords.iter() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let budget = n.max(16);
    for _ in 0..budget {
        if degree.iter().skip(1).any(|&d| d >= max) {
            break;
        }
        let a = rng.random_range(1..=n);
        let b = rng.random_range(1..=n);
        let (a, b) = norm_edge(a, b);
        let cyclic_adjacent = a == b || b - a == 1 || (a == 1 && b == n);
        if cyclic_adjacent || degree[a] >= max || degree[b] >= max || chords.contains(&(a, b)) {
            continue;
        }
        chords.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{edge_parity_check, ParityCheck};

    #[test]
    fn named_instances_build() {
        for name in [NamedInstance::K4, NamedInstance::K33, NamedInstance::Prism, NamedInstance::Cube] {
            let inst = name.build();
            assert_eq!(NamedInstance::from_id(name.id()), Some(name));
            assert!(inst.n() >= 4);
        }
    }

    #[test]
    fn cubic_generation_is_deterministic_and_valid() {
        let spec = GenSpec { kind: GenKind::Cubic, n: 8, seed: 1 };
        let a = match generate(&spec).unwrap() {
            Generated::Smith(g) => g,
            _ => unreachable!(),
        };
        let b = match generate(&spec).unwrap() {
            Generated::Smith(g) => g,
            _ => unreachable!(),
        };
        assert_eq!(a, b);
        assert_eq!(edge_parity_check(&a), ParityCheck::Pass);
    }

    #[test]
    fn regular_four_has_uniform_degree() {
        let spec = GenSpec { kind: GenKind::Regular(4), n: 10, seed: 7 };
        let g = match generate(&spec).unwrap() {
            Generated::General(g) => g,
            _ => unreachable!(),
        };
        assert_eq!(g.min_degree(), 4);
        assert_eq!(g.max_degree(), 4);
        for v in 1..=10 {
            assert_eq!(g.chord_neighbors(v).len(), 2);
        }
    }

    #[test]
    fn min_degree_respects_cap() {
        let spec = GenSpec { kind: GenKind::MinDegree { delta: 3, max: 5 }, n: 20, seed: 3 };
        let g = match generate(&spec).unwrap() {
            Generated::General(g) => g,
            _ => unreachable!(),
        };
        assert!(g.min_degree() >= 3);
        assert!(g.max_degree() <= 5);
    }

    #[test]
    fn odd_cubic_order_rejected() {
        let spec = GenSpec { kind: GenKind::Cubic, n: 7, seed: 0 };
        assert!(matches!(generate(&spec), Err(GenError::BadSpec(_))));
    }
}
