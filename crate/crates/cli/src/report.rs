//! Machine-readable output structures and the instance digest.

use serde::Serialize;
use sha2::{Digest, Sha256};
use smith_core::solver::SolverMetrics;

/// Hex prefix of the canonical serialization; identifies an instance in
/// reports without embedding the whole file.
pub fn digest(canonical: &str) -> String {
    let hash = Sha256::digest(canonical.as_bytes());
    hash.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct MetricsReport {
    pub n: usize,
    pub leaves: u64,
    pub max_depth: usize,
    pub quads_created: u64,
    pub contradictions: u64,
    pub forced_edges_total: u64,
    pub peak_mem_bytes: usize,
    pub time_ms: f64,
    /// log2(leaves) / n for this run.
    pub exponent_estimate: f64,
}

impl MetricsReport {
    pub fn new(n: usize, m: &SolverMetrics, time_ms: f64) -> Self {
        MetricsReport {
            n,
            leaves: m.leaves,
            max_depth: m.max_depth,
            quads_created: m.quads_created,
            contradictions: m.contradictions,
            forced_edges_total: m.forced_edges_total,
            peak_mem_bytes: m.peak_mem_bytes,
            time_ms,
            exponent_estimate: (m.leaves.max(1) as f64).log2() / n as f64,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SolveReport {
    pub algorithm: &'static str,
    pub instance_digest: String,
    pub n: usize,
    pub cycle: Vec<usize>,
    pub length: usize,
    pub verified: bool,
    pub route: String,
    pub metrics: MetricsReport,
}

#[derive(Serialize, Clone, Debug)]
pub struct ApproxReport {
    pub algorithm: &'static str,
    pub instance_digest: String,
    pub n: usize,
    pub length: usize,
    /// The theorem guarantee for this instance.
    pub bound: i64,
    pub certificate: &'static str,
    pub verified: bool,
    pub time_ms: f64,
    pub cycle: Vec<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct LollipopReport {
    pub algorithm: &'static str,
    pub instance_digest: String,
    pub n: usize,
    pub status: &'static str,
    pub steps: u64,
    pub cycle: Option<Vec<usize>>,
    pub verified: bool,
    pub time_ms: f64,
}

#[derive(Serialize, Clone, Debug)]
pub struct VerifyReport {
    pub hamiltonian: bool,
    pub differs_from_c0: bool,
    pub single_component_difference: bool,
    pub valid: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct OracleReport {
    pub n: usize,
    pub cycles: usize,
    pub parity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_edge: Option<Vec<EdgeCount>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct EdgeCount {
    pub edge: [usize; 2],
    pub count: usize,
}
