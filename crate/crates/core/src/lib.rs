//! Algorithms around second Hamiltonian cycles.
//!
//! Given a cubic Hamiltonian graph (a *Smith graph*) together with one
//! Hamiltonian cycle, a second Hamiltonian cycle always exists. This crate
//! computes one, three different ways:
//!
//! * [`lollipop`] — Thomason's exchange walk, instrumented with the
//!   red/black/blue/yellow edge coloring and its runtime invariants;
//! * [`solver`] — an exact branch-and-force search over alternating
//!   red-blue cycles, with constraint propagation, deferred ambivalent
//!   quadruples and spanning-tree finalization;
//! * [`approx`] — for general Hamiltonian graphs of minimum degree ≥ 3, a
//!   linear-time construction of a long second cycle from chord geometry.
//!
//! [`oracle`] provides brute-force ground truth for small instances and
//! [`gen`] reproducible random instances. The crate is `no_std` (with
//! `alloc`); parsing, file formats and the command-line front end live in
//! the companion `smith-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod approx;
pub mod gen;
pub mod graph;
pub mod lollipop;
pub mod oracle;
pub mod reduce;
pub mod solver;

pub use graph::{CyclePerm, EdgeColor, EdgeRef, GeneralInstance, SmithInstance, Vertex};
