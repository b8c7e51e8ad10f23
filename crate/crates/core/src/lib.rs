//! Exact detection and enumeration of (κ,τ)-regular vertex sets.
//!
//! A vertex subset `S` of a simple graph is (κ,τ)-regular when every vertex
//! of `S` has exactly κ neighbours in `S` and every vertex outside `S` has
//! exactly τ neighbours in `S`. Such sets are the 0–1 solutions of
//! `(A − (κ−τ)I) x = τ·e`, and this crate finds them exactly: rational
//! Gaussian elimination produces a particular solution and an eigenspace
//! basis in identity-submatrix form, and a pruned search over the 2^t
//! pivot assignments recovers every 0–1 solution.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the CLI and
//! threaded enumeration live in the `ktreg` companion crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod solver;
pub mod spectral;
pub mod structures;

pub use graph::{EdgeLabeling, Graph, GraphError, VertexMap, VertexSet};
pub use linalg::{KernelBasis, ParticularSolution, Rational, RationalMatrix};
pub use solver::{KtCertificate, Shortcut, SolveError, Solver, SolverConfig};
pub use spectral::SpectralReport;
