//! Minimum strongly connected spanning subgraphs.
//!
//! - [`scss3`]: exact solver for digraphs with no cycle longer than three, by
//!   reduction to minimum bipartite edge cover ([`classify`], [`cover`]).
//! - [`approx`]: cycle-contraction approximation for general strongly
//!   connected digraphs, the minimum-equivalent-graph pipeline for arbitrary
//!   digraphs, and the associated bounds.
//! - [`oracle`]: brute-force ground truth and instance generators.
//! - [`io`]: the line-oriented text formats used by the command-line tool.

pub mod approx;
pub mod classify;
pub mod cover;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod scalar;
pub mod scss3;

pub use approx::{meg, scss_approx, ApproxOptions, ApproxSolution};
pub use graph::{DirectedGraph, EdgeId, GraphError, VertexId};
pub use scss3::scss3_minimum;

/// Exact rational scalar for the bound formulas.
pub type Rational = num_rational::BigRational;
/// Default floating-point scalar.
pub type Real = f64;
pub type GuaranteeReport = approx::GuaranteeReport<Real>;
