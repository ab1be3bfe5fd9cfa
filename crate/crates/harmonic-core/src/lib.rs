//! Exact harmonic centrality and centralization of finite simple graphs.
//!
//! The crate computes everything in arbitrary-precision rational
//! arithmetic: per-vertex reciprocal distance sums and harmonic
//! centralities, graph-level harmonic centralization, generators for
//! path/cycle/fan/star families, Cartesian and direct products, a catalog
//! of closed forms for `P_2` products, and a harness that verifies each
//! closed form against the brute-force BFS oracle.
//!
//! The per-source BFS work and the verification sweeps are data-parallel;
//! the default `parallel` feature runs them on rayon, and disabling it
//! falls back to equivalent sequential loops with identical output.

pub mod centrality;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod numeric;
pub mod products;
pub mod verify;

pub use centrality::{centrality_profile, CentralityReport};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use formulas::{TheoremId, TheoremKind, VertexClass};
pub use graph::{DistanceRow, Graph};
pub use numeric::{harmonic_number, Rational};
pub use products::{cartesian_product, direct_product, ProductGraph, ProductKind};
pub use verify::{verify_all, verify_theorem, VerificationRecord, VerificationSummary};
