//! Constructive machinery for nowhere-zero flows on bridgeless cubic graphs.
//!
//! The crate builds the canonical 4-coloring of a cubic graph with respect to
//! a 2-factor, the augmented multigraph obtained by doubling up the
//! color-2-deficient vertices, the explicit nowhere-zero 4-flow on it, the
//! induced flow partition and its ±5/3 valuation. Balanced ±5/3 valuations are
//! turned into verified nowhere-zero 5-flows; brute-force oracles (mod-k
//! circulation search, exhaustive balance checks, matching enumeration)
//! cross-check every step.
//!
//! Heavy enumerations accept an [`Exec`] mode. With the `parallel` feature
//! (on by default) [`Exec::Parallel`] fans work out over rayon; results are
//! identical to [`Exec::Sequential`] in every case.

pub mod canonical_coloring;
mod error;
mod exec;
pub mod factors;
pub mod flow_algebra;
pub mod generate;
pub mod graph_core;
pub mod proof_lab;
pub mod valuations;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph_core::{EdgeId, EdgeSet, ExtNat, Multigraph, VertexId, VertexSet};
