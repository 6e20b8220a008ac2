//! Distance Laplacian spectra and spread of connected graphs.
//!
//! The crate computes the distance Laplacian matrix `D^L(G) = Diag(Tr) - D(G)`
//! of a connected graph, its spectrum, and the distance Laplacian spread
//! `DLS(G)` (largest minus second-smallest eigenvalue). On top of that it
//! provides an executable registry of eigenvalue bounds and equality
//! characterizations, generators for the graph families that attain them,
//! and graph6 I/O plus exhaustive labeled-connected-graph enumeration so the
//! whole registry can be audited over small-graph corpora.

pub mod bounds;
pub mod dlap;
pub mod eigen;
pub mod families;
pub mod g6;
pub mod graph;

pub use dlap::{analyze, DlapAnalysis, Tolerances};
pub use eigen::{Spectrum, SymmetricMatrix};
pub use graph::{DistanceSummary, Graph};
