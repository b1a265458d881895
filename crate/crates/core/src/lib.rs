//! Spectra and connectivity of loopless multigraphs.
//!
//! The crate builds the extremal regular multigraph families whose second
//! eigenvalue pins down their vertex connectivity, computes adjacency and
//! Laplacian spectra with a Jacobi eigensolver, computes `κ` and `κ'` exactly,
//! and checks the known eigenvalue–connectivity bounds on constructed and
//! randomly sampled graphs.

#![allow(clippy::needless_range_loop)]

pub mod campaign;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod graph;
pub mod par;
pub mod quotient;
pub mod rng;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Multigraph};
pub use par::Execution;
pub use spectral::{Spectrum, SymmetricMatrix};
