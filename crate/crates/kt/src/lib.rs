//! Homogeneous complex cosets G/K built from coloured Dynkin diagrams,
//! with their invariant complex structures and KT verification.

mod complex;
mod decompose;
mod linalg;

pub use complex::*;
pub use decompose::*;
pub use linalg::solve;

use rootsys::RootError;
use tensor::TensorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KtError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("expected {expected} colourings, one per simple ideal, got {found}")]
    ColouringCount { expected: usize, found: usize },
    #[error("isotropy u(1) vector {0} is not a Cartan element commuting with the coloured roots")]
    InvalidIsotropyVector(usize),
    #[error("dimension of m is odd ({0})")]
    OddDimension(usize),
    #[error("element is singular: root {root} of ideal {ideal} vanishes on it")]
    NotRegular { ideal: usize, root: String },
    #[error("cartan pairing does not cover the Cartan part of m")]
    PairingIncomplete,
    #[error("metric is degenerate on the Cartan part of m")]
    DegenerateMetric,
    #[error("seed has {found} entries, expected {expected}")]
    SeedShape { expected: usize, found: usize },
}
