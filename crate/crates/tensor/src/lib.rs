//! Exact multilinear algebra on the tangent space m of a coset G/K.

mod checks;
mod endo;
mod form;
mod frame;

pub use checks::*;
pub use endo::Endomorphism;
pub use form::*;
pub use frame::{CosetSpace, Frame};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("endomorphism does not square to -1 (column {0})")]
    NotAlmostComplex(usize),
    #[error("lowered structure constants are not totally antisymmetric at {0:?}")]
    NotAntisymmetric(Vec<usize>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
