//! Structure constants, compact real forms and invariant metrics.
//!
//! The complex algebra is handled in a Chevalley basis with integer
//! structure constants; the compact real form has a rational basis, so all
//! brackets and metrics here are exact rationals. Surds appear only when a
//! later stage normalizes vectors of irrational length.

mod algebra;
mod sparse;
mod structure;
mod surd;

pub use algebra::{
    verify_invariance, CompactBasisElement, InvarianceReport, InvariantMetric, ReductiveAlgebra, SimpleIdeal,
};
pub use sparse::{SVec, Scalar};
pub use structure::{
    chevalley_bracket, flipped, structure_constants, verify_identities, verify_jacobi, ChevalleyVec,
    IdentityReport, JacobiReport, NEntry, StructureConstantTable, StructureConstantsJson,
};
pub use surd::{ComplexSurd, Surd, SurdParseError};

pub use rootsys::Q;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChevalleyError {
    #[error("metric scale must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("metric needs one scale per simple ideal and one constant per u(1)")]
    MetricShape,
    #[error("no such basis element: {0}")]
    UnknownBasisElement(String),
}
