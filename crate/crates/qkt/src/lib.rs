//! Quotients G/(K × Φ(U(2))) of homogeneous hyper-complex cosets, the
//! induced quaternionic structure and its torsion.

mod embed;
mod quotient;
mod table3;

pub use embed::*;
pub use quotient::*;
pub use table3::*;

use hkt::HktError;
use tensor::TensorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QktError {
    #[error("no rational orthogonal change of the U basis found for {levels} levels ({reason})")]
    RationalizationFailed { levels: usize, reason: String },
    #[error("the centre generator is not proportional to a rational vector")]
    Irrational,
    #[error("span of the u(2) generators is not a subalgebra centralizing k: {0}")]
    NotClosed(String),
    #[error("I{r} maps the complement vector {index} out of the complement")]
    NotInvariant { r: usize, index: usize },
    #[error(transparent)]
    Hkt(#[from] HktError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}
