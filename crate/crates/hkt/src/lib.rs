//! Level decompositions g = b ⊕_k d_k ⊕_k f_k from extended Dynkin
//! diagrams, the hyper-complex structures they carry and the resulting
//! hyper-complex cosets.

mod levels;
mod table2;
mod triple;

pub use levels::*;
pub use table2::*;
pub use triple::*;

use chevalley::ChevalleyError;
use tensor::TensorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HktError {
    #[error("{levels} levels need as many free u(1) directions plus a multiple of four, found {directions}")]
    LevelCountMismatch { levels: usize, directions: usize },
    #[error("{requested} u(1) directions requested for k, only {available} available")]
    IsotropyCount { requested: usize, available: usize },
    #[error("coset frame has {found} vectors, expected {expected}")]
    Partition { expected: usize, found: usize },
    #[error("rotation must be {0}x{0}")]
    RotationShape(usize),
    #[error(transparent)]
    Metric(#[from] ChevalleyError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}
