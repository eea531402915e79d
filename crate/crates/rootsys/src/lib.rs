//! Root systems of the simple Lie algebras in exact rational coordinates.
//!
//! Every type A_r through G_2 is realized in its standard epsilon basis, so
//! all inner products are rationals and no irrational coordinate appears.

mod algebra;
mod diagram;
mod subsystem;
mod system;

pub use algebra::{AlgebraType, Family};
pub use diagram::{
    coloured_roots, diagram_automorphisms, dynkin_diagram, extended_cartan, extended_diagram,
    highest_root_pairings, Colouring, DynkinDiagram, Edge,
};
pub use subsystem::{classify_cartan, components, Component};
pub use system::{standard_simple_roots, Root, RootSystem};

/// Exact rationals used throughout.
pub type Q = num_rational::Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse algebra or node list: {0}")]
    Parse(String),
    #[error("not a root of this system")]
    NotARoot,
    #[error("root string taken along the root itself or its negative")]
    DegenerateString,
    #[error("colouring names node {node}, but the rank is {rank}")]
    InvalidColouring { node: usize, rank: usize },
    #[error("cartan matrix of unknown type: {0}")]
    Unclassifiable(String),
}

/// Serializable view of a root system: algebra name and coefficient arrays.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RootSystemJson {
    pub algebra: AlgebraType,
    pub simple_roots: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
}

impl RootSystem {
    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            algebra: self.algebra,
            simple_roots: (0..self.rank())
                .map(|i| self.root(self.simple_root_index(i)).simple_coeffs.clone())
                .collect(),
            roots: self.all_roots().iter().map(|r| r.simple_coeffs.clone()).collect(),
            highest_root: self.root(self.highest_root()).simple_coeffs.clone(),
        }
    }
}
