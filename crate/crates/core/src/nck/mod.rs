//! The noncommutative Connes-Kreimer Hopf algebra on decorated planar rooted
//! trees.
//!
//! Basis elements of degree `n` are forests whose vertex degrees sum to `n`,
//! ordered by their text form (`a[b c] d`, with `1` for the empty forest).
//! The product concatenates forests and the coproduct sums over admissible
//! cuts, see [`coproduct`].

mod algebra;
pub mod coproduct;
mod decoration;
mod forest;
mod vector;

pub use algebra::{Basis, NckAlgebra};
pub use coproduct::{coproduct, reduced_coproduct, Coproduct};
pub use decoration::{Decoration, DecorationSet};
pub use forest::{Forest, Tree};
pub use vector::{GradedVector, MultiTensor, TensorVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NckError {
    #[error("reduced coproducts are only defined in positive degree")]
    DegreeZeroInput,
    #[error("cannot parse forest: {0}")]
    Parse(String),
    #[error("invalid decoration set: {0}")]
    InvalidDecorations(String),
    #[error("label `{0}` is not in the decoration set")]
    UnknownLabel(String),
}
