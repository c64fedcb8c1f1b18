//! Exact dense linear algebra over the rationals: echelon forms, kernels,
//! canonical subspaces and Gram-matrix checks.

mod matrix;
mod subspace;

pub use matrix::{dot, RationalMatrix};
pub use subspace::{kernel_basis, span_ops, unit_vector, SpanOps, Subspace};

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GramDiagnosis {
    pub symmetric: bool,
    pub nondegenerate: bool,
}

/// Symmetry and nondegeneracy (`det ≠ 0`) of a Gram matrix.
pub fn gram_diagnose(g: &RationalMatrix) -> Result<GramDiagnosis, LinalgError> {
    let det = g.determinant()?;
    Ok(GramDiagnosis {
        symmetric: g.is_symmetric(),
        nondegenerate: !num::Zero::is_zero(&det),
    })
}
