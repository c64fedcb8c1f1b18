use num::Zero;

use super::matrix::rref_rows;
use super::{LinalgError, RationalMatrix};
use crate::ratseries::Rational;

/// A linear subspace of `Q^ambient_dim`, stored by its canonical basis: the
/// nonzero rows of the reduced row-echelon form of any spanning set.
///
/// Equal subspaces therefore have identical `basis` matrices, and `==`
/// compares subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of `rows` (which need not be independent).
    pub fn span(ambient_dim: usize, rows: Vec<Vec<Rational>>) -> Self {
        let (rows, pivots) = rref_rows(rows, ambient_dim);
        Subspace {
            ambient_dim,
            basis: RationalMatrix::from_rows(ambient_dim, rows),
            pivots,
        }
    }

    /// Span of the coordinate vectors `e_i` for `i` in `indices`.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let rows = indices
            .into_iter()
            .map(|i| unit_vector(ambient_dim, i))
            .collect();
        Self::span(ambient_dim, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing every pivot column; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (j, b) in self.basis.row(k).iter().enumerate() {
                if !b.is_zero() {
                    out[j] -= &factor * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = big.clone();
        for i in 0..small.dim() {
            acc.insert(small.basis.row(i));
        }
        Ok(acc)
    }

    /// `A ∩ B`: a combination `Σ cᵢ aᵢ` of the basis of `A` lies in `B`
    /// exactly when the same combination of the remainders of the `aᵢ`
    /// modulo `B` vanishes.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(n));
        }
        let remainders: Vec<Vec<Rational>> = (0..self.dim())
            .map(|i| other.reduce(self.basis.row(i)))
            .collect();
        let relations = kernel_basis(&RationalMatrix::from_rows(n, remainders).transpose());
        let inter = relations
            .basis_vectors()
            .iter()
            .map(|c| self.basis.apply_left(c))
            .collect();
        Ok(Subspace::span(n, inter))
    }

    /// Complement of `self` inside `within`, chosen greedily from
    /// `within`'s canonical basis rows in order: a row is taken when it
    /// enlarges the span of `self` plus the rows already taken.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(within)?;
        let chosen = self.extend_greedily(&within.basis_vectors());
        Ok(Subspace::span(self.ambient_dim, chosen))
    }

    /// Greedy extension used by the complement rules: returns, in order, the
    /// candidates that are independent of `self` and of the earlier picks.
    pub fn extend_greedily(&self, candidates: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut acc = self.clone();
        candidates
            .iter()
            .filter(|c| acc.insert(c))
            .cloned()
            .collect()
    }

    /// Adds `v` to the span, keeping the basis in reduced echelon form.
    /// Returns `false` when `v` already lies in the subspace.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for k in 0..self.basis.rows() {
            let row = self.basis.row_mut(k);
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.basis.insert_row(at, r);
        self.pivots.insert(at, p);
        true
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num::One::one();
    v
}

/// `{ x : m · xᵀ = 0 }`.
pub fn kernel_basis(m: &RationalMatrix) -> Subspace {
    let n = m.cols();
    let (rref, pivots) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut rows = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); n];
        v[free] = num::One::one();
        for (k, &p) in pivots.iter().enumerate() {
            let c = rref.get(k, free);
            if !c.is_zero() {
                v[p] = -c.clone();
            }
        }
        rows.push(v);
    }
    Subspace::span(n, rows)
}

/// Result of [`span_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub complement_of_a_in_sum: Subspace,
}

pub fn span_ops(a: &Subspace, b: &Subspace) -> Result<SpanOps, LinalgError> {
    let sum = a.sum(b)?;
    let intersection = a.intersection(b)?;
    let complement_of_a_in_sum = a.complement_in(&sum)?;
    Ok(SpanOps {
        sum,
        intersection,
        complement_of_a_in_sum,
    })
}
