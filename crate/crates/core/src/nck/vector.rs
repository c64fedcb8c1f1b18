use std::collections::BTreeMap;

use num::Zero;

use super::Forest;
use crate::ratseries::Rational;

/// An element of `H_degree` in coordinates over the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVector {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl GradedVector {
    pub fn zero(degree: usize, dim: usize) -> Self {
        GradedVector {
            degree,
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates as `(index, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// An element of `H_i ⊗ H_j`; coordinate `a·dim H_j + b` belongs to the
/// pair of basis forests `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    pub bidegree: (usize, usize),
    pub dims: (usize, usize),
    pub coords: Vec<Rational>,
}

impl TensorVector {
    pub fn zero(bidegree: (usize, usize), dims: (usize, usize)) -> Self {
        TensorVector {
            bidegree,
            dims,
            coords: vec![Rational::zero(); dims.0 * dims.1],
        }
    }

    pub fn get(&self, a: usize, b: usize) -> &Rational {
        &self.coords[a * self.dims.1 + b]
    }

    pub fn add_to(&mut self, a: usize, b: usize, v: &Rational) {
        self.coords[a * self.dims.1 + b] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Sparse element of a tensor power `H^{⊗k}`, keyed by forest tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultiTensor {
    pub terms: BTreeMap<Vec<Forest>, Rational>,
}

impl MultiTensor {
    pub fn add_term(&mut self, key: Vec<Forest>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Tensor order, or `None` when empty.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().map(Vec::len)
    }
}
