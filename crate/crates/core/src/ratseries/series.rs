//! Dense truncated power series over exact rationals.
//!
//! A `PowerSeries` of order `N` stores the coefficients of `h^0 .. h^N`; every
//! operation is exact modulo `h^(N+1)`. Binary operations truncate to the
//! smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{Rational, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// The zero series truncated at `h^order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `h` itself (or zero when `order == 0`).
    pub fn monomial(order: usize, degree: usize, coeff: Rational) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Builds a series from coefficients `c_0 .. c_N`. Panics on an empty slice.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least a constant term"
        );
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `h^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    ///
    /// Uses the recurrence `b_0 = 1/a_0`, `b_n = -(1/a_0) Σ_{k=1..n} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n_max = self.order();
        let inv_a0 = a0.recip();
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(inv_a0.clone());
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &inv_a0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Formal square root with constant term `+1`.
    ///
    /// Solved degree by degree from `(√A)² = A`: with `b_0 = 1`,
    /// `2 b_n = a_n − Σ_{k=1..n-1} b_k b_{n-k}`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.constant_term().clone()));
        }
        let n_max = self.order();
        let two = Rational::from_integer(2.into());
        let mut out: Vec<Rational> = Vec::with_capacity(n_max + 1);
        out.push(Rational::one());
        for n in 1..=n_max {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &out[k] * &out[n - k];
            }
            out.push(acc / &two);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Formal derivative, truncated one order lower (at least order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: (1..=self.order())
                .map(|n| &self.coeffs[n] * Rational::from_integer(n.into()))
                .collect(),
        }
    }

    /// Raises to a nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
