use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{PowerSeries, Rational, SeriesError};

/// Which of the four characteristic series a profile carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeriesKind {
    R,
    P,
    S,
    D,
}

impl SeriesKind {
    /// Constant term implied by the kind: 1 for `R`, 0 otherwise.
    pub fn constant_term(self) -> Rational {
        match self {
            SeriesKind::R => Rational::one(),
            _ => Rational::zero(),
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            SeriesKind::R => "R",
            SeriesKind::P => "P",
            SeriesKind::S => "S",
            SeriesKind::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for SeriesKind {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(SeriesKind::R),
            "P" | "p" => Ok(SeriesKind::P),
            "S" | "s" => Ok(SeriesKind::S),
            "D" | "d" => Ok(SeriesKind::D),
            other => Err(SeriesError::Parse(format!("unknown series kind `{other}`"))),
        }
    }
}

/// A truncated coefficient sequence `c_1 .. c_N` tagged with its kind.
///
/// The constant term is implicit (see [`SeriesKind::constant_term`]), so the
/// stored vector always has exactly `N` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProfile {
    kind: SeriesKind,
    coeffs: Vec<Rational>,
}

impl SeriesProfile {
    pub fn new(kind: SeriesKind, coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyProfile);
        }
        Ok(SeriesProfile { kind, coeffs })
    }

    pub fn from_integers(kind: SeriesKind, coeffs: &[i64]) -> Result<Self, SeriesError> {
        Self::new(
            kind,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Drops the constant term of `series`; the order is kept.
    pub fn from_power_series(kind: SeriesKind, series: &PowerSeries) -> Result<Self, SeriesError> {
        Self::new(kind, series.coeffs()[1..].to_vec())
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients `c_1 .. c_N`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `hⁿ` for `1 ≤ n ≤ N`.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n - 1]
    }

    pub fn to_power_series(&self) -> PowerSeries {
        let mut all = Vec::with_capacity(self.coeffs.len() + 1);
        all.push(self.kind.constant_term());
        all.extend(self.coeffs.iter().cloned());
        PowerSeries::from_coeffs(all)
    }

    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderTooLarge {
                requested: order,
                available: self.order(),
            });
        }
        Self::new(self.kind, self.coeffs[..order].to_vec())
    }

    pub fn with_kind(&self, kind: SeriesKind) -> Self {
        SeriesProfile {
            kind,
            coeffs: self.coeffs.clone(),
        }
    }

    /// First index (1-based) whose coefficient is not an integer.
    pub fn first_non_integer(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_integer())
            .map(|i| i + 1)
    }

    pub fn is_integral(&self) -> bool {
        self.first_non_integer().is_none()
    }

    /// Integer coefficients as `i128`, if every coefficient is an integer
    /// that fits.
    pub fn to_i128(&self) -> Option<Vec<i128>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i128::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub(crate) fn expect_kind(&self, expected: SeriesKind) -> Result<(), SeriesError> {
        if self.kind != expected {
            return Err(SeriesError::KindMismatch {
                expected,
                found: self.kind,
            });
        }
        Ok(())
    }

    pub(crate) fn require_integral(&self) -> Result<(), SeriesError> {
        match self.first_non_integer() {
            Some(index) => Err(SeriesError::NonIntegerInput {
                index,
                value: self.coeff(index).clone(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SeriesProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
