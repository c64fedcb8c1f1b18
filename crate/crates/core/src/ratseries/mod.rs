//! Poincaré-Hilbert series calculus for graded connected free and cofree Hopf
//! algebras.
//!
//! Four series describe such an algebra `H`:
//!
//! * `R(h) = Σ dim(H_n) hⁿ` (constant term 1),
//! * `P(h)`, the series of the primitive Lie algebra `g`,
//! * `S(h)`, the series of the indecomposable primitives `g / (g ∩ H⁺²)`,
//! * `D(h)`, the decoration series of a noncommutative Connes-Kreimer algebra
//!   with the same `R`.
//!
//! They are related by `R = 1/(1−P)`, `1 − S = ∏ (1 − hⁿ)^{p_n}` and
//! `D = (R − 1)/R²`. This module converts between them exactly and evaluates
//! the two realizability gates (`s_n ≥ 0` and `d_n ≥ 0`).

mod conversions;
mod exchange;
mod gates;
mod profile;
mod series;

pub use conversions::{
    convert, d_from_r, mobius, p_from_r, p_from_s, r_from_d, r_from_p, r_from_s, s_from_p,
    s_from_r, series_invert, Conversion,
};
pub use exchange::{format_rational, parse_rational, SeriesJson};
pub use gates::{gate_free_cofree, gate_nck, GateVerdict};
pub use profile::{SeriesKind, SeriesProfile};
pub use series::PowerSeries;

/// Exact rational scalar used throughout the crate.
pub type Rational = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("expected a {expected:?}-kind series, got {found:?}")]
    KindMismatch {
        expected: SeriesKind,
        found: SeriesKind,
    },
    #[error("exponent p_{index} = {value} is not an integer")]
    NonIntegerExponent { index: usize, value: Rational },
    #[error("coefficient {index} = {value} is not an integer")]
    NonIntegerInput { index: usize, value: Rational },
    #[error("series profiles need truncation order at least 1")]
    EmptyProfile,
    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1, got {0}")]
    SqrtConstantTerm(Rational),
    #[error("requested order {requested} exceeds the available order {available}")]
    OrderTooLarge { requested: usize, available: usize },
    #[error("malformed series: {0}")]
    Parse(String),
}
