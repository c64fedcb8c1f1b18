#![allow(dead_code)]

pub mod checks;
pub mod oracles;

use freecofree::ratseries::{Rational, SeriesKind, SeriesProfile};

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn profile(kind: SeriesKind, coeffs: &[i64]) -> SeriesProfile {
    SeriesProfile::from_integers(kind, coeffs).expect("nonempty profile")
}

pub fn as_i128(p: &SeriesProfile) -> Vec<i128> {
    p.to_i128().expect("integral profile")
}
