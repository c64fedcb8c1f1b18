//! Realizability gates on dimension sequences.

use num::Signed;
use serde::{Deserialize, Serialize};

use super::{d_from_r, s_from_r, Rational, SeriesError, SeriesKind, SeriesProfile};

/// Outcome of a gate: `pass` iff `first_failure` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateVerdict {
    pub pass: bool,
    pub first_failure: Option<usize>,
    #[serde(with = "super::exchange::opt_rational")]
    pub witness: Option<Rational>,
}

impl GateVerdict {
    /// Scans `values` for the first coefficient that is not a nonnegative
    /// integer.
    fn scan(values: &SeriesProfile) -> Self {
        let bad = values
            .coeffs()
            .iter()
            .position(|c| !c.is_integer() || c.is_negative());
        match bad {
            Some(i) => GateVerdict {
                pass: false,
                first_failure: Some(i + 1),
                witness: Some(values.coeffs()[i].clone()),
            },
            None => GateVerdict {
                pass: true,
                first_failure: None,
                witness: None,
            },
        }
    }
}

fn gate_input(r: &SeriesProfile) -> Result<(), SeriesError> {
    r.expect_kind(SeriesKind::R)?;
    r.require_integral()
}

/// A free and cofree Hopf algebra with `dim H_n = r_n` exists iff every
/// `s_n = S_n(r_1, …, r_n)` is nonnegative.
pub fn gate_free_cofree(r: &SeriesProfile) -> Result<(GateVerdict, SeriesProfile), SeriesError> {
    gate_input(r)?;
    let s = s_from_r(r)?;
    Ok((GateVerdict::scan(&s), s))
}

/// Such an algebra is a (decorated) noncommutative Connes-Kreimer algebra iff
/// every `d_n = D_n(r_1, …, r_n)` is nonnegative.
pub fn gate_nck(r: &SeriesProfile) -> Result<(GateVerdict, SeriesProfile), SeriesError> {
    gate_input(r)?;
    let d = d_from_r(r)?;
    Ok((GateVerdict::scan(&d), d))
}
