//! JSON exchange format for series profiles.
//!
//! ```json
//! { "kind": "R", "order": 3, "coeffs": ["1", "2", "5/1"] }
//! ```
//!
//! Rationals are written as integer strings or `num/den`.

use std::str::FromStr;

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use super::{Rational, SeriesError, SeriesKind, SeriesProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub kind: SeriesKind,
    pub order: usize,
    pub coeffs: Vec<String>,
}

/// Parses `"n"`, `"-n"` or `"n/d"` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational, SeriesError> {
    let text = text.trim();
    let bad = || SeriesError::Parse(format!("`{text}` is not a rational number"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(SeriesError::Parse(format!(
                    "`{text}` has a zero denominator"
                )));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(text).map_err(|_| bad())?,
        )),
    }
}

/// Integer form when the denominator is 1, `num/den` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

impl From<&SeriesProfile> for SeriesJson {
    fn from(p: &SeriesProfile) -> Self {
        SeriesJson {
            kind: p.kind(),
            order: p.order(),
            coeffs: p.coeffs().iter().map(format_rational).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for SeriesProfile {
    type Error = SeriesError;

    fn try_from(j: SeriesJson) -> Result<Self, Self::Error> {
        if j.coeffs.len() != j.order {
            return Err(SeriesError::Parse(format!(
                "order is {} but {} coefficients were given",
                j.order,
                j.coeffs.len()
            )));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        SeriesProfile::new(j.kind, coeffs)
    }
}

impl SeriesProfile {
    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let j: SeriesJson =
            serde_json::from_str(text).map_err(|e| SeriesError::Parse(e.to_string()))?;
        j.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson::from(self)).expect("series JSON is always serializable")
    }
}

/// Serde adapter for `Option<Rational>` as an optional rational string.
pub(crate) mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(q) => s.serialize_some(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
