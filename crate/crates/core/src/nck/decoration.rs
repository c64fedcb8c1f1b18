use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::NckError;
use crate::ratseries::{SeriesKind, SeriesProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decoration {
    pub label: String,
    pub degree: usize,
}

/// The graded set of vertex decorations. Each decoration contributes its
/// degree to every vertex that carries it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Decoration>", into = "Vec<Decoration>")]
pub struct DecorationSet {
    entries: Vec<Decoration>,
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DecorationSet {
    pub fn new(entries: Vec<Decoration>) -> Result<Self, NckError> {
        let mut seen = BTreeSet::new();
        for e in &entries {
            if !is_valid_label(&e.label) {
                return Err(NckError::InvalidDecorations(format!(
                    "`{}` is not a valid label",
                    e.label
                )));
            }
            if e.degree == 0 {
                return Err(NckError::InvalidDecorations(format!(
                    "decoration `{}` has degree 0",
                    e.label
                )));
            }
            if !seen.insert(e.label.as_str()) {
                return Err(NckError::InvalidDecorations(format!(
                    "label `{}` appears twice",
                    e.label
                )));
            }
        }
        Ok(DecorationSet { entries })
    }

    /// One label `a` of degree 1: the Catalan case.
    pub fn single() -> Self {
        DecorationSet {
            entries: vec![Decoration {
                label: "a".into(),
                degree: 1,
            }],
        }
    }

    /// Labels `a`, `b`, ... all of degree 1.
    pub fn uniform(count: usize) -> Self {
        assert!(count <= 26, "at most 26 single-letter labels");
        let entries = (0..count)
            .map(|i| Decoration {
                label: char::from(b'a' + i as u8).to_string(),
                degree: 1,
            })
            .collect();
        DecorationSet { entries }
    }

    pub fn from_json(text: &str) -> Result<Self, NckError> {
        serde_json::from_str(text).map_err(|e| NckError::InvalidDecorations(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decorations are always serializable")
    }

    pub fn entries(&self) -> &[Decoration] {
        &self.entries
    }

    pub fn degree_of(&self, label: &str) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.degree)
    }

    /// `d_n`, the number of decorations of degree `n`, for `n = 1..=order`.
    pub fn d_profile(&self, order: usize) -> SeriesProfile {
        let mut counts = vec![0i64; order];
        for e in &self.entries {
            if e.degree <= order {
                counts[e.degree - 1] += 1;
            }
        }
        SeriesProfile::from_integers(SeriesKind::D, &counts)
            .expect("order is positive for every caller")
    }
}

impl Default for DecorationSet {
    fn default() -> Self {
        Self::single()
    }
}

impl TryFrom<Vec<Decoration>> for DecorationSet {
    type Error = NckError;

    fn try_from(v: Vec<Decoration>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<DecorationSet> for Vec<Decoration> {
    fn from(d: DecorationSet) -> Self {
        d.entries
    }
}
