//! Inductive construction of a symmetric nondegenerate Hopf pairing on
//! `H_NCK^D`, degree by degree.
//!
//! In degree `n` the algebra splits as `dec ⊕ h ⊕ w`, where `h ⊕ w` is a
//! space of algebra generators. Pairings against decomposables are forced by
//! `⟨x'x'', z⟩ = ⟨x' ⊗ x'', Δ̃ z⟩` and the lower-degree Gram matrices. A
//! generator in `h` pairs with `h` through the chosen base form and kills
//! `dec ⊕ w`; a generator in `w` kills `h ⊕ w` and pairs with decomposables
//! through the forced values. Solving for these functionals gives the
//! degree-`n` Gram matrix.

mod adapt;
mod verify;

pub use adapt::{adapt_complement, AdaptedDegree};
pub use verify::{
    check_lemma2, verify_hopf_pairing, Counterexample, DegreeCheck, Lemma2Report, PairingReport,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactla::{unit_vector, LinalgError, RationalMatrix};
use crate::hopfstruct::{build_decomposition, multi_tree_span, DegreeDecomposition};
use crate::nck::{NckAlgebra, TensorVector};
use crate::ratseries::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("base form in degree {degree} is degenerate")]
    DegenerateBaseForm { degree: usize },
    #[error("base form in degree {degree} is not symmetric")]
    AsymmetricBaseForm { degree: usize },
    #[error("base form in degree {degree} should be {expected}x{expected}, got {rows}x{cols}")]
    BaseFormShape {
        degree: usize,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("degree {degree} is outside the built range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Symmetric nondegenerate forms on the spaces `h_n`.
#[derive(Debug, Clone, Default)]
pub enum BaseForm {
    /// The identity matrix in the canonical basis of each `h_n`.
    #[default]
    Identity,
    /// Explicit matrices by degree; missing degrees use the identity.
    PerDegree(BTreeMap<usize, RationalMatrix>),
}

impl BaseForm {
    fn matrix(&self, degree: usize, dim: usize) -> Result<RationalMatrix, PairingError> {
        let m = match self {
            BaseForm::PerDegree(map) if map.contains_key(&degree) => map[&degree].clone(),
            _ => return Ok(RationalMatrix::identity(dim)),
        };
        if m.rows() != dim || m.cols() != dim {
            return Err(PairingError::BaseFormShape {
                degree,
                expected: dim,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_symmetric() {
            return Err(PairingError::AsymmetricBaseForm { degree });
        }
        if num::Zero::is_zero(&m.determinant()?) {
            return Err(PairingError::DegenerateBaseForm { degree });
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    /// A vector of `h_n`.
    H,
    /// A vector of `w_n`.
    W,
}

/// A generator `v ∈ h_n ∪ w_n` and the functional `⟨v, −⟩` on `H_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFunctional {
    pub kind: GeneratorKind,
    pub vector: Vec<Rational>,
    pub functional: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub struct PairingState {
    pub max_degree: usize,
    /// `gram[n][i][j] = ⟨b_i, b_j⟩` over the basis of `H_n`.
    pub gram: Vec<RationalMatrix>,
    /// Base-form matrix used on `h_n`, indexed by degree.
    pub base_form: Vec<RationalMatrix>,
    /// Decompositions for degrees `1..=max_degree`, at index `n − 1`.
    pub decompositions: Vec<DegreeDecomposition>,
    pub generator_functionals: Vec<Vec<GeneratorFunctional>>,
}

impl PairingState {
    pub fn decomposition(&self, n: usize) -> Result<&DegreeDecomposition, PairingError> {
        if n == 0 || n > self.max_degree {
            return Err(PairingError::DegreeOutOfRange {
                degree: n,
                max: self.max_degree,
            });
        }
        Ok(&self.decompositions[n - 1])
    }

    pub fn gram(&self, n: usize) -> Result<&RationalMatrix, PairingError> {
        self.gram.get(n).ok_or(PairingError::DegreeOutOfRange {
            degree: n,
            max: self.max_degree,
        })
    }

    /// `⟨u, v⟩` for coordinate vectors of degree `n`.
    pub fn form(&self, n: usize, u: &[Rational], v: &[Rational]) -> Rational {
        crate::exactla::dot(u, &self.gram[n].apply(v))
    }
}

/// `⟨x ⊗ y, T⟩` for all basis pairs at once: `G_i · T · G_jᵀ`.
pub(crate) fn pair_through(
    gi: &RationalMatrix,
    gj: &RationalMatrix,
    t: &TensorVector,
) -> RationalMatrix {
    let mut tm = RationalMatrix::zeros(t.dims.0, t.dims.1);
    for a in 0..t.dims.0 {
        for b in 0..t.dims.1 {
            tm.set(a, b, t.get(a, b).clone());
        }
    }
    gi.mul(&tm)
        .and_then(|m| m.mul(&gj.transpose()))
        .expect("dimensions agree by grading")
}

/// Builds the pairing in degrees `0..=max_degree`.
pub fn build_pairing(
    h: &NckAlgebra,
    max_degree: usize,
    base_form: &BaseForm,
) -> Result<PairingState, PairingError> {
    let mut st = PairingState {
        max_degree,
        gram: vec![RationalMatrix::identity(1)],
        base_form: vec![RationalMatrix::zeros(0, 0)],
        decompositions: Vec::new(),
        generator_functionals: vec![Vec::new()],
    };
    for n in 1..=max_degree {
        let d = build_decomposition(h, n);
        let b = base_form.matrix(n, d.h.dim())?;
        let (gram, gens) = degree_step(h, &st, &d, &b)?;
        st.gram.push(gram);
        st.base_form.push(b);
        st.decompositions.push(d);
        st.generator_functionals.push(gens);
    }
    Ok(st)
}

fn degree_step(
    h: &NckAlgebra,
    st: &PairingState,
    d: &DegreeDecomposition,
    base: &RationalMatrix,
) -> Result<(RationalMatrix, Vec<GeneratorFunctional>), PairingError> {
    let n = d.degree;
    let bn = h.basis(n);
    let dim = bn.dim();
    assert_eq!(
        d.dec,
        multi_tree_span(h, n),
        "decomposables are spanned by multi-tree forests"
    );

    // Forced rows: ⟨x₁ · rest, z⟩ for every multi-tree forest x.
    let dec_idx: Vec<usize> = (0..dim).filter(|&i| bn.forests[i].len() >= 2).collect();
    let splits: Vec<(usize, usize, usize)> = dec_idx
        .iter()
        .map(|&i| {
            let (first, rest) = bn.forests[i].split_first().expect("nonempty");
            let (deg, a) = h.locate(&first).expect("basis forest");
            let (_, b) = h.locate(&rest).expect("basis forest");
            (deg, a, b)
        })
        .collect();
    let mut dec_rows = RationalMatrix::zeros(dec_idx.len(), dim);
    for (col, f) in bn.forests.iter().enumerate() {
        let z = h.basis_vector(f).expect("basis forest");
        let family = h.reduced_coproduct(&z).expect("positive degree");
        let paired: Vec<RationalMatrix> = family
            .iter()
            .map(|t| pair_through(&st.gram[t.bidegree.0], &st.gram[t.bidegree.1], t))
            .collect();
        for (row, &(deg, a, b)) in splits.iter().enumerate() {
            dec_rows.set(row, col, paired[deg - 1].get(a, b).clone());
        }
    }

    let hs = d.h.basis_vectors();
    let ws = d.w.basis_vectors();
    let mut m_rows: Vec<Vec<Rational>> = dec_idx.iter().map(|&i| unit_vector(dim, i)).collect();
    m_rows.extend(hs.iter().cloned());
    m_rows.extend(ws.iter().cloned());
    let basis_change = RationalMatrix::from_rows(dim, m_rows);
    let inv = basis_change.inverse()?;

    let (nd, nh) = (dec_idx.len(), hs.len());
    let mut gens = Vec::with_capacity(hs.len() + ws.len());
    for (k, z) in hs.iter().enumerate() {
        let mut values = vec![Rational::default(); dim];
        for (kk, v) in base.row(k).iter().enumerate() {
            values[nd + kk] = v.clone();
        }
        gens.push(GeneratorFunctional {
            kind: GeneratorKind::H,
            vector: z.clone(),
            functional: inv.apply(&values),
        });
    }
    for t in &ws {
        let mut values = vec![Rational::default(); dim];
        values[..nd].clone_from_slice(&dec_rows.apply(t));
        gens.push(GeneratorFunctional {
            kind: GeneratorKind::W,
            vector: t.clone(),
            functional: inv.apply(&values),
        });
    }
    debug_assert_eq!(nd + nh + ws.len(), dim);

    let mut lambda = dec_rows.row_vecs();
    lambda.extend(gens.iter().map(|g| g.functional.clone()));
    let gram = inv.mul(&RationalMatrix::from_rows(dim, lambda))?;
    Ok((gram, gens))
}

#[derive(Debug, Clone, Serialize)]
pub struct GramExport {
    pub max_degree: usize,
    pub basis: BTreeMap<usize, Vec<String>>,
    pub gram: BTreeMap<usize, Vec<Vec<String>>>,
}

/// Gram matrices as rows of rational strings, keyed by degree, with the
/// basis forests that index them.
pub fn export_gram(h: &NckAlgebra, st: &PairingState) -> GramExport {
    let mut basis = BTreeMap::new();
    let mut gram = BTreeMap::new();
    for (n, g) in st.gram.iter().enumerate() {
        basis.insert(
            n,
            h.basis(n).forests.iter().map(ToString::to_string).collect(),
        );
        gram.insert(
            n,
            g.row_vecs()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        );
    }
    GramExport {
        max_degree: st.max_degree,
        basis,
        gram,
    }
}
