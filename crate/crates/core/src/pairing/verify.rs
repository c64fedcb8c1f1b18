use num::Zero;
use serde::Serialize;

use super::{pair_through, PairingError, PairingState};
use crate::exactla::{kernel_basis, RationalMatrix};
use crate::hopfstruct::multi_tree_span;
use crate::nck::NckAlgebra;
use crate::ratseries::format_rational;

/// A basis triple violating one of the product/coproduct identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub restricts_to_base_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub max_degree: usize,
    /// `⟨x, 1⟩ = ε(x)`.
    pub counit: bool,
    /// `⟨xy, z⟩ = ⟨x ⊗ y, Δ z⟩` on all basis triples.
    pub product_left: bool,
    /// `⟨x, yz⟩ = ⟨Δ x, y ⊗ z⟩` on all basis triples.
    pub product_right: bool,
    /// Each Gram block is square over its own degree.
    pub homogeneous: bool,
    pub degrees: Vec<DegreeCheck>,
    pub first_counterexample: Option<Counterexample>,
    pub pass: bool,
}

impl PairingReport {
    /// Names of the failed checks, in the order they are reported.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.counit {
            out.push("counit".to_string());
        }
        if !self.product_left {
            out.push("product_left".to_string());
        }
        if !self.product_right {
            out.push("product_right".to_string());
        }
        if !self.homogeneous {
            out.push("homogeneous".to_string());
        }
        for d in &self.degrees {
            if !d.symmetric {
                out.push(format!("symmetric@{}", d.degree));
            }
            if !d.nondegenerate {
                out.push(format!("nondegenerate@{}", d.degree));
            }
            if !d.restricts_to_base_form {
                out.push(format!("base_form@{}", d.degree));
            }
        }
        out
    }
}

/// Checks every pairing axiom exhaustively on basis forests of total degree
/// at most `st.max_degree`.
pub fn verify_hopf_pairing(h: &NckAlgebra, st: &PairingState) -> PairingReport {
    let n_max = st.max_degree;
    let homogeneous = st.gram.len() == n_max + 1
        && (0..=n_max).all(|n| st.gram[n].rows() == h.dim(n) && st.gram[n].cols() == h.dim(n));
    let counit = st.gram.first() == Some(&RationalMatrix::identity(1));
    let mut first: Option<Counterexample> = None;
    let mut left_ok = true;
    let mut right_ok = true;

    if homogeneous {
        for n in 0..=n_max {
            let bn = h.basis(n);
            for (k, f) in bn.forests.iter().enumerate() {
                let v = h.basis_vector(f).expect("basis forest");
                for t in h.coproduct(&v) {
                    let (i, j) = t.bidegree;
                    let (bi, bj) = (h.basis(i), h.basis(j));
                    // ⟨x ⊗ y, Δ f⟩ against ⟨xy, f⟩
                    let lhs_left = pair_through(&st.gram[i], &st.gram[j], &t);
                    // ⟨Δ f, y ⊗ z⟩ against ⟨f, yz⟩
                    let lhs_right = st.gram[i]
                        .transpose()
                        .mul(&pair_through(
                            &RationalMatrix::identity(bi.dim()),
                            &st.gram[j].transpose(),
                            &t,
                        ))
                        .expect("dimensions agree by grading");
                    for (a, x) in bi.forests.iter().enumerate() {
                        for (b, y) in bj.forests.iter().enumerate() {
                            let xy = bn.index_of(&x.product(y)).expect("basis forest");
                            let rhs = st.gram[n].get(xy, k);
                            if left_ok && lhs_left.get(a, b) != rhs {
                                left_ok = false;
                                first.get_or_insert(Counterexample {
                                    check: "product_left".into(),
                                    x: x.to_string(),
                                    y: y.to_string(),
                                    z: f.to_string(),
                                    lhs: format_rational(rhs),
                                    rhs: format_rational(lhs_left.get(a, b)),
                                });
                            }
                            let rhs = st.gram[n].get(k, xy);
                            if right_ok && lhs_right.get(a, b) != rhs {
                                right_ok = false;
                                first.get_or_insert(Counterexample {
                                    check: "product_right".into(),
                                    x: f.to_string(),
                                    y: x.to_string(),
                                    z: y.to_string(),
                                    lhs: format_rational(rhs),
                                    rhs: format_rational(lhs_right.get(a, b)),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let degrees: Vec<DegreeCheck> = (0..=n_max)
        .filter(|&n| n < st.gram.len())
        .map(|n| {
            let g = &st.gram[n];
            let nondegenerate = g.determinant().map(|d| !d.is_zero()).unwrap_or(false);
            let restricts_to_base_form = n == 0
                || match (st.decompositions.get(n - 1), st.base_form.get(n)) {
                    (Some(d), Some(base)) => {
                        let z = d.h.basis();
                        z.mul(g)
                            .and_then(|m| m.mul(&z.transpose()))
                            .map(|m| &m == base)
                            .unwrap_or(false)
                    }
                    _ => false,
                };
            DegreeCheck {
                degree: n,
                symmetric: g.is_symmetric(),
                nondegenerate,
                restricts_to_base_form,
            }
        })
        .collect();

    let pass = counit
        && left_ok
        && right_ok
        && homogeneous
        && degrees
            .iter()
            .all(|d| d.symmetric && d.nondegenerate && d.restricts_to_base_form);
    PairingReport {
        max_degree: n_max,
        counit,
        product_left: left_ok && homogeneous,
        product_right: right_ok && homogeneous,
        homogeneous,
        degrees,
        first_counterexample: first,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    pub degree: usize,
    pub dim_orthogonal: usize,
    pub dim_primitives: usize,
    pub pass: bool,
}

/// The orthogonal of the decomposables of degree `n` is the space of
/// primitives of degree `n`.
pub fn check_lemma2(
    h: &NckAlgebra,
    st: &PairingState,
    n: usize,
) -> Result<Lemma2Report, PairingError> {
    let d = st.decomposition(n)?;
    let g = st.gram(n)?;
    let dec = multi_tree_span(h, n);
    let functionals = dec.basis().mul(g)?;
    let orth = kernel_basis(&functionals);
    Ok(Lemma2Report {
        degree: n,
        dim_orthogonal: orth.dim(),
        dim_primitives: d.g.dim(),
        pass: orth == d.g,
    })
}
