//! Degree-by-degree structure of `H_NCK^D`: primitives, decomposables, Lie
//! brackets, and the splitting `H_n = core ⊕ m ⊕ h ⊕ w` used by the pairing
//! construction.
//!
//! With `g` the primitives and `dec` the decomposables, `core = g ∩ dec`,
//! `m` complements `core` in `dec`, `h` complements `core` in `g`, and `w`
//! complements `g + dec` in `H_n`. Complements are picked greedily from the
//! canonical basis of the larger space, so every run chooses the same ones.

use serde::Serialize;

use crate::exactla::{kernel_basis, unit_vector, Subspace};
use crate::nck::{GradedVector, NckAlgebra};
use crate::ratseries::{p_from_r, s_from_r, Rational, SeriesKind, SeriesProfile};

/// `g_n = ker Δ̃|_{H_n}`.
pub fn primitives(h: &NckAlgebra, n: usize) -> Subspace {
    assert!(n >= 1, "primitives are taken in positive degree");
    let m = h.reduced_coproduct_matrix(n).expect("positive degree");
    kernel_basis(&m)
}

/// `(H⁺²)_n`, the span of all products `H_i · H_j` with `i, j ≥ 1`.
pub fn decomposables(h: &NckAlgebra, n: usize) -> Subspace {
    assert!(n >= 1, "decomposables are taken in positive degree");
    let bn = h.basis(n);
    let mut rows = Vec::new();
    for i in 1..n {
        let (bi, bj) = (h.basis(i), h.basis(n - i));
        for x in &bi.forests {
            for y in &bj.forests {
                let k = bn
                    .index_of(&x.product(y))
                    .expect("products stay in the basis");
                rows.push(unit_vector(bn.dim(), k));
            }
        }
    }
    Subspace::span(bn.dim(), rows)
}

/// The span of the forests with at least two trees, which equals
/// [`decomposables`] because the algebra is free on its trees.
pub fn multi_tree_span(h: &NckAlgebra, n: usize) -> Subspace {
    let bn = h.basis(n);
    let idx = bn
        .forests
        .iter()
        .enumerate()
        .filter(|(_, f)| f.len() >= 2)
        .map(|(i, _)| i);
    Subspace::coordinate(bn.dim(), idx)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma4Report {
    pub degree: usize,
    pub dim_h: usize,
    pub dim_primitives: usize,
    pub dim_decomposables: usize,
    pub pass: bool,
}

/// `dim g_n = dim H_n − dim (H⁺²)_n`.
pub fn check_lemma4(h: &NckAlgebra, n: usize) -> Lemma4Report {
    let dim_h = h.dim(n);
    let dim_primitives = primitives(h, n).dim();
    let dim_decomposables = decomposables(h, n).dim();
    Lemma4Report {
        degree: n,
        dim_h,
        dim_primitives,
        dim_decomposables,
        pass: dim_primitives + dim_decomposables == dim_h,
    }
}

/// `xy − yx`.
pub fn commutator(h: &NckAlgebra, x: &GradedVector, y: &GradedVector) -> GradedVector {
    let mut out = h.product(x, y);
    let yx = h.product(y, x);
    for (a, b) in out.coords.iter_mut().zip(yx.coords) {
        *a -= b;
    }
    out
}

fn as_vectors(space: &Subspace, degree: usize) -> Vec<GradedVector> {
    space
        .basis_vectors()
        .into_iter()
        .map(|coords| GradedVector { degree, coords })
        .collect()
}

/// `[g, g]_n`: the span of brackets of primitive basis vectors of degrees
/// `i` and `n − i` with `0 < i < n`.
pub fn bracket_space(h: &NckAlgebra, n: usize) -> Subspace {
    assert!(n >= 2, "brackets live in degree at least 2");
    let prims: Vec<Vec<GradedVector>> = (1..n).map(|k| as_vectors(&primitives(h, k), k)).collect();
    let mut rows = Vec::new();
    for i in 1..=n / 2 {
        for x in &prims[i - 1] {
            for y in &prims[n - i - 1] {
                rows.push(commutator(h, x, y).coords);
            }
        }
    }
    Subspace::span(h.dim(n), rows)
}

/// The splitting `H_n = core ⊕ m ⊕ h ⊕ w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDecomposition {
    pub degree: usize,
    pub g: Subspace,
    pub dec: Subspace,
    pub core: Subspace,
    pub m: Subspace,
    pub h: Subspace,
    pub w: Subspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecompositionDims {
    pub degree: usize,
    pub total: usize,
    pub g: usize,
    pub dec: usize,
    pub core: usize,
    pub m: usize,
    pub h: usize,
    pub w: usize,
}

impl DegreeDecomposition {
    pub fn dims(&self) -> DecompositionDims {
        DecompositionDims {
            degree: self.degree,
            total: self.g.ambient_dim(),
            g: self.g.dim(),
            dec: self.dec.dim(),
            core: self.core.dim(),
            m: self.m.dim(),
            h: self.h.dim(),
            w: self.w.dim(),
        }
    }

    /// The four direct-sum identities and `dim w = dim core`.
    pub fn invariants_hold(&self) -> bool {
        let direct = |a: &Subspace, b: &Subspace, total: &Subspace| {
            a.dim() + b.dim() == total.dim() && a.sum(b).map(|s| &s == total).unwrap_or(false)
        };
        let full = Subspace::full(self.g.ambient_dim());
        let ok_core = self
            .g
            .intersection(&self.dec)
            .map(|c| c == self.core)
            .unwrap_or(false);
        let cmh = self
            .core
            .sum(&self.m)
            .and_then(|s| s.sum(&self.h))
            .expect("same ambient space");
        ok_core
            && direct(&self.core, &self.m, &self.dec)
            && direct(&self.core, &self.h, &self.g)
            && direct(&cmh, &self.w, &full)
            && cmh.dim() == self.core.dim() + self.m.dim() + self.h.dim()
            && self.w.dim() == self.core.dim()
    }
}

pub fn build_decomposition(h: &NckAlgebra, n: usize) -> DegreeDecomposition {
    let g = primitives(h, n);
    let dec = decomposables(h, n);
    let core = g.intersection(&dec).expect("same ambient space");
    let m = core.complement_in(&dec).expect("same ambient space");
    let hh = core.complement_in(&g).expect("same ambient space");
    let gd = g.sum(&dec).expect("same ambient space");
    let w = gd
        .complement_in(&Subspace::full(h.dim(n)))
        .expect("same ambient space");
    DegreeDecomposition {
        degree: n,
        g,
        dec,
        core,
        m,
        h: hh,
        w,
    }
}

/// Per-degree summary: dimensions, series predictions and check results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub r: usize,
    pub p: usize,
    pub s: usize,
    pub dec: usize,
    pub core: usize,
    pub m: usize,
    pub w: usize,
    pub bracket: Option<usize>,
    pub p_matches_series: bool,
    pub s_matches_series: bool,
    pub lemma4: bool,
    pub decomposables_are_multi_tree: bool,
    pub brackets_equal_core: Option<bool>,
    pub invariants: bool,
}

impl DegreeReport {
    pub fn pass(&self) -> bool {
        self.p_matches_series
            && self.s_matches_series
            && self.lemma4
            && self.decomposables_are_multi_tree
            && self.brackets_equal_core.unwrap_or(true)
            && self.invariants
    }
}

/// Enumeration counts `r_1..r_n` as an `R` profile.
pub fn hilbert_profile(h: &NckAlgebra, n: usize) -> SeriesProfile {
    let counts: Vec<Rational> = (1..=n)
        .map(|k| Rational::from_integer(h.dim(k).into()))
        .collect();
    SeriesProfile::new(SeriesKind::R, counts).expect("n is positive")
}

/// Runs every structural check in degrees `1..=max_degree`. Bracket
/// identities are evaluated only when `with_brackets` is set.
pub fn structure_report(
    h: &NckAlgebra,
    max_degree: usize,
    with_brackets: bool,
) -> Vec<DegreeReport> {
    assert!(max_degree >= 1);
    let r = hilbert_profile(h, max_degree);
    let p = p_from_r(&r).expect("R profile");
    let s = s_from_r(&r).expect("R profile");
    (1..=max_degree)
        .map(|n| {
            let d = build_decomposition(h, n);
            let dims = d.dims();
            let bracket = (with_brackets && n >= 2).then(|| bracket_space(h, n));
            DegreeReport {
                degree: n,
                r: dims.total,
                p: dims.g,
                s: dims.h,
                dec: dims.dec,
                core: dims.core,
                m: dims.m,
                w: dims.w,
                bracket: bracket.as_ref().map(Subspace::dim),
                p_matches_series: *p.coeff(n) == Rational::from_integer(dims.g.into()),
                s_matches_series: *s.coeff(n) == Rational::from_integer(dims.h.into()),
                lemma4: dims.g + dims.dec == dims.total,
                decomposables_are_multi_tree: d.dec == multi_tree_span(h, n),
                brackets_equal_core: bracket.map(|b| b == d.core),
                invariants: d.invariants_hold(),
            }
        })
        .collect()
}
