use num::Zero;
use serde::Serialize;

use super::{PairingError, PairingState};
use crate::exactla::{RationalMatrix, Subspace};
use crate::hopfstruct::DegreeDecomposition;
use crate::ratseries::Rational;

/// The basis `x ∪ y ∪ z ∪ t′` of `core ⊕ m ⊕ h ⊕ w′` and the Gram matrix in
/// that basis.
#[derive(Debug, Clone)]
pub struct AdaptedDegree {
    pub decomposition: DegreeDecomposition,
    pub x: Vec<Vec<Rational>>,
    pub y: Vec<Vec<Rational>>,
    pub z: Vec<Vec<Rational>>,
    pub t: Vec<Vec<Rational>>,
    pub gram: RationalMatrix,
    pub summary: AdaptSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdaptSummary {
    pub degree: usize,
    pub core: usize,
    pub m: usize,
    pub h: usize,
    pub w: usize,
    /// `w′` still complements `g + dec`.
    pub complement: bool,
    /// The Gram matrix is `[[0,0,0,I],[0,A,0,0],[0,0,B,0],[I,0,0,0]]` with
    /// `A`, `B` symmetric and invertible.
    pub block_form: bool,
}

fn lin_comb(
    terms: impl IntoIterator<Item = (Rational, Vec<Rational>)>,
    dim: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn block(
    g: &RationalMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> RationalMatrix {
    let data = rows
        .map(|i| cols.clone().map(|j| g.get(i, j).clone()).collect())
        .collect();
    RationalMatrix::from_rows(cols.len(), data)
}

fn invertible(m: &RationalMatrix) -> bool {
    m.determinant().map(|d| !d.is_zero()).unwrap_or(false)
}

/// Replaces `w_n` by a complement `w′_n` dual to `core_n` and orthogonal to
/// `m_n`, `h_n` and itself.
///
/// The `w` basis is first changed so that it is dual to the `core` basis.
/// Its components along `m` and `h` are then removed with the inverses of
/// the Gram blocks on those spaces. Finally half of the Gram matrix of the
/// result is subtracted along `core`, which makes the new vectors pairwise
/// orthogonal.
pub fn adapt_complement(st: &PairingState, n: usize) -> Result<AdaptedDegree, PairingError> {
    let d = st.decomposition(n)?;
    let g = st.gram(n)?;
    let dim = g.rows();
    let gram_of = |us: &[Vec<Rational>], vs: &[Vec<Rational>]| {
        let u = RationalMatrix::from_rows(dim, us.to_vec());
        let v = RationalMatrix::from_rows(dim, vs.to_vec());
        u.mul(g)
            .and_then(|ug| ug.mul(&v.transpose()))
            .expect("vectors live in H_n")
    };

    let x = d.core.basis_vectors();
    let y = d.m.basis_vectors();
    let z = d.h.basis_vectors();
    let t0 = d.w.basis_vectors();

    // Dual to x: t̃ = (Cᵀ)⁻¹ t with C = ⟨x, t⟩.
    let c = gram_of(&x, &t0);
    let dual = c.transpose().inverse()?;
    let t_dual: Vec<Vec<Rational>> = (0..t0.len())
        .map(|i| {
            lin_comb(
                (0..t0.len()).map(|k| (dual.get(i, k).clone(), t0[k].clone())),
                dim,
            )
        })
        .collect();

    // Remove the m and h components.
    let a_inv = gram_of(&y, &y).inverse()?;
    let b_inv = gram_of(&z, &z).inverse()?;
    let d_blk = gram_of(&y, &t_dual);
    let e_blk = gram_of(&z, &t_dual);
    let u: Vec<Vec<Rational>> = t_dual
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            let col_d: Vec<Rational> = (0..y.len()).map(|j| d_blk.get(j, i).clone()).collect();
            let col_e: Vec<Rational> = (0..z.len()).map(|k| e_blk.get(k, i).clone()).collect();
            let lam = a_inv.apply(&col_d);
            let mu = b_inv.apply(&col_e);
            let along_m = lin_comb(lam.into_iter().zip(y.iter().cloned()), dim);
            let along_h = lin_comb(mu.into_iter().zip(z.iter().cloned()), dim);
            sub(&sub(ti, &along_m), &along_h)
        })
        .collect();

    // Make the new vectors pairwise orthogonal.
    let f = gram_of(&u, &u);
    let half = Rational::new(1.into(), 2.into());
    let t: Vec<Vec<Rational>> = u
        .iter()
        .enumerate()
        .map(|(i, ui)| {
            let corr = lin_comb(
                (0..x.len()).map(|k| (f.get(i, k) * &half, x[k].clone())),
                dim,
            );
            sub(ui, &corr)
        })
        .collect();

    let mut rows = x.clone();
    rows.extend(y.iter().cloned());
    rows.extend(z.iter().cloned());
    rows.extend(t.iter().cloned());
    let gram = gram_of(&rows, &rows);

    let (nc, nm, nh) = (x.len(), y.len(), z.len());
    let (r0, r1, r2, r3, r4) = (0, nc, nc + nm, nc + nm + nh, 2 * nc + nm + nh);
    let zero_blocks = [
        (r0..r1, r0..r1),
        (r0..r1, r1..r2),
        (r0..r1, r2..r3),
        (r1..r2, r2..r3),
        (r1..r2, r3..r4),
        (r2..r3, r3..r4),
        (r3..r4, r3..r4),
    ];
    let a = block(&gram, r1..r2, r1..r2);
    let b = block(&gram, r2..r3, r2..r3);
    let block_form = gram.is_symmetric()
        && zero_blocks
            .iter()
            .all(|(r, c)| block(&gram, r.clone(), c.clone()).is_zero())
        && block(&gram, r0..r1, r3..r4) == RationalMatrix::identity(nc)
        && a.is_symmetric()
        && invertible(&a)
        && b.is_symmetric()
        && invertible(&b);

    let w_new = Subspace::span(dim, t.clone());
    let gd = d.g.sum(&d.dec)?;
    let complement =
        w_new.dim() == t.len() && gd.dim() + w_new.dim() == dim && gd.sum(&w_new)?.dim() == dim;

    let mut decomposition = d.clone();
    decomposition.w = w_new;
    let summary = AdaptSummary {
        degree: n,
        core: nc,
        m: nm,
        h: nh,
        w: t.len(),
        complement,
        block_form,
    };
    Ok(AdaptedDegree {
        decomposition,
        x,
        y,
        z,
        t,
        gram,
        summary,
    })
}
