//! Admissible-cut coproduct on forests.
//!
//! For a tree `t`, `Δ(t) = Σ_c P^c(t) ⊗ R^c(t)`: the cut-off branches go to
//! the left factor, ordered by a left-to-right depth-first walk of their
//! roots, and the trunk containing the root goes to the right. The empty cut
//! gives `1 ⊗ t` and the total cut gives `t ⊗ 1`.

use std::collections::BTreeMap;

use super::{Forest, NckError, Tree};

/// Sparse tensor over pairs of forests with multiplicities.
pub type Coproduct = BTreeMap<(Forest, Forest), u64>;

/// Every admissible cut of `t` as `(branches, trunk)`; `None` is the empty
/// trunk of the total cut.
fn cuts(t: &Tree) -> Vec<(Vec<Tree>, Option<Tree>)> {
    let mut partial: Vec<(Vec<Tree>, Vec<Tree>)> = vec![(Vec::new(), Vec::new())];
    for child in &t.children {
        let options = cuts(child);
        let mut next = Vec::with_capacity(partial.len() * options.len());
        for (branches, kept) in &partial {
            for (b, trunk) in &options {
                let mut branches = branches.clone();
                branches.extend(b.iter().cloned());
                let mut kept = kept.clone();
                kept.extend(trunk.iter().cloned());
                next.push((branches, kept));
            }
        }
        partial = next;
    }
    let mut out: Vec<(Vec<Tree>, Option<Tree>)> = partial
        .into_iter()
        .map(|(branches, kept)| (branches, Some(Tree::node(t.label.clone(), kept))))
        .collect();
    out.push((vec![t.clone()], None));
    out
}

fn tree_coproduct(t: &Tree) -> Coproduct {
    let mut out = Coproduct::new();
    for (branches, trunk) in cuts(t) {
        let key = (
            Forest::new(branches),
            Forest::new(trunk.into_iter().collect()),
        );
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

/// `Δ(f)`, extended multiplicatively from trees; `Δ(1) = 1 ⊗ 1`.
pub fn coproduct(f: &Forest) -> Coproduct {
    let mut acc = Coproduct::new();
    acc.insert((Forest::unit(), Forest::unit()), 1);
    for t in &f.trees {
        let dt = tree_coproduct(t);
        let mut next = Coproduct::new();
        for ((l, r), c) in &acc {
            for ((l2, r2), c2) in &dt {
                *next.entry((l.product(l2), r.product(r2))).or_insert(0) += c * c2;
            }
        }
        acc = next;
    }
    acc
}

/// `Δ̃(f) = Δ(f) − f ⊗ 1 − 1 ⊗ f`.
pub fn reduced_coproduct(f: &Forest) -> Result<Coproduct, NckError> {
    if f.is_unit() {
        return Err(NckError::DegreeZeroInput);
    }
    let mut d = coproduct(f);
    for key in [(f.clone(), Forest::unit()), (Forest::unit(), f.clone())] {
        let c = d.get_mut(&key).expect("trivial terms are always present");
        *c -= 1;
        if *c == 0 {
            d.remove(&key);
        }
    }
    Ok(d)
}
