//! Forest-level coalgebra identities, evaluated on sparse sums.

use std::collections::BTreeMap;

use freecofree::nck::{coproduct, Forest};

type Sum3 = BTreeMap<(Forest, Forest, Forest), i64>;
type Sum2 = BTreeMap<(Forest, Forest), i64>;

fn add<K: Ord>(map: &mut BTreeMap<K, i64>, k: K, c: i64) {
    let e = map.entry(k).or_insert(0);
    *e += c;
}

fn prune<K: Ord>(mut map: BTreeMap<K, i64>) -> BTreeMap<K, i64> {
    map.retain(|_, c| *c != 0);
    map
}

/// `(Δ ⊗ id)Δ(f) = (id ⊗ Δ)Δ(f)`.
pub fn coassociative(f: &Forest) -> bool {
    let mut left = Sum3::new();
    let mut right = Sum3::new();
    for ((a, b), m) in coproduct(f) {
        let m = m as i64;
        for ((a1, a2), k) in coproduct(&a) {
            add(&mut left, (a1, a2, b.clone()), m * k as i64);
        }
        for ((b1, b2), k) in coproduct(&b) {
            add(&mut right, (a.clone(), b1, b2), m * k as i64);
        }
    }
    prune(left) == prune(right)
}

/// `Δ(fg) = Δ(f) Δ(g)` in `H ⊗ H` with the componentwise product.
pub fn multiplicative(f: &Forest, g: &Forest) -> bool {
    let lhs: Sum2 = coproduct(&f.product(g))
        .into_iter()
        .map(|(k, m)| (k, m as i64))
        .collect();
    let mut rhs = Sum2::new();
    for ((a, b), m) in coproduct(f) {
        for ((c, d), k) in coproduct(g) {
            add(&mut rhs, (a.product(&c), b.product(&d)), (m * k) as i64);
        }
    }
    prune(lhs) == prune(rhs)
}

/// `(ε ⊗ id)Δ(f) = f = (id ⊗ ε)Δ(f)`.
pub fn counital(f: &Forest) -> bool {
    let d = coproduct(f);
    let unit = Forest::unit();
    d.get(&(unit.clone(), f.clone())) == Some(&1)
        && d.get(&(f.clone(), unit.clone())) == Some(&1)
        && d.keys().filter(|(a, b)| a.is_unit() || b.is_unit()).count()
            == if f.is_unit() { 1 } else { 2 }
}
