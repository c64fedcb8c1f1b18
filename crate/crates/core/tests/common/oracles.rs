//! Reference computations written directly from the defining formulas, with
//! no code shared with the library.

use num::{BigInt, One, Zero};

use super::q;
use freecofree::ratseries::Rational;

/// Dense truncated series `c[0] + c[1] h + …`.
type Poly = Vec<Rational>;

fn mul(a: &[Rational], b: &[Rational], order: usize) -> Poly {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 − hᵏ)^e` for rational `e`, by the generalized binomial series.
fn binomial_factor(k: usize, e: &Rational, order: usize) -> Poly {
    let mut out = vec![Rational::zero(); order + 1];
    let mut coeff = Rational::one();
    let mut j = 0;
    while j * k <= order {
        out[j * k] = if j % 2 == 0 {
            coeff.clone()
        } else {
            -coeff.clone()
        };
        coeff = coeff * (e - q(j as i64)) / q(j as i64 + 1);
        j += 1;
    }
    out
}

/// Solves `1 − S = ∏ (1 − hᵏ)^{p_k}` for `p` one degree at a time: the
/// coefficient of `hⁿ` in the product is `−p_n` plus the coefficient coming
/// from the factors `k < n`.
pub fn p_from_s_by_products(s: &[Rational]) -> Vec<Rational> {
    let order = s.len();
    let mut p = Vec::new();
    for n in 1..=order {
        let mut prod = vec![Rational::zero(); n + 1];
        prod[0] = Rational::one();
        for (k, pk) in p.iter().enumerate() {
            prod = mul(&prod, &binomial_factor(k + 1, pk, n), n);
        }
        p.push(&s[n - 1] + &prod[n]);
    }
    p
}

/// The same product, evaluated: returns `s` with `1 − S = ∏ (1 − hᵏ)^{p_k}`.
pub fn s_from_p_by_products(p: &[Rational]) -> Vec<Rational> {
    let order = p.len();
    let mut prod = vec![Rational::zero(); order + 1];
    prod[0] = Rational::one();
    for (k, pk) in p.iter().enumerate() {
        prod = mul(&prod, &binomial_factor(k + 1, pk, order), order);
    }
    prod[1..].iter().map(|c| -c).collect()
}

/// Coefficients `1..=order` of `(R − 1)/R²` by long division.
pub fn d_by_division(r: &[Rational]) -> Vec<Rational> {
    let order = r.len();
    let mut big_r = vec![Rational::one()];
    big_r.extend(r.iter().cloned());
    let r2 = mul(&big_r, &big_r, order);
    let mut num = vec![Rational::zero()];
    num.extend(r.iter().cloned());
    let mut quot = vec![Rational::zero(); order + 1];
    for n in 0..=order {
        let mut acc = num[n].clone();
        for k in 0..n {
            acc -= &quot[k] * &r2[n - k];
        }
        quot[n] = acc;
    }
    quot[1..].to_vec()
}

/// Iterates `R ← 1 + D R²` to its fixed point modulo `h^{order+1}`.
pub fn r_by_iteration(d: &[Rational]) -> Vec<Rational> {
    let order = d.len();
    let mut big_d = vec![Rational::zero()];
    big_d.extend(d.iter().cloned());
    let mut r = vec![Rational::zero(); order + 1];
    r[0] = Rational::one();
    for _ in 0..=order {
        let mut next = mul(&big_d, &mul(&r, &r, order), order);
        next[0] += Rational::one();
        r = next;
    }
    r[1..].to_vec()
}

/// `P_n` from `R = 1/(1 − P)`, i.e. `P = 1 − 1/R`.
pub fn p_by_division(r: &[Rational]) -> Vec<Rational> {
    let order = r.len();
    let mut big_r = vec![Rational::one()];
    big_r.extend(r.iter().cloned());
    let mut inv = vec![Rational::zero(); order + 1];
    inv[0] = Rational::one();
    for n in 1..=order {
        let mut acc = Rational::zero();
        for k in 1..=n {
            acc -= &big_r[k] * &inv[n - k];
        }
        inv[n] = acc;
    }
    inv[1..].iter().map(|c| -c).collect()
}

pub fn s_polynomials(r: [i64; 3]) -> [Rational; 3] {
    let [r1, r2, r3] = r.map(q);
    let s1 = r1.clone();
    let s2 = &r2 - q(3) * &r1 * &r1 / q(2) + &r1 / q(2);
    let s3 =
        &r3 + &r1 / q(3) - q(3) * &r1 * &r2 - &r1 * &r1 / q(2) + q(13) * &r1 * &r1 * &r1 / q(6);
    [s1, s2, s3]
}

/// `D_1..D_3`; the cubic term of `D_3` is `3R_1³`, as the generating
/// function `(R − 1)/R²` requires.
pub fn d_polynomials(r: [i64; 3]) -> [Rational; 3] {
    let [r1, r2, r3] = r.map(q);
    let d1 = r1.clone();
    let d2 = &r2 - q(2) * &r1 * &r1;
    let d3 = &r3 - q(4) * &r2 * &r1 + q(3) * &r1 * &r1 * &r1;
    [d1, d2, d3]
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Dimension of the degree-`n` part of the free Lie algebra on `m`
/// generators of degree 1.
pub fn witt(m: i64, n: u64) -> Rational {
    let mut total = BigInt::zero();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        total += BigInt::from(mobius(d)) * BigInt::from(m).pow((n / d) as u32);
    }
    Rational::new(total, BigInt::from(n))
}

/// `C_1..C_order` with `C_0 = 1`, `C_{n+1} = Σ C_i C_{n−i}`.
pub fn catalan(order: usize) -> Vec<i64> {
    let mut c = vec![1i64];
    for n in 0..order {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c[1..].to_vec()
}

pub fn factorials(order: usize) -> Vec<i64> {
    (1..=order as i64)
        .scan(1, |acc, n| {
            *acc *= n;
            Some(*acc)
        })
        .collect()
}

/// Ordered Bell numbers via `a_n = Σ_{k=1}^{n} C(n,k) a_{n−k}`.
pub fn ordered_bell(order: usize) -> Vec<i64> {
    let mut a = vec![1i64];
    for n in 1..=order {
        let mut binom = 1i64;
        let mut total = 0;
        for k in 1..=n {
            binom = binom * (n - k + 1) as i64 / k as i64;
            total += binom * a[n - k];
        }
        a.push(total);
    }
    a[1..].to_vec()
}

pub fn parking(order: usize) -> Vec<i64> {
    (1..=order as u32)
        .map(|n| (n as i64 + 1).pow(n - 1))
        .collect()
}

pub fn factorial_squares(order: usize) -> Vec<i64> {
    factorials(order).into_iter().map(|f| f * f).collect()
}
