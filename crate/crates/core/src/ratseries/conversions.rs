//! Conversions between the `R`, `P`, `S` and `D` series.

use num::{BigInt, One, Zero};

use super::{PowerSeries, Rational, SeriesError, SeriesKind, SeriesProfile};

/// A converted series together with an integrality diagnostic.
///
/// `p_from_s` (and anything routed through it) may produce non-integral
/// values on rational input; the result is still returned, with
/// `non_integer_at` naming the first offending index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conversion {
    pub series: SeriesProfile,
    pub non_integer_at: Option<usize>,
}

impl Conversion {
    fn checked(series: SeriesProfile) -> Self {
        let non_integer_at = series.first_non_integer();
        Conversion {
            series,
            non_integer_at,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.non_integer_at.is_none()
    }
}

/// Inverts `1 + Σ a_n hⁿ` modulo `h^(order+1)`.
///
/// The profile's stored coefficients are read as the non-constant part of a
/// series with constant term 1, whatever its kind; the result keeps the kind
/// and is truncated to `min(order, a.order())`.
pub fn series_invert(a: &SeriesProfile, order: usize) -> Result<SeriesProfile, SeriesError> {
    let order = order.min(a.order());
    if order == 0 {
        return Err(SeriesError::EmptyProfile);
    }
    let mut coeffs = vec![Rational::one()];
    coeffs.extend(a.coeffs()[..order].iter().cloned());
    let inv = PowerSeries::from_coeffs(coeffs).inverse()?;
    SeriesProfile::from_power_series(a.kind(), &inv)
}

/// `P = 1 − 1/R`.
pub fn p_from_r(r: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    r.expect_kind(SeriesKind::R)?;
    let inv = r.to_power_series().inverse()?;
    let p = &PowerSeries::one(r.order()) - &inv;
    SeriesProfile::from_power_series(SeriesKind::P, &p)
}

/// `R = 1/(1 − P)`.
pub fn r_from_p(p: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    p.expect_kind(SeriesKind::P)?;
    let one_minus = &PowerSeries::one(p.order()) - &p.to_power_series();
    let r = one_minus.inverse()?;
    SeriesProfile::from_power_series(SeriesKind::R, &r)
}

/// Generalized binomial coefficient `C(e, k)` for an integer exponent `e`
/// (negative allowed).
fn binomial(e: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= e - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `(1 − hⁿ)^e` truncated at `h^order`, for an integer exponent `e`.
fn one_minus_power(n: usize, e: &BigInt, order: usize) -> PowerSeries {
    let mut out = PowerSeries::zero(order).into_coeffs();
    for k in 0..=order / n {
        let mut c = binomial(e, k);
        if k % 2 == 1 {
            c = -c;
        }
        out[n * k] = Rational::from_integer(c);
    }
    PowerSeries::from_coeffs(out)
}

/// `1 − S = ∏_{n ≥ 1} (1 − hⁿ)^{p_n}`, expanded as a product.
///
/// The exponents must be integers.
pub fn s_from_p(p: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    p.expect_kind(SeriesKind::P)?;
    let order = p.order();
    let mut prod = PowerSeries::one(order);
    for n in 1..=order {
        let e = p.coeff(n);
        if !e.is_integer() {
            return Err(SeriesError::NonIntegerExponent {
                index: n,
                value: e.clone(),
            });
        }
        let e = e.to_integer();
        if e.is_zero() {
            continue;
        }
        prod = &prod * &one_minus_power(n, &e, order);
    }
    let s = &PowerSeries::one(order) - &prod;
    SeriesProfile::from_power_series(SeriesKind::S, &s)
}

/// The Möbius function.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Inverts `1 − S = ∏ (1 − hⁿ)^{p_n}` through the logarithm.
///
/// With `a_m = m·[hᵐ](−log(1 − S)) = [h^{m−1}](S′/(1 − S))`, the exponents
/// satisfy `a_m = Σ_{d | m} d·p_d`, so `m·p_m = Σ_{d | m} μ(m/d)·a_d`.
pub fn p_from_s(s: &SeriesProfile) -> Result<Conversion, SeriesError> {
    s.expect_kind(SeriesKind::S)?;
    let order = s.order();
    let series = s.to_power_series();
    let one_minus = &PowerSeries::one(order) - &series;
    // S' has order N-1, so a_1..a_N are all available.
    let log_deriv = &series.derivative() * &one_minus.inverse()?.truncate(order - 1);
    let a: Vec<Rational> = (1..=order).map(|m| log_deriv.coeff(m - 1)).collect();

    let mut p = Vec::with_capacity(order);
    for m in 1..=order {
        let mut acc = Rational::zero();
        for d in (1..=m).filter(|d| m % d == 0) {
            let mu = mobius(m / d);
            if mu != 0 {
                acc += &a[d - 1] * Rational::from_integer(mu.into());
            }
        }
        p.push(acc / Rational::from_integer(m.into()));
    }
    Ok(Conversion::checked(SeriesProfile::new(SeriesKind::P, p)?))
}

/// `S` from `R`, through `P`.
pub fn s_from_r(r: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    s_from_p(&p_from_r(r)?)
}

/// `R` from `S`, through `P`; carries the integrality flag of the `P` step.
pub fn r_from_s(s: &SeriesProfile) -> Result<Conversion, SeriesError> {
    let p = p_from_s(s)?;
    let r = r_from_p(&p.series)?;
    Ok(Conversion {
        series: r,
        non_integer_at: p.non_integer_at,
    })
}

/// `D = (R − 1)/R²`.
pub fn d_from_r(r: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    r.expect_kind(SeriesKind::R)?;
    let big_r = r.to_power_series();
    let numerator = &big_r - &PowerSeries::one(r.order());
    let d = &numerator * &(&big_r * &big_r).inverse()?;
    SeriesProfile::from_power_series(SeriesKind::D, &d)
}

/// `R = (1 − √(1 − 4D))/(2D)`, evaluated as `2/(1 + √(1 − 4D))` so that no
/// series with zero constant term is ever inverted.
pub fn r_from_d(d: &SeriesProfile) -> Result<SeriesProfile, SeriesError> {
    d.expect_kind(SeriesKind::D)?;
    let order = d.order();
    let four = Rational::from_integer(4.into());
    let radicand = &PowerSeries::one(order) - &d.to_power_series().scale(&four);
    let root = radicand.sqrt()?;
    let denom = &PowerSeries::one(order) + &root;
    let r = denom.inverse()?.scale(&Rational::from_integer(2.into()));
    SeriesProfile::from_power_series(SeriesKind::R, &r)
}

/// Converts `input` to the series of kind `to`.
///
/// `P ↔ S` is direct; everything else goes through `R`.
pub fn convert(input: &SeriesProfile, to: SeriesKind) -> Result<Conversion, SeriesError> {
    use SeriesKind::*;
    match (input.kind(), to) {
        (from, to) if from == to => Ok(Conversion::checked(input.clone())),
        (P, S) => Ok(Conversion::checked(s_from_p(input)?)),
        (S, P) => p_from_s(input),
        (from, to) => {
            let (r, flag) = match from {
                R => (input.clone(), None),
                P => (r_from_p(input)?, None),
                S => {
                    let c = r_from_s(input)?;
                    (c.series, c.non_integer_at)
                }
                D => (r_from_d(input)?, None),
            };
            let series = match to {
                R => r,
                P => p_from_r(&r)?,
                S => s_from_r(&r)?,
                D => d_from_r(&r)?,
            };
            let mut out = Conversion::checked(series);
            out.non_integer_at = flag.or(out.non_integer_at);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> SeriesProfile {
        SeriesProfile::from_integers(SeriesKind::R, c).unwrap()
    }
    fn p(c: &[i64]) -> SeriesProfile {
        SeriesProfile::from_integers(SeriesKind::P, c).unwrap()
    }
    fn s(c: &[i64]) -> SeriesProfile {
        SeriesProfile::from_integers(SeriesKind::S, c).unwrap()
    }
    fn d(c: &[i64]) -> SeriesProfile {
        SeriesProfile::from_integers(SeriesKind::D, c).unwrap()
    }
    fn ints(x: &SeriesProfile) -> Vec<i128> {
        x.to_i128().expect("integral")
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            ints(&series_invert(&r(&[0, 0, 0]), 3).unwrap()),
            vec![0, 0, 0]
        );
        assert_eq!(
            ints(&series_invert(&r(&[1, 0, 0, 0]), 4).unwrap()),
            vec![-1, 1, -1, 1]
        );
        assert_eq!(
            ints(&series_invert(&r(&[1, 1, 1, 1]), 4).unwrap()),
            vec![-1, 0, 0, 0]
        );
        assert_eq!(series_invert(&r(&[1, 1, 1, 1]), 2).unwrap().order(), 2);
    }

    #[test]
    fn p_from_r_examples() {
        assert_eq!(
            ints(&p_from_r(&r(&[1, 1, 1, 1, 1])).unwrap()),
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(ints(&p_from_r(&r(&[1, 2, 5])).unwrap()), vec![1, 1, 2]);
        assert_eq!(ints(&p_from_r(&r(&[2, 8])).unwrap()), vec![2, 4]);
    }

    #[test]
    fn r_from_p_examples() {
        assert_eq!(
            ints(&r_from_p(&p(&[1, 0, 0, 0])).unwrap()),
            vec![1, 1, 1, 1]
        );
        assert_eq!(ints(&r_from_p(&p(&[1, 1, 2])).unwrap()), vec![1, 2, 5]);
        assert_eq!(ints(&r_from_p(&p(&[0, 0, 0])).unwrap()), vec![0, 0, 0]);
    }

    #[test]
    fn s_from_p_examples() {
        assert_eq!(ints(&s_from_p(&p(&[1, 0, 0])).unwrap()), vec![1, 0, 0]);
        assert_eq!(ints(&s_from_p(&p(&[1, 1, 2])).unwrap()), vec![1, 1, 1]);
        assert_eq!(ints(&s_from_p(&p(&[2, 1])).unwrap()), vec![2, 0]);
    }

    #[test]
    fn s_from_p_rejects_rational_exponents() {
        let half = Rational::new(1.into(), 2.into());
        let input = SeriesProfile::new(SeriesKind::P, vec![Rational::one(), half.clone()]).unwrap();
        assert_eq!(
            s_from_p(&input),
            Err(SeriesError::NonIntegerExponent {
                index: 2,
                value: half
            })
        );
    }

    #[test]
    fn p_from_s_examples() {
        let out = p_from_s(&s(&[1, 0, 0, 0, 0])).unwrap();
        assert!(out.is_integral());
        assert_eq!(ints(&out.series), vec![1, 0, 0, 0, 0]);
        assert_eq!(
            ints(&p_from_s(&s(&[1, 1, 1])).unwrap().series),
            vec![1, 1, 2]
        );
        // Two generators in degree 1: the free Lie algebra on two letters.
        assert_eq!(
            ints(&p_from_s(&s(&[2, 0, 0, 0, 0, 0])).unwrap().series),
            vec![2, 1, 2, 3, 6, 9]
        );
    }

    #[test]
    fn p_from_s_flags_rational_results() {
        let half = Rational::new(1.into(), 2.into());
        let input = SeriesProfile::new(SeriesKind::S, vec![half, Rational::zero()]).unwrap();
        let out = p_from_s(&input).unwrap();
        assert_eq!(out.non_integer_at, Some(1));
        // p_2 = s_2 + s_1²/2 − s_1/2 = 1/8 − 1/4
        assert_eq!(out.series.coeff(2), &Rational::new((-1).into(), 8.into()));
    }

    #[test]
    fn s_and_r_composites() {
        assert_eq!(
            ints(&s_from_r(&r(&[1, 2, 5, 14, 42, 132, 429, 1430])).unwrap()),
            vec![1, 1, 1, 3, 7, 24, 72, 242]
        );
        assert_eq!(
            ints(&r_from_s(&s(&[1, 1, 0])).unwrap().series),
            vec![1, 2, 4]
        );
        assert_eq!(ints(&s_from_r(&r(&[1, 1])).unwrap()), vec![1, 0]);
    }

    #[test]
    fn d_from_r_examples() {
        assert_eq!(
            ints(&d_from_r(&r(&[1, 2, 5, 14, 42])).unwrap()),
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(
            ints(&d_from_r(&r(&[1, 2, 6, 24, 120, 720, 5040, 40320])).unwrap()),
            vec![1, 0, 1, 6, 39, 284, 2305, 20682]
        );
        assert_eq!(
            d_from_r(&r(&[1, 2, 4])).unwrap().coeff(3),
            &Rational::from_integer((-1).into())
        );
    }

    #[test]
    fn r_from_d_examples() {
        assert_eq!(
            ints(&r_from_d(&d(&[1, 0, 0, 0, 0, 0])).unwrap()),
            vec![1, 2, 5, 14, 42, 132]
        );
        assert_eq!(ints(&r_from_d(&d(&[0, 0, 0])).unwrap()), vec![0, 0, 0]);
        assert_eq!(ints(&r_from_d(&d(&[2, 0, 0])).unwrap()), vec![2, 8, 40]);
    }

    #[test]
    fn kind_is_checked() {
        assert!(matches!(
            p_from_r(&s(&[1, 2])),
            Err(SeriesError::KindMismatch {
                expected: SeriesKind::R,
                found: SeriesKind::S
            })
        ));
    }

    #[test]
    fn mobius_small_values() {
        let got: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn convert_dispatch() {
        let cat = r(&[1, 2, 5, 14]);
        assert_eq!(convert(&cat, SeriesKind::R).unwrap().series, cat);
        assert_eq!(
            ints(&convert(&cat, SeriesKind::D).unwrap().series),
            vec![1, 0, 0, 0]
        );
        assert_eq!(
            ints(&convert(&d(&[1, 0, 0, 0]), SeriesKind::S).unwrap().series),
            vec![1, 1, 1, 3]
        );
        assert_eq!(
            ints(&convert(&s(&[1, 1, 1, 3]), SeriesKind::D).unwrap().series),
            vec![1, 0, 0, 0]
        );
        assert_eq!(
            ints(&convert(&p(&[1, 1, 2]), SeriesKind::S).unwrap().series),
            vec![1, 1, 1]
        );
        assert_eq!(
            ints(&convert(&s(&[1, 1, 1]), SeriesKind::P).unwrap().series),
            vec![1, 1, 2]
        );
    }
}
