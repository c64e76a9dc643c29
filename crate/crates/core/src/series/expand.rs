use super::{PowerSeries, ProductSpec};
use crate::divisor_sums::divisors;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `sum over factors of (-c) * (sum of the divisors of k lying in the factor's set)`.
///
/// This is the per-index weight of the logarithmic-derivative recursion for
/// a product whose factor exponents are `c`.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn weighted_divisor_sum(k: u64, spec: &ProductSpec) -> BigInt {
    assert!(k >= 1, "weighted divisor sum needs k >= 1");
    let divs = divisors(k);
    spec.factors()
        .iter()
        .map(|f| {
            let in_set: u64 = divs.iter().filter(|&&d| f.set.contains(d)).sum();
            BigInt::from(-f.exponent) * in_set
        })
        .sum()
}

/// Weights for `k = 0..=order`, with `w[0] = 0`, computed by sieving each
/// progression over its multiples.
pub fn weights(spec: &ProductSpec, order: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); order + 1];
    for f in spec.factors() {
        let scale = BigInt::from(-f.exponent);
        for e in f.set.elements_up_to(order as u64) {
            let term = &scale * e;
            for k in (e as usize..=order).step_by(e as usize) {
                w[k] += &term;
            }
        }
    }
    w
}

/// Expands `spec` to order `order` through
/// `n p(n) = sum_{k=1}^{n} p(n-k) w(k)`, `p(0) = 1`.
///
/// Every division by `n` is checked; a nonzero remainder is reported as
/// [`Error::DivisibilityViolation`].
pub fn expand(spec: &ProductSpec, order: usize) -> Result<PowerSeries> {
    let w = weights(spec, order);
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(order + 1);
    coeffs.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            let (wk, prev) = (&w[k], &coeffs[n - k]);
            if !wk.is_zero() && !prev.is_zero() {
                acc += wk * prev;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::DivisibilityViolation {
                index: n as u64,
                numerator: acc,
                divisor: n as u64,
            });
        }
        coeffs.push(q);
    }
    Ok(PowerSeries::new(coeffs))
}

/// Expands `spec` by direct multiplication: each `(1 - x^e)` is applied as
/// a polynomial and each `(1 - x^e)^{-1}` as a geometric series, once per
/// unit of exponent, for every progression element `e <= order`.
pub fn oracle_expand(spec: &ProductSpec, order: usize) -> PowerSeries {
    let mut a = vec![BigInt::zero(); order + 1];
    a[0] = BigInt::one();
    for f in spec.factors() {
        for e in f.set.elements_up_to(order as u64) {
            let e = e as usize;
            for _ in 0..f.exponent.unsigned_abs() {
                if f.exponent > 0 {
                    for n in (e..=order).rev() {
                        let (lo, hi) = a.split_at_mut(n);
                        hi[0] -= &lo[n - e];
                    }
                } else {
                    for n in e..=order {
                        let (lo, hi) = a.split_at_mut(n);
                        hi[0] += &lo[n - e];
                    }
                }
            }
        }
    }
    PowerSeries::new(a)
}
