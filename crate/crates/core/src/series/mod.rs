//! Truncated power series with exact integer coefficients, and the expansion
//! engine for products of `(1 - x^n)^c` over arithmetic progressions.

mod expand;
mod product;

pub use expand::{expand, oracle_expand, weighted_divisor_sum, weights};
pub use product::{Factor, FactorSet, ProductSpec};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Coefficients `0..=N` of a formal power series.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// # Panics
    ///
    /// Panics on an empty coefficient list; a truncation order needs at
    /// least the constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The series `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        PowerSeries { coeffs }
    }

    /// Truncation order `N`; the series holds `N + 1` coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn multiply(&self, other: &PowerSeries) -> PowerSeries {
        multiply(self, other)
    }

    /// `self^k` by repeated multiplication; `k = 0` gives `1`.
    pub fn pow(&self, k: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        for _ in 0..k {
            acc = multiply(&acc, self);
        }
        acc
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `c[n] = sum_{j=0}^{n} a[j] b[n-j]`, truncated at `min(order(a), order(b))`.
pub fn multiply(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let order = a.order().min(b.order());
    let mut out = vec![BigInt::zero(); order + 1];
    for (j, aj) in a.coeffs[..=order].iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        for (k, bk) in b.coeffs[..=order - j].iter().enumerate() {
            if !bk.is_zero() {
                out[j + k] += aj * bk;
            }
        }
    }
    PowerSeries { coeffs: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_examples() {
        let s = PowerSeries::from_i64s;
        assert_eq!(multiply(&s(&[1, 1]), &s(&[1, -1])), s(&[1, 0]));
        assert_eq!(multiply(&s(&[1, 2, 2]), &s(&[1, 0, 0])), s(&[1, 2, 2]));
        assert_eq!(multiply(&s(&[1, 1, 1]), &s(&[1, 1, 1])), s(&[1, 2, 3]));
    }

    #[test]
    fn multiply_truncates_to_shorter() {
        let a = PowerSeries::from_i64s(&[1, 1, 1, 1]);
        let b = PowerSeries::from_i64s(&[1, 1]);
        assert_eq!(multiply(&a, &b).order(), 1);
        assert_eq!(multiply(&b, &a), PowerSeries::from_i64s(&[1, 2]));
    }

    #[test]
    fn pow_zero_is_one() {
        let a = PowerSeries::from_i64s(&[1, 3, 5]);
        assert_eq!(a.pow(0), PowerSeries::one(2));
        assert_eq!(a.pow(2), PowerSeries::from_i64s(&[1, 6, 19]));
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(PowerSeries::from_i64s(&[1, -1, 0]).to_string(), "1,-1,0");
    }
}
