//! Representation counts `r_k(n)`, `t_k(n)` and `u_{k,l}(n)`.
//!
//! Each table is available two ways. The `*_table` functions run the
//! divisor-sum recursions; the `*_oracle` functions raise the one-variable
//! base tables to the required power by truncated convolution. The two
//! routes share nothing beyond [`PowerSeries::multiply`] on the oracle side
//! and the divisor sums on the recursive side.

use crate::divisor_sums::{sigma, sigma_kernel, sigma_scaled, sigma_star_kernel};
use crate::error::{Error, Result};
use crate::series::PowerSeries;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Which count a [`CountTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CountKind {
    /// `r_k`: ordered representations as `k` squares of integers.
    Squares { k: u32 },
    /// `t_k`: ordered representations as `k` triangular numbers.
    Triangular { k: u32 },
    /// `u_{k,l}`: `k` squares plus `l` triangular numbers.
    Mixed { k: u32, l: u32 },
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountKind::Squares { k } => write!(f, "r_{k}"),
            CountKind::Triangular { k } => write!(f, "t_{k}"),
            CountKind::Mixed { k, l } => write!(f, "u_{{{k},{l}}}"),
        }
    }
}

/// Values `g(0..=N)` of a representation count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: CountKind,
    pub values: Vec<BigInt>,
}

impl CountTable {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }

    pub fn as_series(&self) -> PowerSeries {
        PowerSeries::new(self.values.clone())
    }
}

fn require_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::PreconditionNotMet(format!("{name} must be >= 1")));
    }
    Ok(())
}

/// Solves `n g(n) = sum_{j=0}^{n-1} g(j) kernel(n-j)` with `g(0) = 1`.
fn run_recursion(order: usize, kernel: impl Fn(u64) -> BigInt) -> Result<Vec<BigInt>> {
    let kern: Vec<BigInt> = (0..=order as u64)
        .map(|m| if m == 0 { BigInt::zero() } else { kernel(m) })
        .collect();
    let mut g = Vec::with_capacity(order + 1);
    g.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for j in 0..n {
            if !g[j].is_zero() && !kern[n - j].is_zero() {
                acc += &g[j] * &kern[n - j];
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
        g.push(q);
    }
    Ok(g)
}

/// `r_k(0..=order)` from
/// `n r_k(n) = 2k (h(n) + sum_{j=1}^{n-1} r_k(j) h(n-j))`,
/// `h(m) = sigma_star(m) - 4 sigma_star(m/2)`.
pub fn r_table(k: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    let scale = 2 * i64::from(k);
    let values = run_recursion(order, |m| BigInt::from(scale * sigma_star_kernel(m)))?;
    Ok(CountTable { kind: CountKind::Squares { k }, values })
}

/// `t_k(0..=order)` from `n t_k(n) = k sum_{j=0}^{n-1} t_k(j) (sigma(n-j) - 4 sigma((n-j)/2))`.
pub fn t_table(k: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    let scale = i64::from(k);
    let values = run_recursion(order, |m| BigInt::from(scale * sigma_kernel(m)))?;
    Ok(CountTable { kind: CountKind::Triangular { k }, values })
}

/// The mixed kernel `(2k+l) sigma(m) - 2(5k+2l) sigma(m/2) + 8k sigma(m/4)`.
pub fn mixed_kernel(k: u32, l: u32, m: u64) -> i64 {
    let (k, l) = (i64::from(k), i64::from(l));
    (2 * k + l) * sigma(m) as i64 - 2 * (5 * k + 2 * l) * sigma_scaled(m, 2) as i64
        + 8 * k * sigma_scaled(m, 4) as i64
}

/// `u_{k,l}(0..=order)` from `n u(n) = G(n) + sum_{j=1}^{n-1} u(j) G(n-j)`
/// with `G` the [`mixed_kernel`].
pub fn u_table(k: u32, l: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    require_positive("l", l)?;
    let values = run_recursion(order, |m| BigInt::from(mixed_kernel(k, l, m)))?;
    Ok(CountTable { kind: CountKind::Mixed { k, l }, values })
}

/// `r_1`: 1 at 0, 2 at every positive square, 0 elsewhere.
pub fn square_base(order: usize) -> PowerSeries {
    let mut v = vec![BigInt::zero(); order + 1];
    v[0] = BigInt::one();
    let mut a = 1usize;
    while a * a <= order {
        v[a * a] = BigInt::from(2);
        a += 1;
    }
    PowerSeries::new(v)
}

/// `t_1`: the indicator of the triangular numbers `x(x+1)/2`, `x >= 0`.
pub fn triangular_base(order: usize) -> PowerSeries {
    let mut v = vec![BigInt::zero(); order + 1];
    let mut x = 0usize;
    while x * (x + 1) / 2 <= order {
        v[x * (x + 1) / 2] = BigInt::one();
        x += 1;
    }
    PowerSeries::new(v)
}

pub fn r_oracle(k: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    let values = square_base(order).pow(k).into_coeffs();
    Ok(CountTable { kind: CountKind::Squares { k }, values })
}

pub fn t_oracle(k: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    let values = triangular_base(order).pow(k).into_coeffs();
    Ok(CountTable { kind: CountKind::Triangular { k }, values })
}

pub fn u_oracle(k: u32, l: u32, order: usize) -> Result<CountTable> {
    require_positive("k", k)?;
    require_positive("l", l)?;
    let squares = r_oracle(k, order)?.as_series();
    let triangles = t_oracle(l, order)?.as_series();
    let values = squares.multiply(&triangles).into_coeffs();
    Ok(CountTable { kind: CountKind::Mixed { k, l }, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor_sums::{sigma_class, sigma_even, sigma_odd};

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    // direct enumeration of (x1, x2) in Z^2 with x1^2 + x2^2 = n
    fn lattice_r2(order: usize) -> Vec<BigInt> {
        let r = (order as f64).sqrt() as i64 + 1;
        let mut out = vec![0i64; order + 1];
        for a in -r..=r {
            for b in -r..=r {
                let n = (a * a + b * b) as usize;
                if n <= order {
                    out[n] += 1;
                }
            }
        }
        ints(&out)
    }

    fn mixed_brute(k: usize, l: usize, order: usize) -> Vec<BigInt> {
        let r = (order as f64).sqrt() as i64 + 1;
        let squares: Vec<i64> = (-r..=r).map(|a| a * a).collect();
        let tris: Vec<i64> = (0..=2 * r).map(|y| y * (y + 1) / 2).collect();
        let mut dist = vec![0i64; order + 1];
        dist[0] = 1;
        let step = |parts: &[i64], dist: &mut Vec<i64>| {
            let mut next = vec![0i64; order + 1];
            for (n, &c) in dist.iter().enumerate() {
                for &p in parts {
                    let m = n + p as usize;
                    if m <= order {
                        next[m] += c;
                    }
                }
            }
            *dist = next;
        };
        for _ in 0..k {
            step(&squares, &mut dist);
        }
        for _ in 0..l {
            step(&tris, &mut dist);
        }
        ints(&dist)
    }

    #[test]
    fn r_table_examples() {
        assert_eq!(r_table(2, 5).unwrap().values, ints(&[1, 4, 4, 0, 4, 8]));
        assert_eq!(r_table(4, 3).unwrap().values[3], BigInt::from(32));
        assert_eq!(r_table(8, 3).unwrap().values[3], BigInt::from(448));
        for k in 1..=5 {
            assert_eq!(r_table(k, 0).unwrap().values, ints(&[1]));
        }
        assert!(r_table(0, 5).is_err());
    }

    #[test]
    fn t_table_examples() {
        // t_2(4) = 2 from 1+3 and 3+1
        assert_eq!(t_table(2, 4).unwrap().values, ints(&[1, 2, 1, 2, 2]));
        assert_eq!(t_table(4, 3).unwrap().values[3], BigInt::from(8));
        assert_eq!(t_table(1, 10).unwrap().values, ints(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn u_table_examples() {
        // u_{1,1}(2): only (+-1)^2 + 1
        assert_eq!(u_table(1, 1, 2).unwrap().values, ints(&[1, 3, 2]));
        assert_eq!(u_table(2, 1, 1).unwrap().values[1], BigInt::from(5));
        assert_eq!(u_table(3, 2, 0).unwrap().values, ints(&[1]));
        assert!(u_table(1, 0, 3).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(r_oracle(2, 5).unwrap().values, ints(&[1, 4, 4, 0, 4, 8]));
        assert_eq!(r_oracle(2, 200).unwrap().values, lattice_r2(200));
        assert_eq!(t_oracle(1, 10).unwrap().values, triangular_base(10).into_coeffs());
        assert_eq!(u_oracle(1, 1, 2).unwrap().values, ints(&[1, 3, 2]));
    }

    #[test]
    fn oracles_match_direct_enumeration() {
        for (k, l) in [(1, 1), (2, 1), (1, 2), (3, 0), (0, 3), (2, 2)] {
            let want = mixed_brute(k, l, 60);
            let got = match (k, l) {
                (k, 0) => r_oracle(k as u32, 60).unwrap().values,
                (0, l) => t_oracle(l as u32, 60).unwrap().values,
                (k, l) => u_oracle(k as u32, l as u32, 60).unwrap().values,
            };
            assert_eq!(got, want, "k={k} l={l}");
        }
    }

    #[test]
    fn recursion_matches_oracles_small() {
        for k in 1..=4 {
            assert_eq!(r_table(k, 80).unwrap(), r_oracle(k, 80).unwrap());
            assert_eq!(t_table(k, 80).unwrap(), t_oracle(k, 80).unwrap());
        }
        assert_eq!(u_table(2, 3, 80).unwrap(), u_oracle(2, 3, 80).unwrap());
    }

    #[test]
    fn square_counts_are_even() {
        for k in 1..=6 {
            let t = r_table(k, 150).unwrap();
            for v in &t.values[1..] {
                assert!(v.is_even() && *v >= BigInt::zero());
            }
        }
    }

    #[test]
    fn mixed_kernel_matches_residue_class_form() {
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                for m in 1..=1000u64 {
                    let (ki, li) = (i64::from(k), i64::from(l));
                    let lhs = -(3 * ki + li) * sigma_even(m) as i64
                        + 2 * ki * sigma_class(m, 0, 4) as i64
                        + (2 * ki + li) * sigma_odd(m) as i64;
                    assert_eq!(lhs, mixed_kernel(k, l, m), "k={k} l={l} m={m}");
                }
            }
        }
    }
}
