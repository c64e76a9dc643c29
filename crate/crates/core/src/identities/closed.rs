//! Classical closed forms for `r_2, r_4, r_8` and `t_2, t_4, t_6`.

use crate::divisor_sums::{divisors, sigma, sigma_scaled};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// The character `(-4/d)`: 1 for `d = 1 mod 4`, -1 for `d = 3 mod 4`, 0 for even `d`.
pub fn kronecker_minus4(d: u64) -> i64 {
    match d % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// `4 sum_{d | n} (-4/d)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn r2_closed(n: u64) -> BigInt {
    assert!(n >= 1, "r2_closed needs n >= 1");
    BigInt::from(4 * divisors(n).into_iter().map(kronecker_minus4).sum::<i64>())
}

/// `8 sigma(n) - 32 sigma(n/4)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn r4_closed(n: u64) -> BigInt {
    assert!(n >= 1, "r4_closed needs n >= 1");
    BigInt::from(8) * sigma(n) - BigInt::from(32) * sigma_scaled(n, 4)
}

/// `16 (-1)^n sum_{d | n} (-1)^d d^3`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn r8_closed(n: u64) -> BigInt {
    assert!(n >= 1, "r8_closed needs n >= 1");
    let inner: BigInt = divisors(n)
        .into_iter()
        .map(|d| {
            let cube = BigInt::from(d).pow(3);
            if d % 2 == 0 {
                cube
            } else {
                -cube
            }
        })
        .sum();
    let signed = if n.is_multiple_of(2) { inner } else { -inner };
    signed * 16
}

/// `sum_{d | 4n+1} (-4/d)`.
pub fn t2_closed(n: u64) -> BigInt {
    BigInt::from(divisors(4 * n + 1).into_iter().map(kronecker_minus4).sum::<i64>())
}

/// `sigma(2n+1)`.
pub fn t4_closed(n: u64) -> BigInt {
    BigInt::from(sigma(2 * n + 1))
}

/// `-(1/8) sum_{d | 4n+3} (-4/d) d^2`, with the division by 8 checked.
pub fn t6_closed(n: u64) -> Result<BigInt> {
    let q = 4 * n + 3;
    let sum: BigInt = divisors(q)
        .into_iter()
        .map(|d| BigInt::from(kronecker_minus4(d)) * BigInt::from(d).pow(2))
        .sum();
    let (quot, rem) = sum.div_rem(&BigInt::from(8));
    if !rem.is_zero() {
        return Err(Error::DivisibilityViolation { index: n, numerator: sum, divisor: 8 });
    }
    Ok(-quot)
}
