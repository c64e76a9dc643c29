//! Checkers for the convolution identity and the prime-indexed sums over
//! `r_k` and `t_k`.
//!
//! Count tables come from the convolution oracles in [`crate::counts`],
//! never from the recursions whose consequences are being checked.

use super::report::VerificationReport;
use crate::counts::{r_oracle, t_oracle, CountTable};
use crate::divisor_sums::{sigma_kernel, sigma_minus_four_quarter, sigma_star_kernel};
use crate::error::{Error, Result};
use crate::primes::{is_prime, primes_in};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

/// `sum_{j=1}^{n-1} (sigma(j) - 4 sigma(j/4)) (sigma*(n-j) - 4 sigma*((n-j)/2))`.
pub fn convolution_lhs(n: u64) -> BigInt {
    (1..n)
        .map(|j| BigInt::from(sigma_minus_four_quarter(j)) * sigma_star_kernel(n - j))
        .sum()
}

/// `n (sigma(n) - 4 sigma(n/4)) - (sigma*(n) - 4 sigma*(n/2))`.
pub fn convolution_rhs(n: u64) -> BigInt {
    BigInt::from(n) * sigma_minus_four_quarter(n) - sigma_star_kernel(n)
}

/// Checks the convolution identity exactly as it is usually printed,
/// `lhs(n) = rhs(n)` for `1 <= n <= max_n`.
///
/// This form is false from `n = 2` on (`lhs(2) = 1`, `rhs(2) = 8`): substituting
/// `r_4 = 8(sigma(n) - 4 sigma(n/4))` into the `k = 4` squares recursion gives
/// `8 lhs(n) = rhs(n)`. See [`verify_convolution_scaled`].
pub fn verify_convolution(max_n: u64) -> VerificationReport {
    convolution_report("convolution", max_n, 1)
}

/// Checks `8 lhs(n) = rhs(n)` for `1 <= n <= max_n`. This is the
/// coefficient-level form of the product of the generating series of
/// `sigma(n) - 4 sigma(n/4)` and `sigma*(n) - 4 sigma*(n/2)`.
pub fn verify_convolution_scaled(max_n: u64) -> VerificationReport {
    convolution_report("convolution-scaled", max_n, 8)
}

fn convolution_report(name: &str, max_n: u64, lhs_scale: i64) -> VerificationReport {
    let sides: Vec<(u64, BigInt, BigInt)> = (1..=max_n)
        .into_par_iter()
        .map(|n| (n, convolution_lhs(n) * lhs_scale, convolution_rhs(n)))
        .collect();
    let mut report = VerificationReport::new(name);
    for (n, lhs, rhs) in sides {
        report.check(n, lhs, rhs);
    }
    report
}

/// `sum_{j=1}^{p-1} r(j) (sigma*(p-j) - 4 sigma*((p-j)/2))` for a squares table `r`.
///
/// # Panics
///
/// Panics if the table is shorter than `p`.
pub fn squares_prime_sum(table: &CountTable, p: u64) -> BigInt {
    (1..p)
        .map(|j| &table.values[j as usize] * BigInt::from(sigma_star_kernel(p - j)))
        .sum()
}

/// `sum_{j=from}^{n-1} t(j) (sigma(n-j) - 4 sigma((n-j)/2))` for a triangular table `t`.
///
/// # Panics
///
/// Panics if the table is shorter than `n`.
pub fn triangular_sum(table: &CountTable, n: u64, from: u64) -> BigInt {
    (from..n)
        .map(|j| &table.values[j as usize] * BigInt::from(sigma_kernel(n - j)))
        .sum()
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::PreconditionNotMet("p must be an odd prime".into()));
    }
    Ok(())
}

/// Expected value of the `r_2` prime sum: `p - 1` or `-p - 1` by `p mod 4`.
fn prime_r2_target(p: u64) -> BigInt {
    if p % 4 == 1 {
        BigInt::from(p) - 1
    } else {
        -BigInt::from(p) - 1
    }
}

fn check_prime_r2(report: &mut VerificationReport, r2: &CountTable, p: u64) {
    let s_p = squares_prime_sum(r2, p);
    report.check(p, s_p.clone(), prime_r2_target(p));
    // twin pair (p, p+2): S(p+2) = -4 - S(p) if p = 1 mod 4, else -S(p)
    if is_prime(p + 2) {
        let s_twin = squares_prime_sum(r2, p + 2);
        let expected = if p % 4 == 1 { -s_p - 4 } else { -s_p };
        if s_twin != expected {
            report.fail(p, s_twin, expected);
        }
    }
}

/// The `r_2` prime sum for odd prime `p`, together with the twin-prime
/// relation when `p + 2` is also prime.
pub fn verify_prime_r2(p: u64) -> Result<VerificationReport> {
    require_odd_prime(p)?;
    let r2 = r_oracle(2, p as usize + 2)?;
    let mut report = VerificationReport::new("prime-r2");
    check_prime_r2(&mut report, &r2, p);
    Ok(report)
}

/// [`verify_prime_r2`] for every odd prime below `max`.
pub fn verify_prime_r2_below(max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("prime-r2");
    if max < 3 {
        return report;
    }
    let r2 = r_oracle(2, max as usize + 2).expect("k = 2 is valid");
    for p in primes_in(3, max) {
        check_prime_r2(&mut report, &r2, p);
    }
    report
}

fn check_prime_r4_r8(
    report: &mut VerificationReport,
    tables: (&CountTable, &CountTable, &CountTable),
    p: u64,
) {
    let (r2, r4, r8) = tables;
    let s2 = squares_prime_sum(r2, p);
    let s4 = squares_prime_sum(r4, p);
    let s8 = squares_prime_sum(r8, p);
    let p_big = BigInt::from(p);
    report.check(p, s4.clone(), p_big.pow(2) - 1);
    if s8 != p_big.pow(4) - 1 {
        report.fail(p, s8.clone(), p_big.pow(4) - 1);
    }
    let one = BigInt::from(1);
    let sq2 = (&one + &s2).pow(2);
    if sq2 != &one + &s4 {
        report.fail(p, sq2, &one + &s4);
    }
    let sq4 = (&one + &s4).pow(2);
    if sq4 != &one + &s8 {
        report.fail(p, sq4, one + s8);
    }
}

/// The `r_4` and `r_8` prime sums (`p^2 - 1`, `p^4 - 1`) and the squaring
/// relations `(1 + S_2)^2 = 1 + S_4`, `(1 + S_4)^2 = 1 + S_8`.
pub fn verify_prime_r4_r8(p: u64) -> Result<VerificationReport> {
    require_odd_prime(p)?;
    let n = p as usize;
    let (r2, r4, r8) = (r_oracle(2, n)?, r_oracle(4, n)?, r_oracle(8, n)?);
    let mut report = VerificationReport::new("prime-r4r8");
    check_prime_r4_r8(&mut report, (&r2, &r4, &r8), p);
    Ok(report)
}

/// [`verify_prime_r4_r8`] for every odd prime below `max`.
pub fn verify_prime_r4_r8_below(max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("prime-r4r8");
    if max < 3 {
        return report;
    }
    let n = max as usize;
    let tables = (
        r_oracle(2, n).expect("valid k"),
        r_oracle(4, n).expect("valid k"),
        r_oracle(8, n).expect("valid k"),
    );
    for p in primes_in(3, max) {
        check_prime_r4_r8(&mut report, (&tables.0, &tables.1, &tables.2), p);
    }
    report
}

/// Which triangular-number sum identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangularIdentity {
    /// `p` and `4p+1` prime: `sum_{j=1}^{p-1} t_2(j)(...) = -1`.
    T2Prime,
    /// `2n+1` prime: `sum_{j=0}^{n-1} t_4(j)(...) = n(n+1)/2`.
    T4,
    /// `4n+3` prime: `sum_{j=0}^{n-1} t_6(j)(...) = n(n+1)(2n+1)/6`.
    T6,
}

impl TriangularIdentity {
    pub fn name(self) -> &'static str {
        match self {
            TriangularIdentity::T2Prime => "t2-prime",
            TriangularIdentity::T4 => "t4-prime",
            TriangularIdentity::T6 => "t6-prime",
        }
    }

    fn k(self) -> u32 {
        match self {
            TriangularIdentity::T2Prime => 2,
            TriangularIdentity::T4 => 4,
            TriangularIdentity::T6 => 6,
        }
    }

    /// `Err` names the failed primality condition.
    pub fn precondition(self, n: u64) -> Result<()> {
        let fail = |what: String| Err(Error::PreconditionNotMet(what));
        match self {
            TriangularIdentity::T2Prime if !is_prime(n) => fail(format!("p = {n} is not prime")),
            TriangularIdentity::T2Prime if !is_prime(4 * n + 1) => {
                fail(format!("4p+1 = {} is not prime", 4 * n + 1))
            }
            TriangularIdentity::T4 if !is_prime(2 * n + 1) => {
                fail(format!("2n+1 = {} is not prime", 2 * n + 1))
            }
            TriangularIdentity::T6 if !is_prime(4 * n + 3) => {
                fail(format!("4n+3 = {} is not prime", 4 * n + 3))
            }
            _ => Ok(()),
        }
    }

    fn target(self, n: u64) -> BigInt {
        let n = BigInt::from(n);
        match self {
            TriangularIdentity::T2Prime => BigInt::from(-1),
            TriangularIdentity::T4 => &n * (&n + 1) / 2,
            TriangularIdentity::T6 => &n * (&n + 1) * (2 * &n + 1) / 6,
        }
    }

    fn sum_start(self) -> u64 {
        match self {
            TriangularIdentity::T2Prime => 1,
            _ => 0,
        }
    }

    /// Checks the identity at one input, rejecting inputs that fail the
    /// primality precondition.
    pub fn verify(self, n: u64) -> Result<VerificationReport> {
        self.precondition(n)?;
        let table = t_oracle(self.k(), n as usize)?;
        let mut report = VerificationReport::new(self.name());
        report.check(n, triangular_sum(&table, n, self.sum_start()), self.target(n));
        Ok(report)
    }

    /// Checks every input below `max` that meets the precondition.
    pub fn verify_below(self, max: u64) -> VerificationReport {
        let mut report = VerificationReport::new(self.name());
        let table = t_oracle(self.k(), max as usize).expect("valid k");
        for n in (0..max).filter(|&n| self.precondition(n).is_ok()) {
            report.check(n, triangular_sum(&table, n, self.sum_start()), self.target(n));
        }
        report
    }
}

pub fn verify_t2_prime(p: u64) -> Result<VerificationReport> {
    TriangularIdentity::T2Prime.verify(p)
}

pub fn verify_t4(n: u64) -> Result<VerificationReport> {
    TriangularIdentity::T4.verify(n)
}

pub fn verify_t6(n: u64) -> Result<VerificationReport> {
    TriangularIdentity::T6.verify(n)
}

/// `4 sigma(n) - 4 sigma(n/2) + 8 sigma(n/4) - 32 sigma(n/8)`.
pub fn r_combination(n: u64) -> i64 {
    use crate::divisor_sums::{sigma, sigma_scaled};
    4 * sigma(n) as i64 - 4 * sigma_scaled(n, 2) as i64 + 8 * sigma_scaled(n, 4) as i64
        - 32 * sigma_scaled(n, 8) as i64
}

/// Checks `r_combination(n) > 0` for `1 <= n <= max_n`. A failure records
/// the value as `lhs` against the bound `0` as `rhs`.
pub fn verify_r_positive(max_n: u64) -> VerificationReport {
    let bad: Vec<(u64, i64)> = (1..=max_n)
        .into_par_iter()
        .map(|n| (n, r_combination(n)))
        .filter(|&(_, v)| v <= 0)
        .collect();
    let mut report = VerificationReport::new("R-positive");
    report.inputs_checked = (1..=max_n).collect();
    for (n, v) in bad {
        report.fail(n, BigInt::from(v), BigInt::zero());
    }
    report
}
