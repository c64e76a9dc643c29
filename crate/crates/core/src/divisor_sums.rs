//! Divisor-sum functions over the naturals.
//!
//! Arguments such as `n/2` or `n/8` are handled through [`ScaledArg`]: a
//! quotient that is not a natural number evaluates to zero. The two
//! conventions at zero differ on purpose: `sigma(0) = 1`, while
//! `sigma_star(0) = 0`.
//!
//! Everything here is a pure function of its inputs, so callers may wrap
//! any of them in a memo table.

/// A rational argument `numerator / divisor`, as in `sigma(n/4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledArg {
    pub numerator: u64,
    pub divisor: u64,
}

impl ScaledArg {
    /// # Panics
    ///
    /// Panics if `divisor == 0`.
    pub fn new(numerator: u64, divisor: u64) -> Self {
        assert!(divisor >= 1, "scaled argument needs divisor >= 1");
        ScaledArg { numerator, divisor }
    }

    /// The quotient if it is a natural number (including 0).
    pub fn as_natural(&self) -> Option<u64> {
        self.numerator.is_multiple_of(self.divisor).then(|| self.numerator / self.divisor)
    }
}

/// All positive divisors of `n`, unordered. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Sum of the divisors of `n`, with `sigma(0) = 1`.
pub fn sigma(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    divisors(n).into_iter().sum()
}

/// `sigma(arg)` for a rational argument: zero unless the quotient is a natural.
pub fn sigma_at(arg: ScaledArg) -> u64 {
    arg.as_natural().map_or(0, sigma)
}

/// `sigma(n/m)`, or 0 when `m` does not divide `n`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn sigma_scaled(n: u64, m: u64) -> u64 {
    sigma_at(ScaledArg::new(n, m))
}

/// Sum of the divisors of `n` congruent to `r` modulo `m`.
///
/// # Panics
///
/// Panics unless `n >= 1`, `m >= 1` and `r < m`. A residue outside
/// `0..m` is treated as a caller bug rather than reduced.
pub fn sigma_class(n: u64, r: u64, m: u64) -> u64 {
    assert!(n >= 1, "sigma_class needs n >= 1");
    assert!(m >= 1, "sigma_class needs m >= 1");
    assert!(r < m, "sigma_class residue {r} out of range for modulus {m}");
    divisors(n).into_iter().filter(|d| d % m == r).sum()
}

/// Sum of the odd divisors of `n`.
pub fn sigma_odd(n: u64) -> u64 {
    sigma_class(n, 1, 2)
}

/// Sum of the even divisors of `n`.
pub fn sigma_even(n: u64) -> u64 {
    sigma_class(n, 0, 2)
}

/// Sum of the divisors `d` of `n` whose cofactor `n/d` is odd.
/// Returns 0 for `n = 0`.
pub fn sigma_star(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    divisors(n).into_iter().filter(|d| (n / d) % 2 == 1).sum()
}

/// `sigma_star(n/m)`, or 0 when `m` does not divide `n`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn sigma_star_scaled(n: u64, m: u64) -> u64 {
    ScaledArg::new(n, m).as_natural().map_or(0, sigma_star)
}

/// `sigma(n) - 4 sigma(n/4)`; eight times this is `r_4(n)` for `n >= 1`.
pub fn sigma_minus_four_quarter(n: u64) -> i64 {
    sigma(n) as i64 - 4 * sigma_scaled(n, 4) as i64
}

/// `sigma_star(n) - 4 sigma_star(n/2)`, the kernel of the sums-of-squares recursion.
pub fn sigma_star_kernel(n: u64) -> i64 {
    sigma_star(n) as i64 - 4 * sigma_star_scaled(n, 2) as i64
}

/// `sigma(n) - 4 sigma(n/2)`, the kernel of the triangular-number recursion.
pub fn sigma_kernel(n: u64) -> i64 {
    sigma(n) as i64 - 4 * sigma_scaled(n, 2) as i64
}
