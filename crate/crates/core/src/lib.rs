//! Exact expansion of infinite products `prod (1 - x^n)^c` taken over
//! arithmetic progressions, representation counts for sums of squares and
//! triangular numbers, and checkers for the divisor-sum identities that
//! connect them.
//!
//! The crate is organised bottom-up:
//!
//! - [`divisor_sums`]: `sigma`, residue-class divisor sums, `sigma_star`.
//! - [`series`]: truncated integer power series, [`ProductSpec`] and the
//!   recursive expansion engine with its direct-multiplication oracle.
//! - [`counts`]: `r_k`, `t_k` and `u_{k,l}` tables by recursion and by
//!   independent convolution oracles.
//! - [`identities`]: closed forms, identity verifiers and positivity checks.
//! - [`cli`]: the `qconvolve` command line front end.
//!
//! ```
//! use qconvolve::series::{expand, ProductSpec};
//!
//! let partitions: ProductSpec = "1n^-1".parse().unwrap();
//! let p = expand(&partitions, 6).unwrap();
//! assert_eq!(p.to_string(), "1,1,2,3,5,7,11");
//! ```

pub mod cli;
pub mod counts;
pub mod divisor_sums;
mod error;
pub mod identities;
pub mod primes;
pub mod series;

pub use counts::{CountKind, CountTable};
pub use error::{Error, Result};
pub use identities::VerificationReport;
pub use series::{Factor, FactorSet, PowerSeries, ProductSpec};
