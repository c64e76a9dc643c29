use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the expansion engine, the count recursions and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An accumulated sum was not divisible by its index. Integer-exponent
    /// products always have integer coefficients, so this means a bug.
    #[error("coefficient {index}: accumulated sum {numerator} is not divisible by {divisor}")]
    DivisibilityViolation {
        index: u64,
        numerator: BigInt,
        divisor: u64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("invalid factor set: modulus {modulus}, offset {offset} (need modulus >= 1 and 0 <= offset < modulus)")]
    InvalidFactorSet { modulus: u64, offset: u64 },

    #[error("product spec has no factors")]
    EmptySpec,

    #[error("cannot parse product spec: {0}")]
    Parse(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
