//! Seeded random [`ProductSpec`]s for cross-checking the expansion engine.

use super::report::VerificationReport;
use crate::error::Error;
use crate::series::{expand, oracle_expand, Factor, ProductSpec};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Bounds for [`random_spec`].
#[derive(Debug, Clone, Copy)]
pub struct CorpusBounds {
    pub max_modulus: u64,
    pub max_abs_exponent: i64,
    pub max_factors: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds { max_modulus: 8, max_abs_exponent: 5, max_factors: 4 }
    }
}

pub fn random_spec<R: Rng>(rng: &mut R, bounds: CorpusBounds) -> ProductSpec {
    loop {
        let count = rng.gen_range(1..=bounds.max_factors);
        let factors: Vec<Factor> = (0..count)
            .map(|_| {
                let m = rng.gen_range(1..=bounds.max_modulus);
                let i = rng.gen_range(0..m);
                let mut c = rng.gen_range(1..=bounds.max_abs_exponent);
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                Factor::progression(m, i, c).expect("generated in range")
            })
            .collect();
        let spec = ProductSpec::new(factors).expect("nonempty");
        if !spec.factors().is_empty() {
            return spec;
        }
    }
}

/// `count` specs from a ChaCha stream seeded with `seed`.
pub fn random_corpus(seed: u64, count: usize, bounds: CorpusBounds) -> Vec<ProductSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_spec(&mut rng, bounds)).collect()
}

/// Compares [`expand`] with [`oracle_expand`] on every spec. Inputs are
/// corpus indices. A mismatch records the first differing coefficient; a
/// divisibility violation records the offending numerator against its divisor.
pub fn verify_oracle_equivalence(specs: &[ProductSpec], order: usize) -> VerificationReport {
    let outcomes: Vec<Option<(BigInt, BigInt)>> = specs
        .par_iter()
        .map(|spec| match expand(spec, order) {
            Ok(fast) => {
                let slow = oracle_expand(spec, order);
                fast.coeffs()
                    .iter()
                    .zip(slow.coeffs())
                    .find(|(a, b)| a != b)
                    .map(|(a, b)| (a.clone(), b.clone()))
            }
            Err(Error::DivisibilityViolation { numerator, divisor, .. }) => {
                Some((numerator, BigInt::from(divisor)))
            }
            Err(other) => panic!("unexpected expansion error: {other}"),
        })
        .collect();
    let mut report = VerificationReport::new("oracle-equivalence");
    for (idx, outcome) in outcomes.into_iter().enumerate() {
        report.inputs_checked.push(idx as u64);
        if let Some((lhs, rhs)) = outcome {
            report.fail(idx as u64, lhs, rhs);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = random_corpus(7, 50, CorpusBounds::default());
        let b = random_corpus(7, 50, CorpusBounds::default());
        assert_eq!(a, b);
        for spec in &a {
            assert!(!spec.factors().is_empty() && spec.factors().len() <= 4);
            for f in spec.factors() {
                assert!(f.set.modulus() <= 8);
                // merged duplicates may exceed the per-draw bound
                assert!(f.exponent != 0 && f.exponent.abs() <= 20);
            }
        }
    }

    #[test]
    fn small_corpus_agrees() {
        let specs = random_corpus(1, 40, CorpusBounds::default());
        assert!(verify_oracle_equivalence(&specs, 60).passed());
    }
}
