//! Coefficient positivity for the residue-class product family and for the
//! `(1+x^n)^4 (1+x^{2n})^2 (1+x^{4n})^4` product.

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::series::{expand, Factor, FactorSet, ProductSpec};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;

/// How many copies of `(1 - x^n)^{-a}` the family carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    /// One base factor per offset: `(1 - x^n)^{-a|I|}`.
    DoubleProduct,
    /// A single base factor `(1 - x^n)^{-a}`.
    SingleBase,
}

impl Reading {
    pub const ALL: [Reading; 2] = [Reading::DoubleProduct, Reading::SingleBase];
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::DoubleProduct => "double-product",
            Reading::SingleBase => "single-base",
        })
    }
}

impl std::str::FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "double-product" => Ok(Reading::DoubleProduct),
            "single-base" => Ok(Reading::SingleBase),
            other => Err(Error::InvalidArgument(format!("unknown reading {other:?}"))),
        }
    }
}

/// Parameters of `prod_n prod_{i in I} (1 - x^n)^{-a} (1 - x^{bn-i})^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MasterFamilyParams {
    a: u32,
    b: u64,
    offsets: BTreeSet<u64>,
    reading: Reading,
}

impl MasterFamilyParams {
    /// Requires `a >= 1`, `b >= 2` and a nonempty `offsets` inside `0..=b-2`.
    pub fn new(
        a: u32,
        b: u64,
        offsets: impl IntoIterator<Item = u64>,
        reading: Reading,
    ) -> Result<Self> {
        let offsets: BTreeSet<u64> = offsets.into_iter().collect();
        if a == 0 {
            return Err(Error::InvalidArgument("a must be >= 1".into()));
        }
        if b < 2 {
            return Err(Error::InvalidArgument("b must be >= 2".into()));
        }
        if offsets.is_empty() {
            return Err(Error::InvalidArgument("offset set must be nonempty".into()));
        }
        if let Some(&i) = offsets.iter().find(|&&i| i + 2 > b) {
            return Err(Error::InvalidArgument(format!("offset {i} exceeds b-2 = {}", b - 2)));
        }
        Ok(MasterFamilyParams { a, b, offsets, reading })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn offsets(&self) -> &BTreeSet<u64> {
        &self.offsets
    }

    pub fn reading(&self) -> Reading {
        self.reading
    }
}

impl fmt::Display for MasterFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let offsets: Vec<String> = self.offsets.iter().map(u64::to_string).collect();
        write!(f, "a={} b={} I={{{}}} {}", self.a, self.b, offsets.join(","), self.reading)
    }
}

/// The [`ProductSpec`] of a family member.
pub fn master_family_spec(params: &MasterFamilyParams) -> ProductSpec {
    let a = i64::from(params.a);
    let copies = match params.reading {
        Reading::DoubleProduct => params.offsets.len() as i64,
        Reading::SingleBase => 1,
    };
    let mut factors = vec![Factor { set: FactorSet::naturals(), exponent: -a * copies }];
    for &i in &params.offsets {
        let set = FactorSet::new(params.b, i).expect("offset validated against b");
        factors.push(Factor { set, exponent: a });
    }
    ProductSpec::new(factors).expect("nonempty factor list")
}

/// Every family member with `a` and `b` drawn from the given ranges, all
/// nonempty offset sets and both readings.
pub fn master_family_sweep(
    a_values: impl IntoIterator<Item = u32> + Clone,
    b_values: impl IntoIterator<Item = u64>,
) -> Vec<MasterFamilyParams> {
    let mut out = Vec::new();
    for b in b_values {
        let width = (b - 1) as u32; // offsets 0..=b-2
        for mask in 1u64..(1 << width) {
            let offsets: Vec<u64> = (0..u64::from(width)).filter(|i| mask >> i & 1 == 1).collect();
            for a in a_values.clone() {
                for reading in Reading::ALL {
                    out.push(
                        MasterFamilyParams::new(a, b, offsets.iter().copied(), reading)
                            .expect("sweep only builds valid parameters"),
                    );
                }
            }
        }
    }
    out
}

/// `(1-x^n)^{-4} (1-x^{2n})^2 (1-x^{4n})^{-2} (1-x^{8n})^4`, which equals
/// `prod (1+x^n)^4 (1+x^{2n})^2 (1+x^{4n})^4`.
pub fn series1_spec() -> ProductSpec {
    "1n^-4,2n^2,4n^-2,8n^4".parse().expect("fixed spec parses")
}

/// Expands `spec` to `order` and records every index whose coefficient is
/// not strictly positive (failure `lhs` is the coefficient, `rhs` the bound 0).
pub fn verify_positivity(
    name: &str,
    spec: &ProductSpec,
    order: usize,
) -> Result<VerificationReport> {
    let series = expand(spec, order)?;
    let mut report = VerificationReport::new(name);
    for (n, c) in series.coeffs().iter().enumerate() {
        report.inputs_checked.push(n as u64);
        if *c <= num_bigint::BigInt::zero() {
            report.fail(n as u64, c.clone(), num_bigint::BigInt::zero());
        }
    }
    Ok(report)
}

pub fn verify_series1_positivity(order: usize) -> Result<VerificationReport> {
    verify_positivity("series1-positivity", &series1_spec(), order)
}

/// Positivity for each family member, in input order.
pub fn verify_master_family(
    params: &[MasterFamilyParams],
    order: usize,
) -> Result<Vec<(MasterFamilyParams, VerificationReport)>> {
    params
        .par_iter()
        .map(|p| {
            let report = verify_positivity("master-positivity", &master_family_spec(p), order)?;
            Ok((p.clone(), report))
        })
        .collect()
}

/// The lower bound used in the positivity argument: the weight
/// `a|I| sigma(n) - a sum_{i in I} sigma_{-i mod b, b}(n)` of a
/// double-product member, alongside `a sigma_{1,b}(n)`.
pub fn master_weight_and_bound(params: &MasterFamilyParams, n: u64) -> (i64, i64) {
    use crate::divisor_sums::{sigma, sigma_class};
    let a = i64::from(params.a);
    let copies = match params.reading {
        Reading::DoubleProduct => params.offsets.len() as i64,
        Reading::SingleBase => 1,
    };
    let b = params.b;
    let removed: i64 = params
        .offsets
        .iter()
        .map(|&i| sigma_class(n, (b - i) % b, b) as i64)
        .sum();
    let weight = a * copies * sigma(n) as i64 - a * removed;
    let bound = a * sigma_class(n, 1 % b, b) as i64;
    (weight, bound)
}
