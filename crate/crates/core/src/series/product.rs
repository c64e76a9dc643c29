use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The index set `{m*n - i : n >= 1}` with `0 <= i < m`.
///
/// Elements are the naturals `d >= m - i` with `d = -i (mod m)`, so
/// `(2, 0)` is the even numbers, `(2, 1)` the odd numbers and `(4, 2)` the
/// set `4n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSet {
    modulus: u64,
    offset: u64,
}

impl FactorSet {
    pub fn new(modulus: u64, offset: u64) -> Result<Self> {
        if modulus == 0 || offset >= modulus {
            return Err(Error::InvalidFactorSet { modulus, offset });
        }
        Ok(FactorSet { modulus, offset })
    }

    /// All naturals congruent to `residue` modulo `modulus`.
    pub fn residue_class(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidArgument(format!(
                "residue {residue} out of range for modulus {modulus}"
            )));
        }
        FactorSet::new(modulus, (modulus - residue) % modulus)
    }

    /// All naturals.
    pub fn naturals() -> Self {
        FactorSet { modulus: 1, offset: 0 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// The residue `-offset mod modulus` shared by every element.
    pub fn residue(&self) -> u64 {
        (self.modulus - self.offset) % self.modulus
    }

    pub fn min_element(&self) -> u64 {
        self.modulus - self.offset
    }

    pub fn contains(&self, d: u64) -> bool {
        d >= self.min_element() && d % self.modulus == self.residue()
    }

    /// Elements in increasing order, up to and including `bound`.
    pub fn elements_up_to(&self, bound: u64) -> impl Iterator<Item = u64> {
        (self.min_element()..=bound).step_by(self.modulus as usize)
    }
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset == 0 {
            write!(f, "{}n", self.modulus)
        } else {
            write!(f, "{}n-{}", self.modulus, self.offset)
        }
    }
}

/// `prod_{n in set} (1 - x^n)^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub set: FactorSet,
    pub exponent: i64,
}

impl Factor {
    pub fn new(set: FactorSet, exponent: i64) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::InvalidArgument("factor exponent must be nonzero".into()));
        }
        Ok(Factor { set, exponent })
    }

    /// Shorthand for `Factor::new(FactorSet::new(m, i)?, c)`.
    pub fn progression(modulus: u64, offset: u64, exponent: i64) -> Result<Self> {
        Factor::new(FactorSet::new(modulus, offset)?, exponent)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.set, self.exponent)
    }
}

/// A finite product of [`Factor`]s, each index set appearing at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJson")]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    /// Builds a spec, merging repeated index sets by adding exponents and
    /// dropping factors whose exponents cancel. The input must not be empty.
    /// Factors keep the order of first appearance.
    pub fn new(factors: impl IntoIterator<Item = Factor>) -> Result<Self> {
        let mut merged: Vec<(FactorSet, i64)> = Vec::new();
        let mut any = false;
        for factor in factors {
            any = true;
            match merged.iter_mut().find(|(set, _)| *set == factor.set) {
                Some((_, c)) => *c += factor.exponent,
                None => merged.push((factor.set, factor.exponent)),
            }
        }
        if !any {
            return Err(Error::EmptySpec);
        }
        let factors = merged
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(set, exponent)| Factor { set, exponent })
            .collect();
        Ok(ProductSpec { factors })
    }

    /// Convenience constructor from `(m, i, c)` triples.
    pub fn from_triples(triples: &[(u64, u64, i64)]) -> Result<Self> {
        let factors = triples
            .iter()
            .map(|&(m, i, c)| Factor::progression(m, i, c))
            .collect::<Result<Vec<_>>>()?;
        ProductSpec::new(factors)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The product of `self` and `other`.
    pub fn concat(&self, other: &ProductSpec) -> ProductSpec {
        let factors: Vec<Factor> = self.factors.iter().chain(&other.factors).copied().collect();
        // both sides were already valid; merging cannot fail on a nonempty list
        ProductSpec::new(factors).unwrap_or(ProductSpec { factors: Vec::new() })
    }

    /// Every exponent multiplied by `k`.
    pub fn scaled(&self, k: i64) -> Result<ProductSpec> {
        ProductSpec::new(
            self.factors
                .iter()
                .map(|f| Factor::new(f.set, f.exponent * k))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, factor) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for ProductSpec {
    type Err = Error;

    /// Parses `factor ("," factor)*` with `factor := m ["n" ["-" i]] "^" c`,
    /// ignoring whitespace. A bare `m^c` is read as `mn^c`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty spec".into()));
        }
        let factors = compact
            .split(',')
            .map(parse_factor)
            .collect::<Result<Vec<_>>>()?;
        ProductSpec::new(factors)
    }
}

fn parse_factor(text: &str) -> Result<Factor> {
    let bad = |why: &str| Error::Parse(format!("factor {text:?}: {why}"));
    let (set_part, exp_part) = text.split_once('^').ok_or_else(|| bad("missing '^'"))?;
    let exponent: i64 = exp_part.parse().map_err(|_| bad("exponent is not an integer"))?;
    if exponent == 0 {
        return Err(bad("exponent must be nonzero"));
    }

    let digits_end = set_part
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(set_part.len());
    if digits_end == 0 {
        return Err(bad("missing modulus"));
    }
    let modulus: u64 = set_part[..digits_end].parse().map_err(|_| bad("modulus out of range"))?;
    let offset = match &set_part[digits_end..] {
        "" | "n" => 0,
        rest => {
            let i = rest
                .strip_prefix("n-")
                .ok_or_else(|| bad("expected 'n' or 'n-<offset>' after modulus"))?;
            if i.is_empty() || !i.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("offset is not a natural number"));
            }
            i.parse().map_err(|_| bad("offset out of range"))?
        }
    };
    let set = FactorSet::new(modulus, offset).map_err(|e| bad(&e.to_string()))?;
    Factor::new(set, exponent)
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    factors: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    m: u64,
    i: u64,
    c: i64,
}

impl TryFrom<SpecJson> for ProductSpec {
    type Error = Error;

    fn try_from(json: SpecJson) -> Result<Self> {
        ProductSpec::new(
            json.factors
                .into_iter()
                .map(|f| Factor::progression(f.m, f.i, f.c))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl From<ProductSpec> for SpecJson {
    fn from(spec: ProductSpec) -> Self {
        SpecJson {
            factors: spec
                .factors
                .iter()
                .map(|f| FactorJson {
                    m: f.set.modulus(),
                    i: f.set.offset(),
                    c: f.exponent,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_follows_progression() {
        let odd = FactorSet::new(2, 1).unwrap();
        assert!(odd.contains(1) && odd.contains(7) && !odd.contains(4));
        let s = FactorSet::new(4, 2).unwrap();
        let elems: Vec<u64> = s.elements_up_to(15).collect();
        assert_eq!(elems, vec![2, 6, 10, 14]);
        assert!(elems.iter().all(|&d| s.contains(d)));
        assert!(!s.contains(0));
        let three_n_minus_one = FactorSet::new(3, 1).unwrap();
        assert_eq!(three_n_minus_one.elements_up_to(9).collect::<Vec<_>>(), vec![2, 5, 8]);
    }

    #[test]
    fn residue_class_converts_to_offset() {
        assert_eq!(FactorSet::residue_class(1, 2).unwrap(), FactorSet::new(2, 1).unwrap());
        assert_eq!(FactorSet::residue_class(0, 4).unwrap(), FactorSet::new(4, 0).unwrap());
        assert_eq!(FactorSet::residue_class(2, 3).unwrap(), FactorSet::new(3, 1).unwrap());
        assert!(FactorSet::residue_class(3, 3).is_err());
    }

    #[test]
    fn rejects_bad_sets() {
        assert!(FactorSet::new(0, 0).is_err());
        assert!(FactorSet::new(3, 3).is_err());
        assert!(Factor::progression(2, 0, 0).is_err());
    }

    #[test]
    fn parse_and_display() {
        let spec: ProductSpec = " 2n^1, 4n-2^2 ,2n-1^-2".parse().unwrap();
        assert_eq!(spec.to_string(), "2n^1,4n-2^2,2n-1^-2");
        assert_eq!(spec, ProductSpec::from_triples(&[(2, 0, 1), (4, 2, 2), (2, 1, -2)]).unwrap());
        let bare: ProductSpec = "3^2".parse().unwrap();
        assert_eq!(bare.to_string(), "3n^2");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "2n", "n^1", "2n^0", "2n-2^1", "2x^1", "2n-^1", "2n^1,", "2n^a", "2n+1^1"] {
            assert!(bad.parse::<ProductSpec>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn duplicate_sets_merge() {
        let spec = ProductSpec::from_triples(&[(1, 0, -1), (2, 0, 1), (1, 0, -2)]).unwrap();
        assert_eq!(spec.to_string(), "1n^-3,2n^1");
        let cancelled = ProductSpec::from_triples(&[(1, 0, 2), (2, 0, 1), (1, 0, -2)]).unwrap();
        assert_eq!(cancelled.to_string(), "2n^1");
        assert!(ProductSpec::new(Vec::new()).is_err());
    }

    #[test]
    fn json_form() {
        let spec: ProductSpec = "2n^1,2n-1^-1".parse().unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"factors":[{"m":2,"i":0,"c":1},{"m":2,"i":1,"c":-1}]}"#);
        assert_eq!(serde_json::from_str::<ProductSpec>(&json).unwrap(), spec);
        assert!(serde_json::from_str::<ProductSpec>(r#"{"factors":[{"m":2,"i":2,"c":1}]}"#).is_err());
    }
}
