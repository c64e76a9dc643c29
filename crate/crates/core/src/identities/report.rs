use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One input at which the two sides of an identity disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of checking one identity over a set of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub inputs_checked: Vec<u64>,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            inputs_checked: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Marks `input` as checked and records a failure when `lhs != rhs`.
    pub fn check(&mut self, input: u64, lhs: BigInt, rhs: BigInt) {
        self.inputs_checked.push(input);
        if lhs != rhs {
            self.failures.push(Failure { input, lhs, rhs });
        }
    }

    /// Records a failure without marking a new input as checked.
    pub fn fail(&mut self, input: u64, lhs: BigInt, rhs: BigInt) {
        self.failures.push(Failure { input, lhs, rhs });
    }

    /// Appends the inputs and failures of `other`, keeping this report's name.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.inputs_checked.extend(other.inputs_checked);
        self.failures.extend(other.failures);
    }

    pub fn to_record(&self) -> ReportRecord {
        ReportRecord::from(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("report serializes")
    }
}

/// The JSON form of a [`VerificationReport`]:
/// `{"identity", "checked", "failures": [{"input", "lhs", "rhs"}], "passed"}`
/// with big integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub checked: u64,
    pub failures: Vec<FailureRecord>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub input: u64,
    pub lhs: String,
    pub rhs: String,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            identity: r.identity.clone(),
            checked: r.inputs_checked.len() as u64,
            failures: r
                .failures
                .iter()
                .map(|f| FailureRecord {
                    input: f.input,
                    lhs: f.lhs.to_string(),
                    rhs: f.rhs.to_string(),
                })
                .collect(),
            passed: r.passed(),
        }
    }
}
