//! Closed forms, identity verifiers and positivity checks.

pub mod closed;
pub mod corpus;
pub mod positivity;
mod report;
pub mod verify;

pub use closed::{
    kronecker_minus4, r2_closed, r4_closed, r8_closed, t2_closed, t4_closed, t6_closed,
};
pub use positivity::{
    master_family_spec, master_family_sweep, series1_spec, verify_master_family,
    verify_positivity, verify_series1_positivity, MasterFamilyParams, Reading,
};
pub use report::{Failure, FailureRecord, ReportRecord, VerificationReport};
pub use verify::{
    r_combination, verify_convolution, verify_convolution_scaled, verify_prime_r2,
    verify_prime_r2_below, verify_prime_r4_r8, verify_prime_r4_r8_below, verify_r_positive,
    verify_t2_prime, verify_t4, verify_t6, TriangularIdentity,
};
