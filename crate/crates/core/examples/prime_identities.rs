//! Prime-indexed divisor-sum identities over r_k and t_k.
//!
//! cargo run -p qconvolve --example prime_identities

use qconvolve::counts::r_oracle;
use qconvolve::identities::verify::squares_prime_sum;
use qconvolve::identities::{
    verify_convolution, verify_convolution_scaled, verify_prime_r2_below, verify_prime_r4_r8_below,
    TriangularIdentity,
};

fn main() {
    let r2 = r_oracle(2, 40).unwrap();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        println!("p = {p:>2} (mod 4 = {}): sum = {}", p % 4, squares_prime_sum(&r2, p));
    }

    let reports = [
        verify_prime_r2_below(1000),
        verify_prime_r4_r8_below(500),
        TriangularIdentity::T2Prime.verify_below(500),
        TriangularIdentity::T4.verify_below(500),
        TriangularIdentity::T6.verify_below(500),
        verify_convolution_scaled(300),
        verify_convolution(300),
    ];
    for r in &reports {
        println!(
            "{:<20} checked {:>4}  {}",
            r.identity,
            r.inputs_checked.len(),
            if r.passed() { "passed".to_string() } else { format!("{} failures", r.failures.len()) }
        );
    }
}
