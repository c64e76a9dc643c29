//! Divisor sums and the scaled-argument convention.
//!
//! cargo run -p qconvolve --example divisor_functions

use qconvolve::divisor_sums::{sigma, sigma_class, sigma_odd, sigma_scaled, sigma_star};

fn main() {
    println!("{:>4} {:>6} {:>6} {:>8} {:>8} {:>10}", "n", "s(n)", "s*(n)", "s_o(n)", "s(n/4)", "s_{1,3}(n)");
    for n in 1..=24u64 {
        println!(
            "{n:>4} {:>6} {:>6} {:>8} {:>8} {:>10}",
            sigma(n),
            sigma_star(n),
            sigma_odd(n),
            sigma_scaled(n, 4),
            sigma_class(n, 1, 3)
        );
    }
    println!("sigma(0) = {} (convention), sigma_star(0) = {}", sigma(0), sigma_star(0));
}
