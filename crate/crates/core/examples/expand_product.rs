//! Expanding products over arithmetic progressions.
//!
//! cargo run -p qconvolve --example expand_product [-- "<spec>" <order>]

use qconvolve::series::{expand, oracle_expand, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    if let Some(text) = args.next() {
        let order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
        let spec: ProductSpec = text.parse()?;
        println!("{spec}: {}", expand(&spec, order)?);
        return Ok(());
    }

    let named = [
        ("partitions", "1n^-1"),
        ("Euler product", "1n^1"),
        ("theta (squares)", "2n^1,4n-2^2,2n-1^-2"),
        ("triangular numbers", "2n^1,2n-1^-1"),
        ("partitions into parts not divisible by 3", "1n^-1,3n^1"),
    ];
    for (name, text) in named {
        let spec: ProductSpec = text.parse()?;
        let series = expand(&spec, 20)?;
        assert_eq!(series, oracle_expand(&spec, 20));
        println!("{name:<42} {:<22} {series}", spec.to_string());
    }

    let json = serde_json::to_string(&"4n-2^2".parse::<ProductSpec>()?)?;
    println!("JSON form: {json}");
    Ok(())
}
