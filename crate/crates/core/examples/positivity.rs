//! Coefficient positivity for residue-class products.
//!
//! cargo run -p qconvolve --example positivity

use qconvolve::identities::{
    master_family_spec, master_family_sweep, series1_spec, verify_master_family,
    verify_positivity, verify_series1_positivity, MasterFamilyParams, Reading,
};
use qconvolve::series::expand;

fn main() -> qconvolve::Result<()> {
    for offsets in [vec![0], vec![1], vec![0, 1]] {
        let params = MasterFamilyParams::new(1, 3, offsets, Reading::SingleBase)?;
        let spec = master_family_spec(&params);
        println!("{:<28} {:<20} {}", params.to_string(), spec.to_string(), expand(&spec, 15)?);
    }

    let sweep = master_family_sweep(1..=3, 2..=5);
    let results = verify_master_family(&sweep, 300)?;
    let passed = results.iter().filter(|(_, r)| r.passed()).count();
    println!("{passed}/{} families positive through x^300", results.len());

    println!("series1 {}: {}", series1_spec(), expand(&series1_spec(), 15)?);
    println!("series1 positive to 500: {}", verify_series1_positivity(500)?.passed());

    let control = verify_positivity("control", &"1n^1".parse()?, 10)?;
    println!("negative control 1n^1 fails at n = {:?}", control.failures.iter().map(|f| f.input).collect::<Vec<_>>());
    Ok(())
}
