//! r_k, t_k and u_{k,l} by recursion, by convolution, and by closed form.
//!
//! cargo run -p qconvolve --example representation_counts

use qconvolve::counts::{r_oracle, r_table, t_table, u_table};
use qconvolve::identities::{r4_closed, t4_closed};

fn main() -> qconvolve::Result<()> {
    let order = 12;
    for k in [2u32, 4, 8] {
        let table = r_table(k, order)?;
        assert_eq!(table, r_oracle(k, order)?);
        let row: Vec<String> = table.values.iter().map(ToString::to_string).collect();
        println!("{:<8} {}", table.kind.to_string(), row.join(" "));
    }
    for k in [2u32, 4, 6] {
        let table = t_table(k, order)?;
        let row: Vec<String> = table.values.iter().map(ToString::to_string).collect();
        println!("{:<8} {}", table.kind.to_string(), row.join(" "));
    }
    let mixed = u_table(1, 2, order)?;
    let row: Vec<String> = mixed.values.iter().map(ToString::to_string).collect();
    println!("{:<8} {}", mixed.kind.to_string(), row.join(" "));

    println!("r_4(10) closed form: {}", r4_closed(10));
    println!("t_4(10) closed form: {}", t4_closed(10));
    println!("r_8(300) = {}", r_table(8, 300)?.values[300]);
    println!("u_(4,4)(300) = {}", u_table(4, 4, 300)?.values[300]);
    Ok(())
}
