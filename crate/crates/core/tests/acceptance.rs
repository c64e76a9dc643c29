//! Acceptance suite. Every criterion is an exact equality or strict
//! inequality; each test prints one PASS/FAIL line with its elapsed time
//! against the runtime budget.

use qconvolve::counts::{r_oracle, r_table, t_oracle, t_table, u_oracle, u_table};
use qconvolve::identities::corpus::{random_corpus, CorpusBounds};
use qconvolve::identities::{self, closed, MasterFamilyParams, Reading, TriangularIdentity};
use qconvolve::primes::{is_prime, primes_in};
use qconvolve::series::{expand, oracle_expand, ProductSpec};
use qconvolve::Error;
use num_bigint::BigInt;
use std::time::{Duration, Instant};

fn criterion(id: u32, name: &str, budget_secs: u64, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    let outcome = outcome.and_then(|()| {
        if elapsed <= budget {
            Ok(())
        } else {
            Err(format!("took {elapsed:.2?}, budget {budget:?}"))
        }
    });
    match &outcome {
        Ok(()) => println!("[PASS] AC-{id} {name} ({elapsed:.2?} / {budget_secs}s)"),
        Err(why) => println!("[FAIL] AC-{id} {name} ({elapsed:.2?} / {budget_secs}s): {why}"),
    }
    if let Err(why) = outcome {
        panic!("AC-{id} {name}: {why}");
    }
}

fn first_diff(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y).or((a.len() != b.len()).then_some(a.len().min(b.len())))
}

#[test]
fn ac01_recursions_match_oracles() {
    criterion(1, "r_k, t_k, u_{k,l} recursions equal convolution oracles", 10, || {
        for k in 1..=8 {
            let (rec, ora) = (r_table(k, 200).unwrap(), r_oracle(k, 200).unwrap());
            if let Some(n) = first_diff(&rec.values, &ora.values) {
                return Err(format!("r_{k} differs at n={n}"));
            }
            let (rec, ora) = (t_table(k, 200).unwrap(), t_oracle(k, 200).unwrap());
            if let Some(n) = first_diff(&rec.values, &ora.values) {
                return Err(format!("t_{k} differs at n={n}"));
            }
        }
        for k in 1..=4 {
            for l in 1..=4 {
                let (rec, ora) = (u_table(k, l, 150).unwrap(), u_oracle(k, l, 150).unwrap());
                if let Some(n) = first_diff(&rec.values, &ora.values) {
                    return Err(format!("u_{{{k},{l}}} differs at n={n}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn ac02_closed_forms_match_oracles() {
    criterion(2, "closed forms for r_2, r_4, r_8, t_2, t_4, t_6 up to n=500", 5, || {
        const N: usize = 500;
        type ClosedForm = fn(u64) -> BigInt;
        let squares: [(u32, ClosedForm); 3] =
            [(2, closed::r2_closed), (4, closed::r4_closed), (8, closed::r8_closed)];
        for (k, f) in squares {
            let oracle = r_oracle(k, N).unwrap();
            let rec = r_table(k, N).unwrap();
            for n in 1..=N {
                let c = f(n as u64);
                if c != oracle.values[n] || c != rec.values[n] {
                    return Err(format!("r_{k}({n}): closed {c}, oracle {}", oracle.values[n]));
                }
            }
        }
        for k in [2u32, 4, 6] {
            let oracle = t_oracle(k, N).unwrap();
            for n in 0..=N {
                let c = match k {
                    2 => closed::t2_closed(n as u64),
                    4 => closed::t4_closed(n as u64),
                    _ => closed::t6_closed(n as u64).map_err(|e| e.to_string())?,
                };
                if c != oracle.values[n] {
                    return Err(format!("t_{k}({n}): closed {c}, oracle {}", oracle.values[n]));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn ac03_convolution_identity() {
    criterion(3, "convolution identity as stated, n <= 300", 2, || {
        let printed = identities::verify_convolution(300);
        if printed.passed() {
            return Ok(());
        }
        let scaled = identities::verify_convolution_scaled(300);
        let f = &printed.failures[0];
        Err(format!(
            "{} of {} inputs fail, first at n={} (lhs {}, rhs {}); \
             the scaled form 8*lhs = rhs passes at all {} inputs: {}",
            printed.failures.len(),
            printed.inputs_checked.len(),
            f.input,
            f.lhs,
            f.rhs,
            scaled.inputs_checked.len(),
            scaled.passed()
        ))
    });
}

#[test]
fn ac04_prime_two_squares_and_twins() {
    criterion(4, "r_2 prime sums p-1 / -p-1 and twin-prime relation, p < 1000", 5, || {
        let report = identities::verify_prime_r2_below(1000);
        let expected_primes: Vec<u64> = primes_in(3, 1000).collect();
        if report.inputs_checked != expected_primes {
            return Err("did not check every odd prime below 1000".into());
        }
        let twins = expected_primes.iter().filter(|&&p| is_prime(p + 2)).count();
        if twins != 35 {
            return Err(format!("expected 35 twin pairs below 1000, found {twins}"));
        }
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(format!("p={}: {} != {}", f.input, f.lhs, f.rhs)),
        }
    });
}

#[test]
fn ac05_prime_four_and_eight_squares() {
    criterion(5, "r_4 / r_8 prime sums p^2-1, p^4-1 and squaring corollary, p < 500", 5, || {
        let report = identities::verify_prime_r4_r8_below(500);
        if report.inputs_checked.len() != primes_in(3, 500).count() {
            return Err("did not check every odd prime below 500".into());
        }
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(format!("p={}: {} != {}", f.input, f.lhs, f.rhs)),
        }
    });
}

#[test]
fn ac06_triangular_prime_sums() {
    criterion(6, "t_2, t_4, t_6 prime-indexed sums below 500", 5, || {
        for which in [TriangularIdentity::T2Prime, TriangularIdentity::T4, TriangularIdentity::T6] {
            let report = which.verify_below(500);
            if report.inputs_checked.is_empty() {
                return Err(format!("{}: no inputs", which.name()));
            }
            if let Some(f) = report.failures.first() {
                return Err(format!("{} at {}: {} != {}", which.name(), f.input, f.lhs, f.rhs));
            }
        }
        Ok(())
    });
}

#[test]
fn ac07_r_combination_positive() {
    criterion(7, "4s(n) - 4s(n/2) + 8s(n/4) - 32s(n/8) > 0 for n <= 10^5", 5, || {
        let report = identities::verify_r_positive(100_000);
        if report.inputs_checked.len() != 100_000 {
            return Err("wrong input count".into());
        }
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(format!("n={}: value {}", f.input, f.lhs)),
        }
    });
}

#[test]
fn ac08_master_family_positive() {
    criterion(8, "residue-class family coefficients positive to N=300", 30, || {
        let mut params = identities::master_family_sweep(1..=3, 2..=5);
        if params.len() != 156 {
            return Err(format!("expected 156 parameter sets, got {}", params.len()));
        }
        // the three b = 3 families with a single base factor, a = 1..3
        for offsets in [vec![0], vec![1], vec![0, 1]] {
            for a in 1..=3 {
                let p = MasterFamilyParams::new(a, 3, offsets.clone(), Reading::SingleBase).unwrap();
                if !params.contains(&p) {
                    return Err(format!("sweep is missing {p}"));
                }
            }
        }
        // a = 4 is outside the sweep; check the introductory families there too
        for offsets in [vec![0], vec![1], vec![0, 1]] {
            params.push(MasterFamilyParams::new(4, 3, offsets, Reading::SingleBase).unwrap());
        }
        let results = identities::verify_master_family(&params, 300).map_err(|e| e.to_string())?;
        for (p, report) in results {
            if report.inputs_checked.len() != 301 {
                return Err(format!("{p}: wrong coefficient count"));
            }
            if let Some(f) = report.failures.first() {
                return Err(format!("{p}: coefficient {} = {}", f.input, f.lhs));
            }
        }
        Ok(())
    });
}

#[test]
fn ac09_series1_positive() {
    criterion(9, "(1+x^n)^4 (1+x^2n)^2 (1+x^4n)^4 coefficients positive, n <= 500", 5, || {
        let report = identities::verify_series1_positivity(500).map_err(|e| e.to_string())?;
        if report.inputs_checked.len() != 501 {
            return Err("wrong coefficient count".into());
        }
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(format!("n={}: {}", f.input, f.lhs)),
        }
    });
}

#[test]
fn ac10_theta_product_fixtures() {
    criterion(10, "square and triangular indicator products to N=1000", 5, || {
        const N: usize = 1000;
        let jacobi: ProductSpec = "2n^1,4n-2^2,2n-1^-2".parse().unwrap();
        let gauss: ProductSpec = "2n^1,2n-1^-1".parse().unwrap();
        let mut squares = vec![BigInt::from(0); N + 1];
        for a in -32i64..=32 {
            if (a * a) as usize <= N {
                squares[(a * a) as usize] += 1;
            }
        }
        let mut triangles = vec![BigInt::from(0); N + 1];
        for x in 0usize..50 {
            if x * (x + 1) / 2 <= N {
                triangles[x * (x + 1) / 2] += 1;
            }
        }
        let got = expand(&jacobi, N).map_err(|e| e.to_string())?;
        if let Some(n) = first_diff(got.coeffs(), &squares) {
            return Err(format!("square series differs at n={n}"));
        }
        let got = expand(&gauss, N).map_err(|e| e.to_string())?;
        if let Some(n) = first_diff(got.coeffs(), &triangles) {
            return Err(format!("triangular series differs at n={n}"));
        }
        Ok(())
    });
}

#[test]
fn ac11_no_divisibility_violation_on_random_corpus() {
    criterion(11, "no divisibility violation over 500 random specs at N=120", 30, || {
        let specs = random_corpus(0x5eed, 500, CorpusBounds::default());
        for (idx, spec) in specs.iter().enumerate() {
            match expand(spec, 120) {
                Err(e @ Error::DivisibilityViolation { .. }) => {
                    return Err(format!("spec #{idx} {spec}: {e}"));
                }
                Err(e) => return Err(format!("spec #{idx} {spec}: unexpected {e}")),
                Ok(series) => {
                    if series != oracle_expand(spec, 120) {
                        return Err(format!("spec #{idx} {spec}: differs from direct multiplication"));
                    }
                }
            }
        }
        Ok(())
    });
}
