//! Command line front end: `expand`, `counts` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage or input error,
//! 3 divisibility violation inside the engine. Data goes to stdout and
//! diagnostics to stderr.

use crate::counts::{self, CountTable};
use crate::error::Error;
use crate::identities::{self, corpus, MasterFamilyParams, Reading, TriangularIdentity};
use crate::series::{expand, PowerSeries, ProductSpec};
use crate::VerificationReport;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use std::io::{self, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DIVISIBILITY: i32 = 3;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "QCONVOLVE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qconvolve", version, about = "Exact q-product expansion and divisor-sum identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    R,
    T,
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Oracle,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Convolution,
    ConvolutionScaled,
    PrimeR2,
    PrimeR4r8,
    T2Prime,
    T4Prime,
    T6Prime,
    #[value(name = "R-positive")]
    RPositive,
    MasterPositivity,
    Series1Positivity,
    OracleEquivalence,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a product spec such as "2n^1,4n-2^2,2n-1^-2" (or its JSON form).
    Expand {
        #[arg(long)]
        spec: String,
        /// Truncation order.
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Tabulate r_k, t_k or u_{k,l}.
    Counts {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: Option<u32>,
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value = "recursive")]
        method: Method,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Check one identity over a range or at a single input.
    Verify {
        #[arg(long, value_enum)]
        identity: Identity,
        /// Upper end of the input range.
        #[arg(long)]
        max: Option<u64>,
        /// Truncation order, or range end for identities indexed by n.
        #[arg(short = 'N', long = "order")]
        order: Option<usize>,
        /// Check a single input instead of a range.
        #[arg(long)]
        input: Option<u64>,
        /// Family exponent a (master-positivity).
        #[arg(long)]
        a: Option<u32>,
        /// Family modulus b (master-positivity).
        #[arg(long)]
        b: Option<u64>,
        /// Comma-separated offsets I (master-positivity).
        #[arg(long, value_delimiter = ',')]
        offsets: Option<Vec<u64>>,
        #[arg(long, default_value = "double-product")]
        reading: String,
        /// Corpus size (oracle-equivalence).
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
}

/// Applies `QCONVOLVE_THREADS` to the global rayon pool, if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Engine(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Expand { spec, order, format } => cmd_expand(&spec, order, format, out),
        Command::Counts { kind, k, l, order, method, format } => {
            cmd_counts(kind, k, l, order, method, format, out)
        }
        Command::Verify {
            identity,
            max,
            order,
            input,
            a,
            b,
            offsets,
            reading,
            count,
            seed,
            format,
        } => {
            let family = FamilyArgs { a, b, offsets, reading };
            let range = RangeArgs { max, order, input, count, seed };
            cmd_verify(identity, range, family, format, out, err)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Exit code for an engine error surfacing from a command.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::DivisibilityViolation { .. } => EXIT_DIVISIBILITY,
        _ => EXIT_USAGE,
    }
}

fn parse_spec(text: &str) -> Result<ProductSpec, Failure> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid JSON spec: {e}")))
    } else {
        text.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
    }
}

fn write_values(
    values: &[BigInt],
    format: OutputFormat,
    header: serde_json::Value,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n},{v}")?;
            }
        }
        OutputFormat::Json => {
            let mut doc = header;
            doc["values"] = values.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn cmd_expand(
    spec: &str,
    order: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let spec = parse_spec(spec)?;
    let series: PowerSeries = expand(&spec, order)?;
    let header = json!({ "spec": spec.to_string(), "order": order });
    write_values(series.coeffs(), format, header, out)?;
    Ok(EXIT_OK)
}

fn cmd_counts(
    kind: Kind,
    k: u32,
    l: Option<u32>,
    order: usize,
    method: Method,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if kind == Kind::U && l.is_none() {
        return Err(Failure::Usage("--kind u needs --l".into()));
    }
    if kind != Kind::U && l.is_some() {
        return Err(Failure::Usage("--l only applies to --kind u".into()));
    }
    let table: CountTable = match (kind, method) {
        (Kind::R, Method::Recursive) => counts::r_table(k, order)?,
        (Kind::R, Method::Oracle) => counts::r_oracle(k, order)?,
        (Kind::T, Method::Recursive) => counts::t_table(k, order)?,
        (Kind::T, Method::Oracle) => counts::t_oracle(k, order)?,
        (Kind::U, Method::Recursive) => counts::u_table(k, l.unwrap_or(0), order)?,
        (Kind::U, Method::Oracle) => counts::u_oracle(k, l.unwrap_or(0), order)?,
        (_, Method::Closed) => closed_table(kind, k, order)?,
    };
    let kind_name = match kind {
        Kind::R => "r",
        Kind::T => "t",
        Kind::U => "u",
    };
    let method_name = match method {
        Method::Recursive => "recursive",
        Method::Oracle => "oracle",
        Method::Closed => "closed",
    };
    let header = json!({ "kind": kind_name, "k": k, "l": l, "method": method_name, "order": order });
    write_values(&table.values, format, header, out)?;
    Ok(EXIT_OK)
}

fn closed_table(kind: Kind, k: u32, order: usize) -> Result<CountTable, Failure> {
    use crate::identities::closed::*;
    let values: Vec<BigInt> = match (kind, k) {
        (Kind::R, 2 | 4 | 8) => {
            let f = match k {
                2 => r2_closed,
                4 => r4_closed,
                _ => r8_closed,
            };
            std::iter::once(BigInt::from(1))
                .chain((1..=order as u64).map(f))
                .collect()
        }
        (Kind::T, 2) => (0..=order as u64).map(t2_closed).collect(),
        (Kind::T, 4) => (0..=order as u64).map(t4_closed).collect(),
        (Kind::T, 6) => (0..=order as u64).map(t6_closed).collect::<Result<_, _>>()?,
        _ => {
            return Err(Failure::Usage(
                "closed forms exist only for r with k in {2,4,8} and t with k in {2,4,6}".into(),
            ))
        }
    };
    let kind = match kind {
        Kind::R => counts::CountKind::Squares { k },
        _ => counts::CountKind::Triangular { k },
    };
    Ok(CountTable { kind, values })
}

struct FamilyArgs {
    a: Option<u32>,
    b: Option<u64>,
    offsets: Option<Vec<u64>>,
    reading: String,
}

struct RangeArgs {
    max: Option<u64>,
    order: Option<usize>,
    input: Option<u64>,
    count: usize,
    seed: u64,
}

impl RangeArgs {
    fn bound(&self, default: u64) -> u64 {
        self.max.or(self.order.map(|n| n as u64)).unwrap_or(default)
    }

    fn order_or(&self, default: usize) -> usize {
        self.order.or(self.max.map(|m| m as usize)).unwrap_or(default)
    }
}

fn cmd_verify(
    identity: Identity,
    range: RangeArgs,
    family: FamilyArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let report: VerificationReport = match identity {
        Identity::Convolution => identities::verify_convolution(range.bound(300)),
        Identity::ConvolutionScaled => identities::verify_convolution_scaled(range.bound(300)),
        Identity::PrimeR2 => match range.input {
            Some(p) => identities::verify_prime_r2(p)?,
            None => identities::verify_prime_r2_below(range.bound(1000)),
        },
        Identity::PrimeR4r8 => match range.input {
            Some(p) => identities::verify_prime_r4_r8(p)?,
            None => identities::verify_prime_r4_r8_below(range.bound(500)),
        },
        Identity::T2Prime | Identity::T4Prime | Identity::T6Prime => {
            let which = match identity {
                Identity::T2Prime => TriangularIdentity::T2Prime,
                Identity::T4Prime => TriangularIdentity::T4,
                _ => TriangularIdentity::T6,
            };
            match range.input {
                Some(n) => which.verify(n)?,
                None => which.verify_below(range.bound(500)),
            }
        }
        Identity::RPositive => identities::verify_r_positive(range.bound(100_000)),
        Identity::Series1Positivity => {
            identities::verify_series1_positivity(range.order_or(500))?
        }
        Identity::MasterPositivity => master_positivity(&family, range.order_or(300), err)?,
        Identity::OracleEquivalence => {
            let specs = corpus::random_corpus(range.seed, range.count, Default::default());
            let report = corpus::verify_oracle_equivalence(&specs, range.order_or(120));
            for f in &report.failures {
                writeln!(err, "mismatch on spec {}", specs[f.input as usize])?;
            }
            report
        }
    };
    write_report(&report, format, out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn master_positivity(
    family: &FamilyArgs,
    order: usize,
    err: &mut dyn Write,
) -> Result<VerificationReport, Failure> {
    let params: Vec<MasterFamilyParams> = match (family.a, family.b, &family.offsets) {
        (None, None, None) => identities::master_family_sweep(1..=3, 2..=5),
        (Some(a), Some(b), Some(offsets)) => {
            let reading: Reading = family.reading.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            vec![MasterFamilyParams::new(a, b, offsets.iter().copied(), reading)
                .map_err(|e| Failure::Usage(e.to_string()))?]
        }
        _ => {
            return Err(Failure::Usage(
                "master-positivity needs all of --a, --b, --offsets or none of them".into(),
            ))
        }
    };
    let mut merged = VerificationReport::new("master-positivity");
    for (p, report) in identities::verify_master_family(&params, order)? {
        if !report.passed() {
            writeln!(err, "non-positive coefficient in family {p}")?;
        }
        merged.absorb(report);
    }
    Ok(merged)
}

fn write_report(report: &VerificationReport, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Json => writeln!(out, "{}", report.to_json()),
        OutputFormat::Csv => {
            let checked = report.inputs_checked.len();
            let passed = report.passed();
            writeln!(out, "identity,checked,passed,input,lhs,rhs")?;
            if report.failures.is_empty() {
                writeln!(out, "{},{checked},{passed},,,", report.identity)?;
            }
            for f in &report.failures {
                writeln!(out, "{},{checked},{passed},{},{},{}", report.identity, f.input, f.lhs, f.rhs)?;
            }
            Ok(())
        }
    }
}
