//! Command-line surface over the polycert library.
//!
//! Every subcommand prints canonical JSON on standard output (or a
//! human-readable rendering with `--pretty`) and reserves standard error for
//! diagnostics. Exit codes carry the verdict:
//!
//! - `0` — success; for `certify`, the polynomial is real-rooted
//! - `1` — the work succeeded but the answer is negative: `certify` found a
//!   non-real-rooted polynomial, `trials` recorded failures, or
//!   `identity-check` found a failing `n`
//! - `2` — usage, parse, or configuration errors
//! - `3` — a degree exceeded a transform's capacity

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polycert::{
    certify_real_rooted, isolate_roots, laguerre_sum, run_factorial_trials, run_identity_check,
    run_laguerre_trials, Error, IdentityReport, Interval, MonomialTransform, Polynomial,
    RootCertificate, TrialConfig, TrialReport,
};

#[derive(Parser)]
#[command(
    name = "polycert",
    version,
    about = "Exact real-rootedness certification for linear transforms on the monomial basis"
)]
struct Cli {
    /// Human-readable output instead of canonical JSON
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Laguerre polynomial L_n
    Laguerre { n: usize },

    /// Apply a monomial-basis transform to a polynomial
    Apply {
        #[arg(long, value_enum)]
        transform: TransformKind,

        /// Polynomial as inline JSON ({"coeffs": ["1","-2","1/2"]}) or a file path
        poly: String,

        /// Capacity of the transform table; defaults to the polynomial's degree
        #[arg(long)]
        max_degree: Option<usize>,
    },

    /// Certify whether a polynomial has all real roots
    Certify { poly: String },

    /// Print isolating intervals for the distinct real roots
    Isolate { poly: String },

    /// Check L_n = T((1-x)^n) = recurrence-L_n exactly for all n up to max_n
    IdentityCheck { max_n: usize },

    /// Run a seeded campaign: random real-rooted inputs, transform, certify
    Trials {
        #[arg(long, value_enum, default_value_t = CampaignKind::Laguerre)]
        transform: CampaignKind,

        #[arg(long, default_value_t = 500)]
        trials: u64,

        #[arg(long, default_value_t = 1)]
        min_degree: usize,

        #[arg(long, default_value_t = 12)]
        max_degree: usize,

        /// Root numerators are drawn from [-root-range, root-range]
        #[arg(long, default_value_t = 20)]
        root_range: i64,

        /// Root denominators are drawn from [1, max-denominator]
        #[arg(long, default_value_t = 4)]
        max_denominator: i64,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        /// Allow the same root to be drawn more than once per polynomial
        #[arg(long)]
        allow_repeats: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Laguerre,
    Factorial,
    Reflection,
}

#[derive(Clone, Copy, ValueEnum)]
enum CampaignKind {
    Laguerre,
    Factorial,
}

/// A failed invocation: message for standard error plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TransformCapacity { .. } | Error::ComposeCapacity { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Laguerre { n } => {
            print_polynomial(&laguerre_sum(*n), cli.pretty);
            Ok(0)
        }
        Command::Apply {
            transform,
            poly,
            max_degree,
        } => {
            let p = read_polynomial(poly)?;
            let capacity = max_degree.unwrap_or_else(|| p.degree().unwrap_or(0));
            let t = match transform {
                TransformKind::Laguerre => MonomialTransform::laguerre(capacity),
                TransformKind::Factorial => MonomialTransform::factorial(capacity),
                TransformKind::Reflection => MonomialTransform::reflection(capacity),
            };
            let image = t.apply(&p)?;
            print_polynomial(&image, cli.pretty);
            Ok(0)
        }
        Command::Certify { poly } => {
            let p = read_polynomial(poly)?;
            let certificate = certify_real_rooted(&p)?;
            if cli.pretty {
                print!("{}", render_certificate(&certificate));
            } else {
                print_json(&certificate);
            }
            Ok(if certificate.is_real_rooted { 0 } else { 1 })
        }
        Command::Isolate { poly } => {
            let p = read_polynomial(poly)?;
            let intervals = isolate_roots(&p)?;
            if cli.pretty {
                print!("{}", render_intervals(&intervals));
            } else {
                print_json(&intervals);
            }
            Ok(0)
        }
        Command::IdentityCheck { max_n } => {
            let report = run_identity_check(*max_n);
            if cli.pretty {
                print!("{}", render_identity(&report));
            } else {
                print_json(&report);
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Trials {
            transform,
            trials,
            min_degree,
            max_degree,
            root_range,
            max_denominator,
            seed,
            allow_repeats,
        } => {
            let config = TrialConfig {
                trials: *trials,
                min_degree: *min_degree,
                max_degree: *max_degree,
                root_range: *root_range,
                max_denominator: *max_denominator,
                seed: *seed,
                allow_repeated_roots: *allow_repeats,
            };
            let report = match transform {
                CampaignKind::Laguerre => run_laguerre_trials(&config)?,
                CampaignKind::Factorial => run_factorial_trials(&config)?,
            };
            if cli.pretty {
                print!("{}", render_report(&report));
            } else {
                print_json(&report);
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

/// Accept a polynomial either inline (anything that starts with `{`) or as a
/// path to a file holding the same JSON.
fn read_polynomial(arg: &str) -> Result<Polynomial, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::usage(format!("cannot read polynomial file {arg:?}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("invalid polynomial: {e}")))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output types serialize infallibly")
    );
}

fn print_polynomial(p: &Polynomial, pretty: bool) {
    if pretty {
        println!("{p}");
    } else {
        print_json(p);
    }
}

fn render_certificate(c: &RootCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree: {}", c.degree);
    let _ = writeln!(out, "square-free degree: {}", c.squarefree_degree);
    let _ = writeln!(out, "distinct real roots: {}", c.distinct_real_roots);
    let _ = writeln!(
        out,
        "real-rooted: {}",
        if c.is_real_rooted { "yes" } else { "no" }
    );
    out.push_str(&render_intervals(&c.isolating_intervals));
    out
}

fn render_intervals(intervals: &[Interval]) -> String {
    if intervals.is_empty() {
        return "no real roots\n".to_owned();
    }
    let mut out = String::new();
    for interval in intervals {
        let _ = writeln!(out, "root in ({}, {})", interval.lo(), interval.hi());
    }
    out
}

fn render_identity(report: &IdentityReport) -> String {
    match report.first_failure {
        None => format!("identity holds exactly for all n <= {}\n", report.max_n),
        Some(n) => format!("identity FAILS first at n = {n}\n"),
    }
}

fn render_report(report: &TrialReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trials: {}", report.trials);
    let _ = writeln!(out, "seed: {}", report.seed);
    let _ = writeln!(out, "failures: {}", report.failures.len());
    let _ = writeln!(out, "degree  trials");
    for (degree, count) in &report.per_degree {
        let _ = writeln!(out, "{degree:>6}  {count:>6}");
    }
    for failure in &report.failures {
        let _ = writeln!(
            out,
            "trial {} failed: input {}, output {}",
            failure.trial, failure.input, failure.output
        );
    }
    let _ = writeln!(out, "elapsed: {} ms", report.elapsed_ms);
    out
}
