//! `normcone`: reports, sweeps and brute-force verification from the shell.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use normcone::hilbert::{self, Assumptions, HilbertError};
use normcone::oracle;
use normcone::report::{Report, Verification};
use normcone::semigroup::{NumericalSemigroup, SemigroupError};
use normcone::sweep::{self, SweepReport, ZariskiRange};
use normcone::zariski::{ZariskiError, ZariskiParams};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "normcone", version, about = "Invariants and Gorenstein tests for normal tangent cones")]
struct Cli {
    /// Emit the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Recompute every closed form by brute force and fail on mismatch.
    #[arg(long, global = true)]
    verify: bool,
    /// Length table runs up to H(N).
    #[arg(long = "max-n", value_name = "N", global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroup ring K[[t^m1, ..., t^mn]].
    Semigroup {
        /// Generators, any order.
        #[arg(required = true, num_args = 1..)]
        generators: Vec<u64>,
    },
    /// Zariski-type hypersurface K[[x, y1..ym]]/(x^a - g(y)) with ord g = b.
    Hypersurface {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
    },
    /// Length table from a JSON or CSV file.
    Filtration(FiltrationArgs),
    /// Check every invariant over a parameter range.
    #[command(subcommand)]
    Sweep(SweepCommand),
}

#[derive(Args, Debug)]
struct FiltrationArgs {
    /// JSON `{dim, H, flags}` or CSV rows `n,H`.
    file: PathBuf,
    /// Dimension (required for CSV; overrides the JSON value).
    #[arg(long)]
    dim: Option<u32>,
    /// The base ring is Gorenstein.
    #[arg(long)]
    ambient_gorenstein: bool,
    /// The associated graded ring is Cohen-Macaulay.
    #[arg(long)]
    cm: bool,
    /// depth G(F) >= d - 1.
    #[arg(long)]
    depth: bool,
}

#[derive(Subcommand, Debug)]
enum SweepCommand {
    /// Hypersurfaces over a box of (a, b, m).
    Zariski {
        #[arg(long, default_value = "2..12", value_parser = input::parse_range)]
        a: (u64, u64),
        #[arg(long, default_value = "..60", value_parser = input::parse_range)]
        b: (u64, u64),
        #[arg(long, default_value = "1..3", value_parser = input::parse_range)]
        m: (u64, u64),
    },
    /// Minimal generating systems with smallest generator up to --max-gen.
    Semigroup {
        #[arg(long = "max-gen", default_value_t = 12)]
        max_gen: u64,
        #[arg(long, default_value_t = 40)]
        bound: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::Inconsistent(_) | SemigroupError::Hilbert(HilbertError::Conflict(_)) => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ZariskiError> for CliError {
    fn from(e: ZariskiError) -> Self {
        match e {
            ZariskiError::Inconsistent(_) | ZariskiError::Hilbert(HilbertError::Conflict(_)) => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        CliError::Verification(e.to_string())
    }
}

fn attach(report: &mut Report, verification: Verification) -> Result<(), CliError> {
    let failures: Vec<String> = verification.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
    report.verification = Some(verification);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failures.join("; ")))
    }
}

fn print_report(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("reports serialize"));
    } else {
        print!("{}", render::report_text(report));
    }
}

fn print_sweep(report: &SweepReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("sweeps serialize"));
    } else {
        print!("{}", render::sweep_text(report));
    }
}

/// Prints the report even when verification fails, then reports the failure.
fn emit(mut report: Report, verification: Option<Verification>, json: bool) -> Result<(), CliError> {
    let outcome = match verification {
        Some(v) => attach(&mut report, v),
        None => Ok(()),
    };
    print_report(&report, json);
    outcome
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Semigroup { generators } => {
            let s = NumericalSemigroup::build(&generators)?;
            let report = s.analyze_with(cli.max_n)?;
            let v = cli.verify.then(|| oracle::verify_semigroup(&s)).transpose()?;
            emit(report, v, cli.json)
        }
        Command::Hypersurface { a, b, m } => {
            let p = ZariskiParams::build(a, b, m)?;
            let report = p.analyze_with(cli.max_n)?;
            let v = cli.verify.then(|| oracle::verify_hypersurface(&p)).transpose()?;
            emit(report, v, cli.json)
        }
        Command::Filtration(args) => {
            let flags = Assumptions {
                ambient_gorenstein: args.ambient_gorenstein,
                assoc_graded_cm: args.cm,
                depth_at_least_d_minus_1: args.depth,
            };
            let profile = input::read_profile(&args.file, args.dim, flags, cli.max_n).map_err(CliError::Input)?;
            // contradictory flags are the caller's input problem
            let report = hilbert::analyze_profile(&profile).map_err(|e| CliError::Input(e.to_string()))?;
            let v = cli.verify.then(|| oracle::verify_profile(&profile)).transpose()?;
            emit(report, v, cli.json)
        }
        Command::Sweep(SweepCommand::Zariski { a, b, m }) => {
            let report = sweep::zariski_sweep(ZariskiRange { a, b, m }, cli.verify);
            print_sweep(&report, cli.json);
            sweep_outcome(&report)
        }
        Command::Sweep(SweepCommand::Semigroup { max_gen, bound }) => {
            let report = sweep::semigroup_sweep(max_gen, bound, cli.verify);
            print_sweep(&report, cli.json);
            sweep_outcome(&report)
        }
    }
}

fn sweep_outcome(report: &SweepReport) -> Result<(), CliError> {
    if report.is_clean() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{} invariant violation(s)", report.violations.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("normcone: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
