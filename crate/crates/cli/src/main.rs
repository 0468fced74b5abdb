mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kacpoly::asymptotics::verify_asymptotics;
use kacpoly::closedform::{a_one, a_one_rho_poly};
use kacpoly::hua::refine;
use kacpoly::inversion::DEFAULT_SEED;
use kacpoly::verify::{run, Suite, VerifyOptions};
use kacpoly::{Error, Partition};
use serde::Serialize;

use output::{ClosedFormSymbolic, ClosedFormValue, TableOutput};

/// Tolerance on the fitted asymptotic constants.
const ASYMPTOTIC_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "kacpoly", version, about = "Refined Kac polynomials of the g-loop quiver")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print A_λ(q) for every |λ| <= nmax, with the totals A_n(q).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        g: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        nmax: u32,
    },
    /// Evaluate the closed formula for A_λ(1).
    Closedform {
        /// Partition as descending parts, e.g. 2,1,1.
        #[arg(long)]
        lambda: Partition,
        /// Value of ρ = 2g - 2.
        #[arg(long, required_unless_present = "symbolic", conflicts_with = "symbolic")]
        rho: Option<u32>,
        /// Print A_λ(1) as a polynomial in ρ instead.
        #[arg(long)]
        symbolic: bool,
    },
    /// Run an identity suite; exit status 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest |λ| for the series suites.
        #[arg(long, default_value_t = 6)]
        max_size: u32,
    },
    /// Fit the q → 1 expansion of the one-variable q-series.
    Asymptotics {
        #[arg(long)]
        a: f64,
        #[arg(long = "T")]
        t: f64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::TooLarge(_) | Error::DivisionByZero | Error::Pole(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(value).map_err(|e| Failure::Verification(e.to_string()))?)
        }
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn threads() -> Result<usize, Failure> {
    match std::env::var("KAC_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Failure::Usage(format!("KAC_THREADS must be an integer >= 1, got {v:?}"))),
        },
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Table { g, nmax } => {
            let table = refine(g, nmax)?;
            let out = TableOutput::build(&table)?;
            emit(format, &out, || out.render_text(&table))
        }
        Command::Closedform { lambda, rho: Some(rho), .. } => {
            let value = a_one(rho, &lambda)?;
            let out = ClosedFormValue { lambda: lambda.to_string(), rho, value: value.to_string() };
            emit(format, &out, || format!("A_({lambda})(1) = {value} at ρ = {rho}\n"))
        }
        Command::Closedform { lambda, .. } => {
            let poly = a_one_rho_poly(&lambda)?;
            let out = ClosedFormSymbolic::new(&lambda, &poly);
            emit(format, &out, || format!("A_({lambda})(1) = {}\n", poly.render()))
        }
        Command::Verify { suite, seed, max_size } => {
            let options = VerifyOptions { seed, max_size, ..VerifyOptions::default() };
            let report = run(suite, &options)?;
            emit(format, &report, || {
                let mut s = String::new();
                for suite in &report.suites {
                    for c in &suite.checks {
                        s += &format!("{} [{}] {}", if c.passed { "PASS" } else { "FAIL" }, suite.suite, c.name);
                        if let Some(w) = &c.witness {
                            s += &format!(" at x^{:?}: {} vs {}", w.monomial, w.left, w.right);
                        }
                        if let Some(d) = &c.detail {
                            s += &format!(" ({d})");
                        }
                        s += "\n";
                    }
                }
                let total: usize = report.suites.iter().map(|s| s.checks.len()).sum();
                let failed: usize = report.suites.iter().map(|s| s.failures().count()).sum();
                s + &format!("{} checks, {failed} failed, seed {seed}\n", total)
            })?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verification("some identities failed".into()))
            }
        }
        Command::Asymptotics { a, t } => {
            let report = verify_asymptotics(a, t)?;
            emit(format, &report, || {
                format!(
                    "a = {a}, T = {t}, z = {:.15}\n\
                     c-1: closed form {:.12}, fit {:.12}, |Δ| = {:.3e}\n\
                     c0:  closed form {:.12}, fit {:.12}, |Δ| = {:.3e}\n",
                    report.z,
                    report.c_minus1,
                    report.c_minus1_fit,
                    report.residuals[0],
                    report.c0,
                    report.c0_fit,
                    report.residuals[1]
                )
            })?;
            if report.passed(ASYMPTOTIC_TOL) {
                Ok(())
            } else {
                Err(Failure::Verification(format!("fit residuals {:?} exceed {ASYMPTOTIC_TOL}", report.residuals)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = threads().and_then(|n| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Verification(e.to_string()))?;
        execute(cli)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
