//! `cocal7`: reports on Lie algebras, nearly half-flat SU(3) searches and locally
//! conformally cocalibrated G2 searches, all in exact arithmetic.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Mode, SolveArgs, VerifyArgs};
use input::{resolve, resolve_opt, CliError};
use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "cocal7",
    version,
    about = "Exact exterior calculus reports for nilpotent Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "COCAL7_FORMAT",
        default_value = "text"
    )]
    format: Format,
    /// Exit with status 3 when the report carries diagnostics.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse structure equations; report Jacobi, lower central series and center.
    Parse {
        /// Literal such as `(0,0,0,e^{12},e^{13},e^{23})`, a catalog name, or `@file`.
        algebra: String,
    },
    /// List the built-in catalog, or report on one entry.
    Catalog { name: Option<String> },
    /// Solve `d psi = 1/2 omega^2` (psi mode) or `d phi = theta ^ phi` (phi mode).
    Solve {
        algebra: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Append a central direction e_7 to a 6-dimensional algebra first.
        #[arg(long)]
        extend: bool,
    },
    /// Check whether `phi` is locally conformally cocalibrated with Lee form `theta`.
    Verify {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Direction with `theta(X) = 1`, e.g. `E_7`; defaults to the dual of theta.
        #[arg(long = "x", allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[arg(long)]
        extend: bool,
    },
}

fn quote(arg: &str) -> String {
    let plain = !arg.is_empty()
        && arg
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "_^{}+-*/,.=@:()".contains(c));
    if plain {
        arg.to_string()
    } else {
        format!("'{}'", arg.replace('\'', r"'\''"))
    }
}

fn echo() -> String {
    let mut parts = vec!["cocal7".to_string()];
    parts.extend(std::env::args().skip(1).map(|a| quote(&a)));
    parts.join(" ")
}

fn run(command: &Command) -> Result<Report, CliError> {
    let report = match command {
        Command::Parse { algebra } => {
            let algebra = resolve(algebra)?;
            let mut report = Report::new(echo(), &["parse".into(), algebra.clone()]);
            commands::parse(&mut report, &algebra)?;
            report
        }
        Command::Catalog { name } => {
            let mut inputs = vec!["catalog".to_string()];
            inputs.extend(name.clone());
            let mut report = Report::new(echo(), &inputs);
            commands::catalog(&mut report, name.as_deref())?;
            report
        }
        Command::Solve {
            algebra,
            mode,
            omega,
            theta,
            extend,
        } => {
            let args = SolveArgs {
                algebra: resolve(algebra)?,
                mode: *mode,
                omega: resolve_opt(omega.as_ref())?,
                theta: resolve_opt(theta.as_ref())?,
                extend: *extend,
            };
            let inputs = vec![
                "solve".to_string(),
                args.algebra.clone(),
                format!("mode={mode:?}"),
                format!("omega={}", args.omega.as_deref().unwrap_or("")),
                format!("theta={}", args.theta.as_deref().unwrap_or("")),
                format!("extend={extend}"),
            ];
            let mut report = Report::new(echo(), &inputs);
            commands::solve(&mut report, &args)?;
            report
        }
        Command::Verify {
            algebra,
            phi,
            theta,
            x,
            omega,
            extend,
        } => {
            let args = VerifyArgs {
                algebra: resolve(algebra)?,
                phi: resolve(phi)?,
                theta: resolve(theta)?,
                x: resolve_opt(x.as_ref())?,
                omega: resolve_opt(omega.as_ref())?,
                extend: *extend,
            };
            let inputs = vec![
                "verify".to_string(),
                args.algebra.clone(),
                format!("phi={}", args.phi),
                format!("theta={}", args.theta),
                format!("x={}", args.x.as_deref().unwrap_or("")),
                format!("omega={}", args.omega.as_deref().unwrap_or("")),
                format!("extend={extend}"),
            ];
            let mut report = Report::new(echo(), &inputs);
            commands::verify(&mut report, &args)?;
            report
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if cli.strict && !report.diagnostics().is_empty() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
