mod args;
mod commands;
mod record;

use std::process::ExitCode;

use clap::Parser;
use spectral_core::par::Execution;
use thiserror::Error;

use args::{Cli, Command, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numeric(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }
}

impl From<spectral_core::Error> for CliError {
    fn from(e: spectral_core::Error) -> Self {
        use spectral_core::Error as E;
        match e {
            E::NonConvergence { .. } | E::DegenerateFit(_) | E::PolynomialMismatch { .. } => {
                CliError::Numeric(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<Option<String>, CliError> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let (name, outcome) = match &cli.command {
        Command::SphereAction(a) => ("sphere-action", commands::sphere_action(a, exec)?),
        Command::LemmaVerify(a) => ("lemma-verify", commands::lemma_verify(a)?),
        Command::HeatKernel(a) => ("heat-kernel", commands::heat_kernel(a)?),
        Command::Qsphere(a) => ("qsphere", commands::qsphere(a)?),
        Command::Report => ("report", commands::report(exec)),
    };
    let rendered = match cli.format {
        Format::Json => record::render_json(name, &outcome.records),
        Format::Csv => record::render_csv(&outcome.records),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(outcome.failure)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("error: {failure}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
