//! Command-line front end: coefficient tables, ellipse evaluation, extrema,
//! critical radii, asymptotic sweeps, figure data and interpolation bounds.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use output::InvariantFailure;

const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InvariantFailure>().is_some() {
        return EXIT_INVARIANT;
    }
    match err.downcast_ref::<jacobi_ellipse::Error>() {
        Some(jacobi_ellipse::Error::Invariant(_)) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
