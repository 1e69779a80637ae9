//! `landau`: command-line front end for `landau-core`.

mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use config::RunConfig;
use error::{CliError, EXIT_USAGE};

fn run(cli: &Cli) -> Result<u8, CliError> {
    let cfg = RunConfig::resolve(cli)?;
    let outcome = match &cli.command {
        Command::Levels(c) => commands::levels::run(c)?,
        Command::Gabor(c) => commands::gabor::run(c)?,
        Command::Hyper(c) => commands::hyper::run(c, &cfg)?,
        Command::Fuchsian(c) => commands::fuchsian::run(c, &cfg)?,
    };
    output::emit(&outcome.artifact, &cfg)?;
    Ok(outcome.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e.error);
            ExitCode::from(e.code)
        }
    }
}
