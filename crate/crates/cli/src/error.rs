use std::fmt;

use landau_core::Error;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_WITNESS_REGIME: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INPUT: u8 = 65;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub error: anyhow::Error,
}

impl CliError {
    pub fn usage(msg: impl fmt::Display) -> Self {
        Self { code: EXIT_USAGE, error: anyhow::anyhow!("{msg}") }
    }

    pub fn input(msg: impl fmt::Display) -> Self {
        Self { code: EXIT_INPUT, error: anyhow::anyhow!("{msg}") }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter { .. } => EXIT_USAGE,
            Error::NoBoundStates { .. } => EXIT_DOMAIN,
            Error::WitnessRegime { .. } => EXIT_WITNESS_REGIME,
            Error::InvalidSignature(_) | Error::FormDoesNotVanish { .. } | Error::TruncationTooShort { .. } => {
                EXIT_INPUT
            }
            _ => EXIT_CHECK_FAILED,
        };
        Self { code, error: e.into() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self { code: EXIT_CHECK_FAILED, error: e.into() }
    }
}
