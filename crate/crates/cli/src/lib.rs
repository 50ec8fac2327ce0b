//! Command-line front end for `tropgen-core`: input files, commands and
//! exit codes.
//!
//! Exit codes: 0 success, 2 a check or certification failed, 3 a
//! precondition failed, 1 anything else.

pub mod args;
pub mod input;
pub mod run;

use thiserror::Error;
use tropgen_core::Error;

pub use args::Cli;
pub use input::{parse_input, print_input, read_input, AnyInput, CoeffMode, Input};
pub use run::{complex_text, execute, render, run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::CertificationFailed { .. }) => 2,
            CliError::Core(
                Error::PreconditionFailed(_)
                | Error::NotPrincipal { .. }
                | Error::DegreeTooSmall { .. }
                | Error::DimensionMismatch(_),
            ) => 3,
            _ => 1,
        }
    }
}
