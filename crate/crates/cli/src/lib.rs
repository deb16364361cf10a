//! Library half of the shiftlab command-line tool: corpus generation,
//! comparison reports, the verification suite, and output formatting.

pub mod corpus;
pub mod output;
pub mod report;

use std::fmt;

/// Errors surfaced by the command-line layer, split by exit code: usage and
/// input problems exit with 2, a failed property check exits with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
    Core(shiftlab::ShiftError),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

impl From<shiftlab::ShiftError> for CliError {
    fn from(e: shiftlab::ShiftError) -> CliError {
        CliError::Core(e)
    }
}
