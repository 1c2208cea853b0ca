//! Library side of the `nilrep` command: the algebra catalog and the
//! verification suites.

pub mod catalog;
pub mod suites;

use std::fmt;

/// Exit code 2 for `Usage`, 1 for `Falsified`.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Falsified(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Falsified(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Falsified(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<nilrep_gutkin::GutkinError> for CliError {
    fn from(e: nilrep_gutkin::GutkinError) -> Self {
        match e {
            nilrep_gutkin::GutkinError::Core(e) => e.into(),
            other => CliError::Falsified(other.to_string()),
        }
    }
}
