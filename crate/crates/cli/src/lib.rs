//! Library side of the `nmi` binary: file formats, report rendering, and the
//! per-subcommand drivers. Kept as a library so integration tests can drive
//! the exact code paths the binary uses.

pub mod commands;
pub mod formats;
pub mod report;

use std::fmt;

use nmi_core::Error as CoreError;

use formats::ParseError;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(ParseError),
    Core(CoreError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// Stable exit codes: 0 verdict, 2 parse error, 3 budget exceeded,
    /// 4 unsupported input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Core(CoreError::BudgetExceeded(_)) => 3,
            CliError::Core(_) => 4,
        }
    }
}
