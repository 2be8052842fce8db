//! The `motivic` command-line front end.

pub mod args;
pub mod commands;
pub mod report;

use std::fmt;

use args::{Cli, Command};

/// Why a command did not succeed, with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// A verification or certification failed.
    Failure(String),
    /// Invalid flags or arguments.
    Usage(String),
    /// The oracle refused an enumeration over its budget.
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Failure(_) => 1,
            Self::Usage(_) => 2,
            Self::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Failure(m) => write!(f, "error: {m}"),
            Self::Usage(m) => write!(f, "usage error: {m}"),
            Self::Budget(m) => write!(f, "refused: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Output of a successful run and its exit code.
pub struct Output {
    pub text: String,
    pub exit_code: u8,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Series(a) => commands::series(a).map(|text| Output { text, exit_code: 0 }),
        Command::Class(a) => commands::class(a).map(|text| Output { text, exit_code: 0 }),
        Command::Verify(a) => {
            let report = commands::verify(a)?;
            let text = if a.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                report.render(!a.no_timing)
            };
            Ok(Output { text, exit_code: if report.pass { 0 } else { 1 } })
        }
    }
}
