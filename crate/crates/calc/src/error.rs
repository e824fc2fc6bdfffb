use std::path::PathBuf;

use thiserror::Error;

/// Exit status for a well-formed request the calculators reject.
pub const EXIT_VALIDATION: u8 = 2;
/// `EX_USAGE`
pub const EXIT_USAGE: u8 = 64;
/// `EX_DATAERR`: a numeric literal or data file failed to parse.
pub const EXIT_DATA: u8 = 65;
/// `EX_NOINPUT`
pub const EXIT_NO_INPUT: u8 = 66;
/// `EX_CONFIG`
pub const EXIT_CONFIG: u8 = 78;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("malformed numeric literal {literal:?}: expected {expected}")]
    Numeric {
        literal: String,
        expected: &'static str,
    },

    #[error(transparent)]
    Validation(#[from] blowup_core::Error),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid table file {path}: {source}")]
    TableFile {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("invalid config {path}: {message}")]
    Config { path: PathBuf, message: String },

    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn numeric(literal: &str, expected: &'static str) -> Self {
        CliError::Numeric {
            literal: literal.to_owned(),
            expected,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric { .. } | CliError::TableFile { .. } => EXIT_DATA,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Read { .. } => EXIT_NO_INPUT,
            CliError::Config { .. } => EXIT_CONFIG,
            CliError::Output(_) => 74,
        }
    }

    /// Short machine-readable tag used in error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Numeric { .. } => "numeric-literal",
            CliError::Validation(_) => "validation",
            CliError::Read { .. } => "read",
            CliError::TableFile { .. } => "table-file",
            CliError::Config { .. } => "config",
            CliError::Output(_) => "output",
        }
    }
}
