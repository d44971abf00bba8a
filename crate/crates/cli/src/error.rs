use std::io;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const OVERFLOW: i32 = 3;
    pub const IO: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("out of range: {0}")]
    Overflow(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => exit::INVALID_INPUT,
            CliError::Overflow(_) => exit::OVERFLOW,
            CliError::Verification(_) => exit::VERIFICATION,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => exit::IO,
        }
    }
}

impl From<heron_core::Error> for CliError {
    fn from(e: heron_core::Error) -> Self {
        use heron_core::Error as E;
        match e {
            E::Domain(msg) => CliError::Invalid(msg.into()),
            E::OutOfRange { .. } | E::Overflow => CliError::Overflow(e.to_string()),
            E::Internal(msg) => CliError::Verification(msg.into()),
        }
    }
}
