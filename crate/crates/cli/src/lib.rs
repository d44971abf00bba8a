//! Std companion to `heron-core`: parallel grid surveys, the scaling fit,
//! CSV/JSON formats, invariant suites and the `heron` command-line tool.

pub mod commands;
pub mod error;
pub mod limits;
pub mod output;
pub mod parallel;
pub mod scaling;
pub mod verify;

pub use error::CliError;
