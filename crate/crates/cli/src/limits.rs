//! Input ceilings for the command-line tool.

use heron_core::MAX_INPUT;

use crate::CliError;

/// Environment variable that lowers the input ceiling.
pub const MAX_INPUT_ENV: &str = "HERON_MAX_INPUT";

/// Largest grid accepted by `survey`.
pub const SURVEY_CEILING: u64 = 500;

/// Effective ceiling for sides and primes: [`MAX_INPUT`], lowered by
/// `HERON_MAX_INPUT` when set. Values above the library bound are ignored.
pub fn max_input() -> Result<u64, CliError> {
    parse_ceiling(std::env::var(MAX_INPUT_ENV).ok().as_deref())
}

pub fn parse_ceiling(raw: Option<&str>) -> Result<u64, CliError> {
    match raw {
        None => Ok(MAX_INPUT),
        Some(s) => {
            let v: u64 =
                s.trim().parse().map_err(|_| CliError::Invalid(format!("{MAX_INPUT_ENV} is not an integer: {s:?}")))?;
            Ok(v.min(MAX_INPUT))
        }
    }
}

/// Rejects zero (invalid) and values above the ceiling (out of range).
pub fn check_input(name: &str, value: u64, ceiling: u64) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Invalid(format!("{name} must be positive")));
    }
    if value > ceiling {
        return Err(CliError::Overflow(format!("{name} = {value} exceeds the ceiling {ceiling}")));
    }
    Ok(())
}
