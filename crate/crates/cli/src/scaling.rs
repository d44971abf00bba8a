//! Growth of `S(x) = Σ_{a, b ≤ x} H(a, b)` across grid sizes.
//!
//! The exponent is the ordinary least-squares slope of `ln S(x)` against
//! `ln x`, over the points with `S(x) > 0`. It is undefined with fewer than
//! two such points.

use heron_core::survey::{GridSummary, SurveyRecord};
use serde::{Deserialize, Serialize};

use crate::parallel::survey_grid;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub xs: Vec<u64>,
    pub s_values: Vec<u64>,
    pub exponent: Option<f64>,
    pub zero_fractions: Vec<f64>,
}

/// Least-squares slope of `ln s` on `ln x`, skipping `s = 0`.
pub fn fit_exponent(points: &[(u64, u64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> =
        points.iter().filter(|&&(_, s)| s > 0).map(|&(x, s)| ((x as f64).ln(), (s as f64).ln())).collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    Some(sxy / sxx)
}

/// Builds the report from the records of the largest grid; smaller grids
/// are sub-squares of it.
pub fn report_from_records(xs: &[u64], records: &[SurveyRecord]) -> ScalingReport {
    let mut s_values = Vec::with_capacity(xs.len());
    let mut zero_fractions = Vec::with_capacity(xs.len());
    for &x in xs {
        let cells: Vec<SurveyRecord> = records.iter().filter(|r| r.a <= x && r.b <= x).cloned().collect();
        let summary = GridSummary::from_records(x, &cells);
        s_values.push(summary.total);
        let zf = summary.zero_fraction();
        zero_fractions.push(*zf.numer() as f64 / *zf.denom() as f64);
    }
    let points: Vec<(u64, u64)> = xs.iter().copied().zip(s_values.iter().copied()).collect();
    ScalingReport { xs: xs.to_vec(), s_values, exponent: fit_exponent(&points), zero_fractions }
}

/// Runs the largest grid once and reports every `x` in `xs`.
///
/// `xs` must be strictly ascending, positive, with at least two entries.
pub fn scaling_report(xs: &[u64], workers: usize) -> Result<ScalingReport, CliError> {
    validate_xs(xs)?;
    let records = survey_grid(*xs.last().unwrap(), workers)?;
    Ok(report_from_records(xs, &records))
}

pub fn validate_xs(xs: &[u64]) -> Result<(), CliError> {
    if xs.len() < 2 {
        return Err(CliError::Invalid("scaling needs at least two grid sizes".into()));
    }
    if xs[0] == 0 || xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Invalid("grid sizes must be positive and strictly ascending".into()));
    }
    Ok(())
}
