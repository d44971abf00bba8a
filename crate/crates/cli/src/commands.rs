//! Subcommand bodies. Each returns a serializable payload; printing and exit
//! codes are left to the binary.

use heron_core::heron::{h_count_angles, h_count_oracle, HCount};
use heron_core::prime_case::{
    classify_prime_pair, family_example1, family_prop28, Classification, Example1Member, Prop28Outcome,
};
use heron_core::survey::{GridSummary, SurveyRecord};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

use crate::limits::{check_input, SURVEY_CEILING};
use crate::output::{write_report_json, write_survey_csv};
use crate::parallel::survey_grid;
use crate::scaling::{report_from_records, validate_xs, ScalingReport};
use crate::verify::{self, CheckOutcome, Suite};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Angles,
}

pub fn count(a: u64, b: u64, method: Method, ceiling: u64) -> Result<HCount, CliError> {
    check_input("a", a, ceiling)?;
    check_input("b", b, ceiling)?;
    Ok(match method {
        Method::Oracle => h_count_oracle(a, b)?,
        Method::Angles => h_count_angles(a, b)?,
    })
}

pub fn classify(p: u64, q: u64, ceiling: u64) -> Result<Classification, CliError> {
    check_input("p", p, ceiling)?;
    check_input("q", q, ceiling)?;
    Ok(classify_prime_pair(p, q)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyResult {
    Example1 { s: u64, t: u64, member: Option<Example1Member> },
    Prop28 { i: u64, j: u64, k: u64, l: u64, outcome: Option<Prop28Outcome> },
}

pub fn family_example(s: u64, t: u64) -> Result<FamilyResult, CliError> {
    Ok(FamilyResult::Example1 { s, t, member: family_example1(s, t)? })
}

pub fn family_prop(i: u64, j: u64, k: u64, l: u64) -> Result<FamilyResult, CliError> {
    Ok(FamilyResult::Prop28 { i, j, k, l, outcome: family_prop28(i, j, k, l)? })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub x: u64,
    pub total: u64,
    pub zero_cells: u64,
    pub cells: u64,
    pub report: Option<ScalingReport>,
    pub csv_path: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
}

/// Doubling ladder ending at `max`, e.g. 100 -> [12, 25, 50, 100].
pub fn default_xs(max: u64) -> Vec<u64> {
    let mut xs = Vec::new();
    let mut x = max;
    while x >= 8 && xs.len() < 4 {
        xs.push(x);
        x /= 2;
    }
    xs.reverse();
    xs
}

pub struct SurveyRun {
    pub summary: SurveySummary,
    pub records: Vec<SurveyRecord>,
}

pub fn survey(
    max: u64,
    workers: usize,
    xs: Option<Vec<u64>>,
    out: Option<&Path>,
    ceiling: u64,
) -> Result<SurveyRun, CliError> {
    check_input("max", max, ceiling.min(SURVEY_CEILING))?;
    if workers == 0 {
        return Err(CliError::Invalid("workers must be at least 1".into()));
    }
    let xs = match xs {
        Some(xs) => {
            validate_xs(&xs)?;
            if xs.last() > Some(&max) {
                return Err(CliError::Invalid("xs must not exceed max".into()));
            }
            Some(xs)
        }
        None => Some(default_xs(max)).filter(|xs| xs.len() >= 2),
    };
    let records = survey_grid(max, workers)?;
    let grid = GridSummary::from_records(max, &records);
    let report = xs.map(|xs| report_from_records(&xs, &records));

    let (mut csv_path, mut report_path) = (None, None);
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        let path = dir.join("survey.csv");
        write_survey_csv(&records, fs::File::create(&path)?)?;
        csv_path = Some(path);
        if let Some(report) = &report {
            let path = dir.join("scaling.json");
            write_report_json(report, fs::File::create(&path)?)?;
            report_path = Some(path);
        }
    }
    let summary = SurveySummary {
        x: max,
        total: grid.total,
        zero_cells: grid.zero_cells,
        cells: max * max,
        report,
        csv_path,
        report_path,
    };
    Ok(SurveyRun { summary, records })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max: u64,
    pub passed: bool,
    pub warning: Option<String>,
    pub outcomes: Vec<CheckOutcome>,
}

pub fn verify(suite: Suite, max: u64, report: impl FnMut(&CheckOutcome)) -> VerifyReport {
    let warning = (max == 0).then(|| "max = 0: every check is vacuous".to_string());
    let outcomes = verify::run(suite, max, report);
    VerifyReport { suite, max, passed: outcomes.iter().all(|o| o.passed), warning, outcomes }
}
