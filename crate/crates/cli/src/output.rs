//! File formats and the JSON output envelope.
//!
//! Survey CSV: header `a,b,h,third_sides`, one row per cell, third sides
//! joined with `;` (empty when `h = 0`). The scaling report is written as a
//! JSON object with fields `xs`, `s_values`, `exponent`, `zero_fractions`.

use std::io::{Read, Write};

use heron_core::survey::SurveyRecord;
use serde::{Deserialize, Serialize};

use crate::scaling::ScalingReport;
use crate::CliError;

pub const CSV_HEADER: [&str; 4] = ["a", "b", "h", "third_sides"];

pub fn write_survey_csv<W: Write>(records: &[SurveyRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let sides = r.third_sides.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
        w.write_record([r.a.to_string(), r.b.to_string(), r.h.to_string(), sides])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_survey_csv<R: Read>(input: R) -> Result<Vec<SurveyRecord>, CliError> {
    let mut rdr = csv::Reader::from_reader(input);
    if rdr.headers()?.iter().ne(CSV_HEADER) {
        return Err(CliError::Invalid("unexpected survey CSV header".into()));
    }
    let bad = |what: &str| CliError::Invalid(format!("malformed survey CSV field: {what}"));
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let num = |i: usize| row[i].parse::<u64>().map_err(|_| bad(CSV_HEADER[i]));
        let third_sides = if row[3].is_empty() {
            Vec::new()
        } else {
            row[3].split(';').map(|s| s.parse::<u64>().map_err(|_| bad("third_sides"))).collect::<Result<_, _>>()?
        };
        let record = SurveyRecord { a: num(0)?, b: num(1)?, h: num(2)? as usize, third_sides };
        if record.h != record.third_sides.len() {
            return Err(bad("h"));
        }
        out.push(record);
    }
    Ok(out)
}

pub fn write_report_json<W: Write>(report: &ScalingReport, mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, report)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Wrapper around every JSON result printed by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope<T> {
    pub command: String,
    pub input: serde_json::Value,
    pub result: T,
    pub elapsed_ms: f64,
}
