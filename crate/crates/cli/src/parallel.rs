//! Row-partitioned survey runs.
//!
//! Workers pull whole rows `a` from a shared counter; the merge sorts by
//! `(a, b)`, so the output never depends on the worker count or on timing.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use heron_core::survey::{survey_rows, SurveyRecord};

/// All cells `1 ≤ a, b ≤ x`, sorted by `(a, b)`.
pub fn survey_grid(x: u64, workers: usize) -> Result<Vec<SurveyRecord>, heron_core::Error> {
    let workers = workers.max(1);
    if workers == 1 || x < 2 {
        return survey_rows(x, 1..=x);
    }
    let next_row = AtomicU64::new(1);
    let rows: Mutex<Vec<(u64, Vec<SurveyRecord>)>> = Mutex::new(Vec::with_capacity(x as usize));
    let first_error: Mutex<Option<heron_core::Error>> = Mutex::new(None);
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let a = next_row.fetch_add(1, Ordering::Relaxed);
                if a > x {
                    break;
                }
                match survey_rows(x, a..=a) {
                    Ok(records) => rows.lock().unwrap().push((a, records)),
                    Err(e) => {
                        first_error.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    let mut rows = rows.into_inner().unwrap();
    rows.sort_unstable_by_key(|(a, _)| *a);
    let mut out: Vec<SurveyRecord> = rows.into_iter().flat_map(|(_, r)| r).collect();
    out.sort_by_key(|r| (r.a, r.b));
    Ok(out)
}
