//! Grid aggregation of `H(a, b)` over `1 ≤ a, b ≤ x`, and the search for
//! prime pairs solving several of equations 12–15.
//!
//! Pairs are ordered: `(a, b)` and `(b, a)` are separate cells. Third sides
//! are not bounded by `x`. Everything here is serial; callers that want
//! parallelism split the rows and concatenate in row order.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_rational::Ratio;

use crate::arith::{is_prime, perfect_square};
use crate::heron::h_count_oracle;
use crate::prime_case::equations::{equation_values, EqSolutionSet};
use crate::prime_case::{prime_decomp, solve_eqs_8_15, PrimeDecomp};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SurveyRecord {
    pub a: u64,
    pub b: u64,
    pub h: usize,
    pub third_sides: Vec<u64>,
}

pub fn survey_cell(a: u64, b: u64) -> Result<SurveyRecord> {
    let count = h_count_oracle(a, b)?;
    Ok(SurveyRecord { a, b, h: count.count(), third_sides: count.third_sides })
}

/// Records for rows `a ∈ rows`, columns `1..=x`, in `(a, b)` order.
pub fn survey_rows(x: u64, rows: RangeInclusive<u64>) -> Result<Vec<SurveyRecord>> {
    let mut out = Vec::new();
    for a in rows {
        for b in 1..=x {
            out.push(survey_cell(a, b)?);
        }
    }
    Ok(out)
}

pub fn survey_grid(x: u64) -> Result<Vec<SurveyRecord>> {
    survey_rows(x, 1..=x)
}

/// `Σ_{a, b ≤ x} H(a, b)` over ordered pairs.
pub fn total_count(x: u64) -> Result<u64> {
    Ok(survey_grid(x)?.iter().map(|r| r.h as u64).sum())
}

/// Fraction of ordered pairs `a, b ≤ x` with `H(a, b) = 0`.
pub fn zero_fraction(x: u64) -> Result<Ratio<u64>> {
    if x == 0 {
        return Err(Error::Domain("x must be positive"));
    }
    let zeros = survey_grid(x)?.iter().filter(|r| r.h == 0).count() as u64;
    Ok(Ratio::new(zeros, x * x))
}

/// Summary of a finished grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSummary {
    pub x: u64,
    pub total: u64,
    pub zero_cells: u64,
}

impl GridSummary {
    pub fn from_records(x: u64, records: &[SurveyRecord]) -> GridSummary {
        GridSummary {
            x,
            total: records.iter().map(|r| r.h as u64).sum(),
            zero_cells: records.iter().filter(|r| r.h == 0).count() as u64,
        }
    }

    pub fn zero_fraction(&self) -> Ratio<u64> {
        Ratio::new(self.zero_cells, self.x * self.x)
    }
}

fn split_primes(limit: u64) -> Result<Vec<PrimeDecomp>> {
    let mut out = Vec::new();
    let mut p = 5;
    while p <= limit {
        if is_prime(p) {
            out.extend(prime_decomp(p)?);
        }
        p += 4;
    }
    Ok(out)
}

fn square_hits_12_15(pd: PrimeDecomp, qd: PrimeDecomp) -> usize {
    equation_values(pd.p, qd.p, Some(pd), Some(qd))
        .into_iter()
        .filter(|&(eq, v)| eq >= 12 && perfect_square(v).is_some_and(|r| r > 0))
        .count()
}

/// Number of equations 12–15 solved by the pair.
pub fn eq_hits_12_15(p: u64, q: u64) -> Result<usize> {
    Ok(solve_eqs_8_15(p, q)?.hits_in(12..=15))
}

/// Prime pairs `p < q ≤ limit`, both `≡ 1 (mod 4)`, for which at least
/// `min_hits` of equations 12–15 have integer solutions. The equations are
/// symmetric in `p` and `q`, so each unordered pair is reported once.
pub fn multi_solution_search(limit: u64, min_hits: usize) -> Result<Vec<EqSolutionSet>> {
    if limit < 5 || !(1..=4).contains(&min_hits) {
        return Err(Error::Domain("need limit >= 5 and 1 <= min_hits <= 4"));
    }
    crate::check_bound(limit)?;
    let primes = split_primes(limit)?;
    let mut out = Vec::new();
    for (i, &pd) in primes.iter().enumerate() {
        for &qd in &primes[i + 1..] {
            if square_hits_12_15(pd, qd) < min_hits {
                continue;
            }
            let set = solve_eqs_8_15(pd.p, qd.p)?;
            if set.hits_in(12..=15) >= min_hits {
                out.push(set);
            }
        }
    }
    Ok(out)
}
