//! Divisor characterization of equations 8 and 9.
//!
//! For `q = z² + w²` (`z` odd), equation 8 has an integer solution for the
//! prime `p` exactly when `p = z²/δ + w²/(δ + 1)` for some `δ` with `δ | z²`
//! and `(δ + 1) | w²`. Equation 9 is the same statement with the roles of
//! `z` and `w` exchanged: `p = z²/(μ + 1) + w²/μ` with `μ | w²` and
//! `(μ + 1) | z²`. Both searches range over a finite divisor set.

use alloc::vec::Vec;

use super::equations::equation_values;
use super::{prime_decomp, require_odd_prime};
use crate::arith::{factorize, is_prime, perfect_square};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DeltaVariant {
    Eq8,
    Eq9,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DeltaCandidate {
    pub delta: u64,
    pub p: u64,
    pub p_is_prime: bool,
}

/// Every admissible `δ` (or `μ`) for `q`, ascending, with the `p` it yields.
pub fn delta_candidates(q: u64, variant: DeltaVariant) -> Result<Vec<DeltaCandidate>> {
    let d = prime_decomp(q)?.ok_or(Error::Domain("q must be 1 mod 4"))?;
    let (z2, w2) = (d.u * d.u, d.v * d.v);
    // the divisor runs over `dividing`, the shifted divisor must divide `shifted`
    let (dividing, other) = match variant {
        DeltaVariant::Eq8 => (d.u, w2),
        DeltaVariant::Eq9 => (d.v, z2),
    };
    let square = dividing * dividing;
    let mut out = Vec::new();
    for delta in factorize(dividing)?.pow(2).divisors() {
        if other % (delta + 1) != 0 {
            continue;
        }
        let p = square / delta + other / (delta + 1);
        out.push(DeltaCandidate { delta, p, p_is_prime: is_prime(p) });
    }
    Ok(out)
}

/// Both sides of the equivalence for one variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma25Side {
    pub equation_solvable: bool,
    pub p_in_candidates: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma25Report {
    pub eq8: Lemma25Side,
    pub eq9: Lemma25Side,
}

impl Lemma25Report {
    pub fn holds(&self) -> bool {
        self.eq8.equation_solvable == self.eq8.p_in_candidates && self.eq9.equation_solvable == self.eq9.p_in_candidates
    }
}

/// Evaluates equations 8 and 9 directly and compares with the candidate lists.
pub fn lemma25_report(p: u64, q: u64) -> Result<Lemma25Report> {
    require_odd_prime(p)?;
    let qd = prime_decomp(q)?.ok_or(Error::Domain("q must be 1 mod 4"))?;
    let values = equation_values(p, q, None, Some(qd));
    let solvable =
        |eq: u8| values.iter().find(|&&(id, _)| id == eq).and_then(|&(_, v)| perfect_square(v)).is_some_and(|r| r > 0);
    let listed = |variant| -> Result<bool> { Ok(delta_candidates(q, variant)?.iter().any(|c| c.p == p)) };
    Ok(Lemma25Report {
        eq8: Lemma25Side { equation_solvable: solvable(8), p_in_candidates: listed(DeltaVariant::Eq8)? },
        eq9: Lemma25Side { equation_solvable: solvable(9), p_in_candidates: listed(DeltaVariant::Eq9)? },
    })
}

pub fn lemma25_verify(p: u64, q: u64) -> Result<bool> {
    Ok(lemma25_report(p, q)?.holds())
}
