//! Heron triangles with two prime sides.
//!
//! For odd primes `p ≡ 1 (mod 4)` write `p = u² + v²` with `u` odd and `v`
//! even, and likewise `q = z² + w²`. A third side `x` of a Heron triangle
//! `(p, q, x)` is even and solves one of eight quadratic equations in these
//! parameters ([`equations`]). This module classifies `H(p, q)` by residue
//! class, characterizes solvability of the first pair of equations through
//! divisors ([`delta`]), builds explicit families ([`families`]) and
//! decomposes solutions of the last equation into witnesses ([`witness`]).

pub mod delta;
pub mod equations;
pub mod families;
pub mod witness;

use alloc::vec::Vec;

use crate::arith::{is_prime, prime_two_squares};
use crate::heron::is_heron;
use crate::{check_bound, Error, Result};

pub use delta::{delta_candidates, lemma25_report, lemma25_verify, DeltaCandidate, DeltaVariant, Lemma25Report};
pub use equations::{equation_values, pythagorean_forms, solve_eqs_8_15, EqSolutionSet};
pub use families::{family_example1, family_prop28, Example1Member, Prop28Outcome};
pub use witness::{
    cor211_check, thm210_check, thm29_construct, thm29_decompose, Cor211, Thm210, Thm29Construction, Thm29Witness,
};

/// `p = u² + v²` with `u` odd and `v` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeDecomp {
    pub p: u64,
    pub u: u64,
    pub v: u64,
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    check_bound(p)?;
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::Domain("expected an odd prime"));
    }
    Ok(())
}

/// The unique decomposition of an odd prime `p ≡ 1 (mod 4)`; `None` when
/// `p ≡ 3 (mod 4)`.
pub fn prime_decomp(p: u64) -> Result<Option<PrimeDecomp>> {
    require_odd_prime(p)?;
    Ok(prime_two_squares(p).map(|(x, y)| {
        let (u, v) = if x % 2 == 1 { (x, y) } else { (y, x) };
        PrimeDecomp { p, u, v }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum CaseTag {
    /// Both primes `≡ 3 (mod 4)`: `H = 0`.
    #[cfg_attr(feature = "serde", serde(rename = "both-3mod4"))]
    Both3Mod4,
    /// `p = q ≡ 1 (mod 4)`: `H = 2`.
    #[cfg_attr(feature = "serde", serde(rename = "equal-1mod4"))]
    Equal1Mod4,
    /// Exactly one prime `≡ 1 (mod 4)`: `H ≤ 2`.
    Mixed,
    /// Distinct primes, both `≡ 1 (mod 4)`: `H ≤ 5`.
    #[cfg_attr(feature = "serde", serde(rename = "both-1mod4"))]
    Both1Mod4,
    /// One side is 2, which no Heron triangle has: `H = 0`.
    OutOfScope,
}

impl CaseTag {
    pub fn of(p: u64, q: u64) -> CaseTag {
        match (p % 4, q % 4) {
            _ if p == 2 || q == 2 => CaseTag::OutOfScope,
            (3, 3) => CaseTag::Both3Mod4,
            (1, 1) if p == q => CaseTag::Equal1Mod4,
            (1, 1) => CaseTag::Both1Mod4,
            _ => CaseTag::Mixed,
        }
    }

    /// Whether `h` is allowed for this case.
    pub fn admits(self, h: usize) -> bool {
        match self {
            CaseTag::Both3Mod4 | CaseTag::OutOfScope => h == 0,
            CaseTag::Equal1Mod4 => h == 2,
            CaseTag::Mixed => h <= 2,
            CaseTag::Both1Mod4 => h <= 5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Both3Mod4 => "both-3mod4",
            CaseTag::Equal1Mod4 => "equal-1mod4",
            CaseTag::Mixed => "mixed",
            CaseTag::Both1Mod4 => "both-1mod4",
            CaseTag::OutOfScope => "out-of-scope",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub p: u64,
    pub q: u64,
    pub tag: CaseTag,
    /// Per-equation detail for distinct primes with at least one `≡ 1 (mod 4)`.
    pub solutions: Option<EqSolutionSet>,
    pub third_sides: Vec<u64>,
    pub h: usize,
}

/// Classifies the pair and computes `H(p, q)` from the closed forms.
///
/// Composite inputs are rejected. The prime 2 is accepted and classified as
/// out of scope with `H = 0`.
pub fn classify_prime_pair(p: u64, q: u64) -> Result<Classification> {
    for n in [p, q] {
        check_bound(n)?;
        if !is_prime(n) {
            return Err(Error::Domain("expected a prime"));
        }
    }
    let tag = CaseTag::of(p, q);
    let (solutions, third_sides) = match tag {
        CaseTag::Both3Mod4 | CaseTag::OutOfScope => (None, Vec::new()),
        CaseTag::Equal1Mod4 => {
            let d = prime_decomp(p)?.ok_or(Error::Internal("missing decomposition"))?;
            let mut sides = Vec::new();
            for x in [4 * d.u * d.v, 2 * d.u.abs_diff(d.v) * (d.u + d.v)] {
                if is_heron(p, p, x)?.is_some() {
                    sides.push(x);
                }
            }
            sides.sort_unstable();
            sides.dedup();
            (None, sides)
        }
        CaseTag::Mixed | CaseTag::Both1Mod4 => {
            let set = solve_eqs_8_15(p, q)?;
            let sides = set.third_sides();
            (Some(set), sides)
        }
    };
    let h = third_sides.len();
    if !tag.admits(h) {
        return Err(Error::Internal("H outside the bound for its residue class"));
    }
    Ok(Classification { p, q, tag, solutions, third_sides, h })
}
