//! The eight third-side equations for a pair of primes.
//!
//! With `p = u² + v²`, `q = z² + w²`, `A = u² − v²`, `B = z² − w²` and
//! `C = 8uvzw`, a Heron triangle `(p, q, x)` has `x²` equal to one of
//!
//! | eq | value                   |
//! |----|-------------------------|
//! | 8  | `p² + q² + 2pB`         |
//! | 9  | `p² + q² − 2pB`         |
//! | 10 | `p² + q² + 2qA`         |
//! | 11 | `p² + q² − 2qA`         |
//! | 12 | `p² + q² − 2AB − C`     |
//! | 13 | `p² + q² − 2AB + C`     |
//! | 14 | `p² + q² + 2AB − C`     |
//! | 15 | `p² + q² + 2AB + C`     |
//!
//! Equations 8 and 9 only need `q`'s decomposition, 10 and 11 only `p`'s.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{prime_decomp, require_odd_prime, PrimeDecomp};
use crate::arith::perfect_square;
use crate::heron::is_heron;
use crate::{Error, Result};

/// Equation id → third side, for the equations that were evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EqSolutionSet {
    pub p: u64,
    pub q: u64,
    pub solutions: BTreeMap<u8, Option<u64>>,
}

impl EqSolutionSet {
    pub fn get(&self, eq: u8) -> Option<u64> {
        self.solutions.get(&eq).copied().flatten()
    }

    pub fn evaluated(&self) -> impl Iterator<Item = u8> + '_ {
        self.solutions.keys().copied()
    }

    /// Equations with an integer solution.
    pub fn solved(&self) -> impl Iterator<Item = (u8, u64)> + '_ {
        self.solutions.iter().filter_map(|(&eq, x)| x.map(|x| (eq, x)))
    }

    /// Distinct third sides, ascending.
    pub fn third_sides(&self) -> Vec<u64> {
        let mut sides: Vec<u64> = self.solved().map(|(_, x)| x).collect();
        sides.sort_unstable();
        sides.dedup();
        sides
    }

    pub fn hits_in(&self, eqs: core::ops::RangeInclusive<u8>) -> usize {
        self.solved().filter(|(eq, _)| eqs.contains(eq)).count()
    }
}

fn sq(x: i128) -> i128 {
    x * x
}

/// Right-hand sides of the equations available for the given decompositions,
/// as `(eq, value)` pairs.
pub fn equation_values(p: u64, q: u64, pd: Option<PrimeDecomp>, qd: Option<PrimeDecomp>) -> Vec<(u8, i128)> {
    let (pi, qi) = (p as i128, q as i128);
    let base = sq(pi) + sq(qi);
    let mut out = Vec::with_capacity(8);
    if let Some(d) = qd {
        let b = sq(d.u as i128) - sq(d.v as i128);
        out.push((8, base + 2 * pi * b));
        out.push((9, base - 2 * pi * b));
    }
    if let Some(d) = pd {
        let a = sq(d.u as i128) - sq(d.v as i128);
        out.push((10, base + 2 * qi * a));
        out.push((11, base - 2 * qi * a));
    }
    if let (Some(pd), Some(qd)) = (pd, qd) {
        let (u, v, z, w) = (pd.u as i128, pd.v as i128, qd.u as i128, qd.v as i128);
        let ab2 = 2 * (sq(u) - sq(v)) * (sq(z) - sq(w));
        let c = 8 * u * v * z * w;
        out.push((12, base - ab2 - c));
        out.push((13, base - ab2 + c));
        out.push((14, base + ab2 - c));
        out.push((15, base + ab2 + c));
    }
    out
}

/// Equations 12–15 rewritten as sums of two squares:
/// `(A ∓ B)² + 4(uv ∓ zw)²`, in the order 12, 13, 14, 15.
pub fn pythagorean_forms(pd: PrimeDecomp, qd: PrimeDecomp) -> [i128; 4] {
    let (u, v, z, w) = (pd.u as i128, pd.v as i128, qd.u as i128, qd.v as i128);
    let a = sq(u) - sq(v);
    let b = sq(z) - sq(w);
    let minus = sq(u * v - z * w);
    let plus = sq(u * v + z * w);
    [sq(a - b) + 4 * minus, sq(a - b) + 4 * plus, sq(a + b) + 4 * minus, sq(a + b) + 4 * plus]
}

/// Evaluates every equation available for the pair and records the third
/// sides that are positive perfect squares and complete a Heron triangle.
///
/// Both primes ≡ 1 (mod 4) evaluates all eight; if only `q` (resp. `p`) is,
/// only 8–9 (resp. 10–11) are evaluated.
pub fn solve_eqs_8_15(p: u64, q: u64) -> Result<EqSolutionSet> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return Err(Error::Domain("the equations need distinct primes"));
    }
    let pd = prime_decomp(p)?;
    let qd = prime_decomp(q)?;
    if pd.is_none() && qd.is_none() {
        return Err(Error::Domain("no prime of the pair is 1 mod 4"));
    }
    let mut solutions = BTreeMap::new();
    for (eq, value) in equation_values(p, q, pd, qd) {
        let x = match perfect_square(value) {
            Some(r) if r > 0 => {
                let x = u64::try_from(r).map_err(|_| Error::Overflow)?;
                is_heron(p, q, x)?.map(|_| x)
            }
            _ => None,
        };
        solutions.insert(eq, x);
    }
    Ok(EqSolutionSet { p, q, solutions })
}
