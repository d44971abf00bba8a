//! Heron predicates and the two independent computations of `H(a, b)`.
//!
//! [`h_count_oracle`] scans every third side allowed by the triangle
//! inequality. [`h_count_angles`] instead enumerates the rational angles
//! that two integer sides can enclose: if the included angle `γ` has
//! `sin γ = u/v` in lowest terms, then `v | ab` and `(u, ·, v)` is a
//! primitive Pythagorean triple, so `v = m² + k²` with `u ∈ {2mk, m² − k²}`.

use alloc::vec::Vec;

use crate::arith::{factorize, perfect_square, two_square_reps};
use crate::{check_bound, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Triangle {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Triangle {
    /// `None` unless the strict triangle inequality holds.
    pub fn new(a: u64, b: u64, c: u64) -> Option<Triangle> {
        (a.abs_diff(b) < c && c < a.saturating_add(b)).then_some(Triangle { a, b, c })
    }

    pub fn perimeter(&self) -> u64 {
        self.a + self.b + self.c
    }
}

/// A triangle together with its integer area `S` and semiperimeter `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HeronCertificate {
    pub triangle: Triangle,
    pub area: u64,
    pub semiperimeter: u64,
}

/// Third sides completing `(a, b)` to a Heron triangle, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HCount {
    pub a: u64,
    pub b: u64,
    pub third_sides: Vec<u64>,
}

impl HCount {
    /// `H(a, b)`.
    pub fn count(&self) -> usize {
        self.third_sides.len()
    }
}

/// `16S² = 2a²b² + 2a²c² + 2b²c² − a⁴ − b⁴ − c⁴`, evaluated exactly.
///
/// Computed through the factored form `(a+b+c)(−a+b+c)(a−b+c)(a+b−c)`. The
/// value is negative or zero when the triangle inequality fails.
pub fn area16_squared(a: u64, b: u64, c: u64) -> Result<i128> {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let f1 = a + b + c;
    let f2 = b + c - a;
    let f3 = a + c - b;
    let f4 = a + b - c;
    f1.checked_mul(f2).and_then(|x| x.checked_mul(f3)).and_then(|x| x.checked_mul(f4)).ok_or(Error::Overflow)
}

/// Certificate for `(a, b, c)` when it is a Heron triangle.
pub fn is_heron(a: u64, b: u64, c: u64) -> Result<Option<HeronCertificate>> {
    let Some(triangle) = Triangle::new(a, b, c) else {
        return Ok(None);
    };
    let perimeter = a as u128 + b as u128 + c as u128;
    if perimeter % 2 == 1 {
        return Ok(None);
    }
    let Some(root) = perfect_square(area16_squared(a, b, c)?) else {
        return Ok(None);
    };
    if root % 4 != 0 || root == 0 {
        return Ok(None);
    }
    let area = u64::try_from(root / 4).map_err(|_| Error::Overflow)?;
    Ok(Some(HeronCertificate { triangle, area, semiperimeter: (perimeter / 2) as u64 }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Skip third sides that make the perimeter odd.
    pub parity_shortcut: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { parity_shortcut: true }
    }
}

/// `H(a, b)` by testing every `c` with `|a − b| < c < a + b`.
pub fn h_count_oracle(a: u64, b: u64) -> Result<HCount> {
    h_count_oracle_with(a, b, OracleOptions::default())
}

pub fn h_count_oracle_with(a: u64, b: u64, opts: OracleOptions) -> Result<HCount> {
    check_sides(a, b)?;
    let lo = a.abs_diff(b) + 1;
    let hi = a + b; // exclusive
    let step = if opts.parity_shortcut { 2 } else { 1 };
    // with the shortcut, start at the first c with a + b + c even
    let start = if opts.parity_shortcut && (a + b + lo) % 2 == 1 { lo + 1 } else { lo };
    let mut third_sides = Vec::new();
    let mut c = start;
    while c < hi {
        if is_heron(a, b, c)?.is_some() {
            third_sides.push(c);
        }
        c += step;
    }
    Ok(HCount { a, b, third_sides })
}

/// `H(a, b)` by enumerating the rational angles between sides `a` and `b`.
///
/// For every divisor `v` of `ab`, every primitive `v = m² + k²` and both legs
/// as the sine numerator, both signs of the cosine are tried. The right angle
/// comes from `v = 1 = 1² + 0²`. Candidates with non-square `c²` or outside
/// the triangle window are discarded.
pub fn h_count_angles(a: u64, b: u64) -> Result<HCount> {
    check_sides(a, b)?;
    let ab = factorize(a)?.mul(&factorize(b)?);
    let ab_value = (a as i128) * (b as i128);
    let base = (a as i128) * (a as i128) + (b as i128) * (b as i128);
    let mut third_sides = Vec::new();
    for v in ab.divisors() {
        let scale = 2 * ab_value / v as i128;
        for rep in two_square_reps(v, true)? {
            let (m, k) = (rep.m as i128, rep.k as i128);
            let legs = [m * m - k * k, 2 * m * k];
            for (sin_num, cos_num) in [(legs[0], legs[1]), (legs[1], legs[0])] {
                if sin_num == 0 {
                    continue;
                }
                for sign in [1i128, -1] {
                    let c_sq = base - sign * scale * cos_num;
                    let Some(c) = perfect_square(c_sq) else { continue };
                    let Ok(c) = u64::try_from(c) else { continue };
                    if is_heron(a, b, c)?.is_some() {
                        third_sides.push(c);
                    }
                }
            }
        }
    }
    third_sides.sort_unstable();
    third_sides.dedup();
    Ok(HCount { a, b, third_sides })
}

/// `4 τ(ab)²`.
pub fn h_upper_bound(a: u64, b: u64) -> Result<u64> {
    check_sides(a, b)?;
    let tau = factorize(a)?.mul(&factorize(b)?).tau();
    Ok(4 * tau * tau)
}

fn check_sides(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("side lengths must be positive"));
    }
    check_bound(a)?;
    check_bound(b)
}
