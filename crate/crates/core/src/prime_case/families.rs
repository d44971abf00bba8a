//! Parametric families of prime pairs with known Heron third sides.

use crate::arith::is_prime;
use crate::heron::{is_heron, HeronCertificate};
use crate::{check_bound, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Example1Member {
    pub p: u64,
    pub q: u64,
    pub x: u64,
    pub certificate: HeronCertificate,
}

fn checked_square(n: u64) -> Result<u64> {
    n.checked_mul(n).ok_or(Error::Overflow)
}

/// `p = 3t² + 2s²`, `q = 9t² + 4s²`, `x = 6(s² + t²)`; a member only when
/// both `p` and `q` are prime.
pub fn family_example1(s: u64, t: u64) -> Result<Option<Example1Member>> {
    if s == 0 || t == 0 {
        return Err(Error::Domain("s and t must be positive"));
    }
    let (s2, t2) = (checked_square(s)?, checked_square(t)?);
    let p = 3 * t2 + 2 * s2;
    let q = 9 * t2 + 4 * s2;
    let x = 6 * (s2 + t2);
    check_bound(q)?;
    if !is_prime(p) || !is_prime(q) {
        return Ok(None);
    }
    let certificate = is_heron(p, q, x)?.ok_or(Error::Internal("family member is not Heron"))?;
    Ok(Some(Example1Member { p, q, x, certificate }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Prop28Outcome {
    /// Both `(p, q, x5)` and `(p, q, x7)` are Heron triangles.
    Member { p: u64, q: u64, x5: u64, x7: u64, certificates: [HeronCertificate; 2] },
    /// `j = k`, so `x5 = 0` and `p = q`.
    Degenerate { p: u64, q: u64, x5: u64, x7: u64 },
}

/// `p = (ij)² + (kl)²`, `q = (ik)² + (jl)²` with `i, j, k` odd and `l` even,
/// which solve equations 12 and 14 with `x5 = |k² − j²|(i² + l²)` and
/// `x7 = |i² − l²|(j² + k²)`.
///
/// `None` when `p` or `q` is composite.
pub fn family_prop28(i: u64, j: u64, k: u64, l: u64) -> Result<Option<Prop28Outcome>> {
    if i % 2 == 0 || j % 2 == 0 || k % 2 == 0 || l % 2 == 1 || l == 0 {
        return Err(Error::Domain("need i, j, k odd and l even, all positive"));
    }
    let sq = |a: u64, b: u64| a.checked_mul(b).ok_or(Error::Overflow).and_then(checked_square);
    let p = sq(i, j)?.checked_add(sq(k, l)?).ok_or(Error::Overflow)?;
    let q = sq(i, k)?.checked_add(sq(j, l)?).ok_or(Error::Overflow)?;
    check_bound(p)?;
    check_bound(q)?;
    let (i2, j2, k2, l2) = (i * i, j * j, k * k, l * l);
    let x5 = k2.abs_diff(j2) * (i2 + l2);
    let x7 = i2.abs_diff(l2) * (j2 + k2);
    if x5 == 0 || x7 == 0 {
        return Ok(Some(Prop28Outcome::Degenerate { p, q, x5, x7 }));
    }
    if !is_prime(p) || !is_prime(q) {
        return Ok(None);
    }
    let cert = |x| is_heron(p, q, x)?.ok_or(Error::Internal("family member is not Heron"));
    let certificates = [cert(x5)?, cert(x7)?];
    Ok(Some(Prop28Outcome::Member { p, q, x5, x7, certificates }))
}
