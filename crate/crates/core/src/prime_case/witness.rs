//! Witnesses for equation 15 (equivalently its sum-of-squares form)
//! `(u² − v² + z² − w²)² + 4(uv + zw)² = x²`.
//!
//! A solution corresponds to positive `m, n` (coprime, opposite parity) and
//! coprime `a, b` with `a | nw − mz`, `b | nz + mw` and
//!
//! ```text
//! k = (a² + b²)(nz + mw) / (ab(n² + m²))
//! u = nk − zb/a,  v = mk − wb/a.
//! ```
//!
//! All of `k`, `u` and `v` are handled as exact rationals.

use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedMul, CheckedSub, Signed};

use super::prime_decomp;
use crate::arith::{factorize, perfect_square, sum_of_two_squares, TwoSquaresRep};
use crate::{check_bound, Error, Result};

type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Thm29Witness {
    pub m: u64,
    pub n: u64,
    pub a: u64,
    pub b: u64,
    /// Decomposition `q = z² + w²` the witness refers to.
    pub z: u64,
    pub w: u64,
    pub k: Q,
}

impl Thm29Witness {
    /// `(nz + mw) / b`.
    pub fn s(&self) -> Option<u64> {
        let num = self.n * self.z + self.m * self.w;
        (num % self.b == 0).then(|| num / self.b)
    }

    /// `|nw − mz| / a`.
    pub fn s_prime(&self) -> Option<u64> {
        let num = (self.n * self.w).abs_diff(self.m * self.z);
        (num % self.a == 0).then(|| num / self.a)
    }

    /// `(a² + b²) / (m² + n²)`.
    pub fn ell(&self) -> Option<u64> {
        let num = self.a * self.a + self.b * self.b;
        let den = self.m * self.m + self.n * self.n;
        (num % den == 0).then(|| num / den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Thm29Construction {
    pub u: u64,
    pub v: u64,
    pub k: Q,
    pub x8: u64,
}

fn ov<T>(x: Option<T>) -> Result<T> {
    x.ok_or(Error::Overflow)
}

fn int(x: u64) -> Q {
    Q::from_integer(x as i128)
}

/// Builds `(u, v)` from a witness. `None` unless both are positive integers.
pub fn thm29_construct(m: u64, n: u64, a: u64, b: u64, z: u64, w: u64) -> Result<Option<Thm29Construction>> {
    for x in [m, n, a, b, z, w] {
        if x == 0 {
            return Err(Error::Domain("witness parameters must be positive"));
        }
        check_bound(x)?;
    }
    if m.gcd(&n) != 1 || (m + n) % 2 == 0 {
        return Err(Error::Domain("m and n must be coprime of opposite parity"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::Domain("a and b must be coprime"));
    }
    let (mi, ni, ai, bi, zi, wi) = (m as i128, n as i128, a as i128, b as i128, z as i128, w as i128);
    let cross = ni * wi - mi * zi;
    let dot = ni * zi + mi * wi;
    if cross % ai != 0 {
        return Err(Error::Domain("a must divide nw - mz"));
    }
    if dot % bi != 0 {
        return Err(Error::Domain("b must divide nz + mw"));
    }
    let ab2 = ai * ai + bi * bi;
    let mn2 = mi * mi + ni * ni;
    let k = Q::new(ov(ab2.checked_mul(dot))?, ov((ai * bi).checked_mul(mn2))?);
    let shift = |c: i128| Q::new(c * bi, ai);
    let u = ov(ov(int(n).checked_mul(&k))?.checked_sub(&shift(zi)))?;
    let v = ov(ov(int(m).checked_mul(&k))?.checked_sub(&shift(wi)))?;
    if !u.is_integer() || !v.is_integer() || *u.numer() <= 0 || *v.numer() <= 0 {
        return Ok(None);
    }
    let (u, v) = (*u.numer() as u64, *v.numer() as u64);
    let q = zi * zi + wi * wi;
    let k2 = ov(k.checked_mul(&k))?;
    let x8 =
        ov(ov(Q::from_integer(mn2).checked_mul(&k2))?.checked_sub(&Q::new(ov(ab2.checked_mul(q))?, ai * ai)))?.abs();
    if !x8.is_integer() {
        return Err(Error::Internal("x8 is not an integer although u and v are"));
    }
    let x8 = *x8.numer();
    let (ui, vi) = (u as i128, v as i128);
    let lhs = eq21_value(ui, vi, zi, wi)?;
    if ov(x8.checked_mul(x8))? != lhs {
        return Err(Error::Internal("constructed witness does not satisfy the equation"));
    }
    Ok(Some(Thm29Construction { u, v, k, x8: x8 as u64 }))
}

/// `(u² − v² + z² − w²)² + 4(uv + zw)²`.
fn eq21_value(u: i128, v: i128, z: i128, w: i128) -> Result<i128> {
    let p = u * u - v * v + z * z - w * w;
    let q = u * v + z * w;
    ov(p.checked_mul(p).and_then(|pp| q.checked_mul(q).and_then(|qq| pp.checked_add(4 * qq))))
}

/// Recovers a witness from a solution of the equation: with
/// `P = u² − v² + z² − w²`, `Q = uv + zw` and `x = √(P² + 4Q²)`,
/// `n/m = (P + x)/(2Q)` and `a/b = (nu + mv)/(nz + mw)` in lowest terms.
///
/// `None` when `P² + 4Q²` is not a perfect square.
pub fn thm29_decompose(u: u64, v: u64, z: u64, w: u64) -> Result<Option<Thm29Witness>> {
    for x in [u, v, z, w] {
        if x == 0 {
            return Err(Error::Domain("decomposition parts must be positive"));
        }
        check_bound(x)?;
    }
    if u % 2 == 0 || z % 2 == 0 || v % 2 == 1 || w % 2 == 1 {
        return Err(Error::Domain("need u, z odd and v, w even"));
    }
    let (ui, vi, zi, wi) = (u as i128, v as i128, z as i128, w as i128);
    let big_p = ui * ui - vi * vi + zi * zi - wi * wi;
    let big_q = ui * vi + zi * wi;
    if big_q == 0 {
        return Err(Error::Domain("degenerate decomposition"));
    }
    let Some(x8) = perfect_square(eq21_value(ui, vi, zi, wi)?) else {
        return Ok(None);
    };
    let ratio = Q::new(big_p + x8 as i128, 2 * big_q);
    let (n, m) = (*ratio.numer(), *ratio.denom());
    let ab = Q::new(n * ui + m * vi, n * zi + m * wi);
    let (a, b) = (*ab.numer(), *ab.denom());
    if n <= 0 || m <= 0 || a <= 0 {
        return Err(Error::Internal("non-positive witness parameter"));
    }
    let (m, n, a, b) = (m as u64, n as u64, a as u64, b as u64);
    let built = thm29_construct(m, n, a, b, z, w).map_err(|e| match e {
        Error::Domain(_) => Error::Internal("recovered witness violates its conditions"),
        other => other,
    })?;
    match built {
        Some(c) if c.u == u && c.v == v && c.x8 as u128 == x8 => Ok(Some(Thm29Witness { m, n, a, b, z, w, k: c.k })),
        _ => Err(Error::Internal("recovered witness does not reproduce (u, v)")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Thm210 {
    pub ell: u64,
    pub s: u64,
    pub s_prime: u64,
}

/// `p + q = ℓ(s² + s′²)` for a witness of the pair.
pub fn thm210_check(witness: &Thm29Witness, p: u64, q: u64) -> Result<Thm210> {
    check_bound(p)?;
    let qd = prime_decomp(q)?.ok_or(Error::Domain("q must be 1 mod 4"))?;
    if (qd.u, qd.v) != (witness.z, witness.w) {
        return Err(Error::Domain("witness refers to a different decomposition of q"));
    }
    let missing = Error::Internal("witness quantity is not an integer");
    let s = witness.s().ok_or(missing.clone())?;
    let s_prime = witness.s_prime().ok_or(missing.clone())?;
    let ell = witness.ell().ok_or(missing)?;
    if (p + q) as u128 != ell as u128 * (s as u128 * s as u128 + s_prime as u128 * s_prime as u128) {
        return Err(Error::Internal("p + q differs from l(s^2 + s'^2)"));
    }
    Ok(Thm210 { ell, s, s_prime })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Cor211 {
    pub sum: u64,
    /// Whether `p + q` is a sum of two squares (zero parts allowed).
    pub holds: bool,
    pub reps: Vec<TwoSquaresRep>,
}

/// Necessary condition for equation 15: `p + q = α² + β²`.
pub fn cor211_check(p: u64, q: u64) -> Result<Cor211> {
    check_bound(p)?;
    check_bound(q)?;
    let sum = p + q;
    let f = factorize(sum)?;
    let holds = f.d1() > 0;
    Ok(Cor211 { sum, holds, reps: sum_of_two_squares(&f, false) })
}
