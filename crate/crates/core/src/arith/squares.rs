//! Representations `n = m² + k²`, built from Gaussian-integer factorizations.

use alloc::vec::Vec;

use num_integer::Integer;

use super::factor::{factorize, pow_mod_u64, Factorization};
use crate::Result;

/// An unordered representation `n = m² + k²` stored with `m ≥ k ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TwoSquaresRep {
    pub m: u64,
    pub k: u64,
    /// `gcd(m, k) = 1` and `m`, `k` of opposite parity. The only primitive
    /// representation with a zero part is `1 = 1² + 0²`.
    pub primitive: bool,
}

impl TwoSquaresRep {
    pub fn new(a: u64, b: u64) -> Self {
        let (m, k) = if a >= b { (a, b) } else { (b, a) };
        TwoSquaresRep { m, k, primitive: m.gcd(&k) == 1 && (m + k) % 2 == 1 }
    }

    pub fn value(&self) -> u128 {
        self.m as u128 * self.m as u128 + self.k as u128 * self.k as u128
    }
}

/// Writes a prime `p ≡ 1 (mod 4)` (or `p = 2`) as `x² + y²` with `x > y`.
///
/// A square root of −1 modulo `p` is reduced by the Euclidean algorithm until
/// the remainders drop below `√p`. Returns `None` for `p ≡ 3 (mod 4)`. The
/// caller guarantees primality.
pub fn prime_two_squares(p: u64) -> Option<(u64, u64)> {
    if p == 2 {
        return Some((1, 1));
    }
    if p % 4 != 1 {
        return None;
    }
    let half = (p - 1) / 2;
    let root = (2..p).find(|&c| pow_mod_u64(c, half, p) == p - 1).map(|c| pow_mod_u64(c, half / 2, p))?;
    let (mut a, mut b) = (p, root);
    let limit = p.isqrt();
    while b > limit {
        let r = a % b;
        a = b;
        b = r;
    }
    let rest = p - b * b;
    let y = rest.isqrt();
    if y * y != rest {
        return None;
    }
    Some(if b > y { (b, y) } else { (y, b) })
}

#[derive(Clone, Copy)]
struct Gaussian(i128, i128);

impl Gaussian {
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn conj(self) -> Gaussian {
        Gaussian(self.0, -self.1)
    }
}

/// All representations of the factored number, sorted by `k` ascending.
pub fn sum_of_two_squares(f: &Factorization, primitive_only: bool) -> Vec<TwoSquaresRep> {
    if f.d1() == 0 {
        return Vec::new();
    }
    let mut base = Gaussian(1, 0);
    let mut split = Vec::new();
    for &(p, e) in f.factors() {
        match p % 4 {
            2 => {
                for _ in 0..e {
                    base = base.mul(Gaussian(1, 1));
                }
            }
            3 => {
                for _ in 0..e / 2 {
                    base = base.mul(Gaussian(p as i128, 0));
                }
            }
            _ => {
                let (x, y) = prime_two_squares(p).expect("prime congruent to 1 mod 4");
                split.push((Gaussian(x as i128, y as i128), e));
            }
        }
    }
    let mut acc = alloc::vec![base];
    for (pi, e) in split {
        let mut powers = Vec::with_capacity(e as usize + 1);
        let mut cur = Gaussian(1, 0);
        for _ in 0..=e {
            powers.push(cur);
            cur = cur.mul(pi);
        }
        let mut next = Vec::with_capacity(acc.len() * (e as usize + 1));
        for g in &acc {
            for t in 0..=e as usize {
                let term = powers[t].mul(powers[e as usize - t].conj());
                next.push(g.mul(term));
            }
        }
        acc = next;
    }
    let mut reps: Vec<TwoSquaresRep> = acc
        .into_iter()
        .map(|g| TwoSquaresRep::new(g.0.unsigned_abs() as u64, g.1.unsigned_abs() as u64))
        .filter(|r| !primitive_only || r.primitive)
        .collect();
    reps.sort_unstable_by_key(|r| (r.k, r.m));
    reps.dedup();
    reps
}

/// All unordered representations `n = m² + k²` (`m ≥ k ≥ 0`), optionally
/// restricted to primitive ones, sorted by `k` ascending.
pub fn two_square_reps(n: u64, primitive_only: bool) -> Result<Vec<TwoSquaresRep>> {
    Ok(sum_of_two_squares(&factorize(n)?, primitive_only))
}
