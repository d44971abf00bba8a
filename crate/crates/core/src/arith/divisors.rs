use super::factor::{factorize, Factorization};
use crate::Result;

impl Factorization {
    /// Number of divisors.
    pub fn tau(&self) -> u64 {
        self.factors().iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// `∏ (1 + e)` over the primes `≡ 1 (mod 4)`, or zero when some prime
    /// `≡ 3 (mod 4)` appears to an odd power.
    pub fn d1(&self) -> u64 {
        let mut acc = 1u64;
        for &(p, e) in self.factors() {
            match p % 4 {
                1 => acc *= e as u64 + 1,
                3 if e % 2 == 1 => return 0,
                _ => {}
            }
        }
        acc
    }

    /// Number of unordered representations `n = m² + k²` with `m ≥ k ≥ 1`.
    pub fn r2(&self) -> u64 {
        let d = self.d1();
        if d % 2 == 0 {
            // also covers d = 0
            d / 2
        } else if self.exponent_of(2) % 2 == 0 {
            (d - 1) / 2
        } else {
            d.div_ceil(2)
        }
    }
}

pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?.tau())
}

pub fn d1(n: u64) -> Result<u64> {
    Ok(factorize(n)?.d1())
}

pub fn r2(n: u64) -> Result<u64> {
    Ok(factorize(n)?.r2())
}
