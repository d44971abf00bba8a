//! Deterministic primality and factorization for 64-bit integers.
//!
//! Primality is Miller–Rabin with the first twelve prime bases, which is
//! exact below 3.3·10²⁴. Factorization trial-divides up to 10⁶ and hands any
//! remaining composite cofactor to Brent's variant of Pollard's rho, whose
//! pseudo-random parameters derive from a process-wide seed.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicU32, Ordering};

use num_integer::Integer;

use crate::{Error, Result};

pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_4e70_6865_726f;

// two halves so that targets without 64-bit atomics are supported; a torn
// read only perturbs the search path
static SEED_HI: AtomicU32 = AtomicU32::new((DEFAULT_FACTOR_SEED >> 32) as u32);
static SEED_LO: AtomicU32 = AtomicU32::new(DEFAULT_FACTOR_SEED as u32);

/// Sets the seed of the rho stage. Factorizations are unique, so this only
/// changes the search path, never the result.
pub fn set_factor_seed(seed: u64) {
    SEED_HI.store((seed >> 32) as u32, Ordering::Relaxed);
    SEED_LO.store(seed as u32, Ordering::Relaxed);
}

fn factor_seed() -> u64 {
    (SEED_HI.load(Ordering::Relaxed) as u64) << 32 | SEED_LO.load(Ordering::Relaxed) as u64
}

const TRIAL_LIMIT: u64 = 1_000_000;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn pow_mod_u64(base: u64, exp: u64, m: u64) -> u64 {
    pow_mod(base, exp, m)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Finds a nontrivial factor of an odd composite `n`.
fn brent_rho(n: u64, rng: &mut SplitMix) -> u64 {
    loop {
        let c = rng.next() % (n - 1) + 1;
        let mut y = rng.next() % n;
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..core::cmp::min(128, r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r <<= 1;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn split_into(n: u64, rng: &mut SplitMix, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n, rng);
    split_into(d, rng, out);
    split_into(n / d, rng, out);
}

/// Prime-power factorization, primes strictly increasing, exponents ≥ 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(n: u64) -> Result<Self> {
        factorize(n)
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.binary_search_by_key(&p, |&(q, _)| q).map(|i| self.factors[i].1).unwrap_or(0)
    }

    /// Product of the prime powers, or `None` if it exceeds `u128`.
    pub fn value(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &(p, e)| (p as u128).checked_pow(e).and_then(|pe| acc.checked_mul(pe)))
    }

    /// Factorization of the product `self · other`.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Factorization { factors: out }
    }

    /// Factorization of `selfᵏ`.
    pub fn pow(&self, k: u32) -> Factorization {
        Factorization { factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect() }
    }

    /// All divisors in ascending order. Requires the value to fit in `u64`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = alloc::vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factors `n ≥ 1`. Valid for every `u64`, which covers products of two
/// sides below [`crate::MAX_INPUT`].
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Domain("cannot factor zero"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut checked_prime = false;
    let mut d = 5u64;
    while d <= TRIAL_LIMIT && d * d <= rest {
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
        if !checked_prime && d > 1000 {
            // a large prime cofactor would otherwise cost the full trial range
            checked_prime = true;
            if is_prime(rest) {
                break;
            }
        }
    }
    if rest > 1 {
        let mut big = Vec::new();
        if d <= TRIAL_LIMIT || is_prime(rest) {
            // either rest < d² (so it is prime) or it passed the primality check
            big.push(rest);
        } else {
            let mut rng = SplitMix(factor_seed() ^ rest);
            split_into(rest, &mut rng, &mut big);
        }
        big.sort_unstable();
        for p in big {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(Factorization { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(60).unwrap().factors(), &[(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(1213).unwrap().factors(), &[(1213, 1)]);
        assert!(factorize(1).unwrap().is_one());
        assert_eq!(factorize(0), Err(Error::Domain("cannot factor zero")));
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..=100_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), Some(n as u128), "{n}");
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }

    #[test]
    fn factorize_large_semiprimes_and_powers() {
        let p = 999_999_937u64;
        let q = 999_999_929u64;
        assert_eq!(factorize(p * q).unwrap().factors(), &[(q, 1), (p, 1)]);
        let r = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(factorize(r * r).unwrap().factors(), &[(r, 2)]);
        assert_eq!(
            factorize(u64::MAX).unwrap().factors(),
            &[(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1)]
        );
        let big = 1_000_003u64 * 1_000_033 * 3;
        assert_eq!(factorize(big).unwrap().factors(), &[(3, 1), (1_000_003, 1), (1_000_033, 1)]);
    }

    #[test]
    fn seed_does_not_change_result() {
        let n = 1_000_000_007u64 * 998_244_353;
        let before = factorize(n).unwrap();
        set_factor_seed(42);
        let after = factorize(n).unwrap();
        set_factor_seed(DEFAULT_FACTOR_SEED);
        assert_eq!(before, after);
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 100_000usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..=limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        for (n, &prime) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), prime, "{n}");
        }
        // strong pseudoprime to bases 2..=37 would need n > 3.3e24
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(factorize(60).unwrap().divisors(), vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!(factorize(1).unwrap().divisors(), vec![1]);
    }

    #[test]
    fn mul_merges_exponents() {
        let a = factorize(12).unwrap();
        let b = factorize(90).unwrap();
        assert_eq!(a.mul(&b), factorize(1080).unwrap());
        assert_eq!(a.pow(2), factorize(144).unwrap());
    }
}
