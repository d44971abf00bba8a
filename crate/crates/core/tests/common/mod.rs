//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the crate's number theory.
#![allow(dead_code)]

pub fn brute_isqrt(n: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_prime_naive(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| is_prime_naive(n)).collect()
}

/// Number of `m ≥ k ≥ 1` with `m² + k² = n`.
pub fn r2_exhaustive(n: u64) -> u64 {
    let mut count = 0;
    let mut k = 1;
    while 2 * k * k <= n {
        let mut m = k;
        while m * m + k * k <= n {
            if m * m + k * k == n {
                count += 1;
            }
            m += 1;
        }
        k += 1;
    }
    count
}

/// Whether `n = m² + k²` for some `m, k ≥ 0`.
pub fn representable(n: u64) -> bool {
    let mut k = 0;
    while k * k <= n {
        let rest = n - k * k;
        let r = brute_isqrt(rest);
        if r * r == rest {
            return true;
        }
        k += 1;
    }
    false
}

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).count() as u64
}

/// Integer area from Heron's formula with rationals avoided: returns `S` when
/// `s(s−a)(s−b)(s−c)` is a positive perfect square with integral `s`.
pub fn heron_area(a: u64, b: u64, c: u64) -> Option<u64> {
    if (a + b + c) % 2 == 1 {
        return None;
    }
    let s = (a + b + c) / 2;
    if s <= a || s <= b || s <= c {
        return None;
    }
    let prod = s as u128 * (s - a) as u128 * (s - b) as u128 * (s - c) as u128;
    let r = (prod as f64).sqrt() as u128;
    (r.saturating_sub(2)..=r + 2).find(|&t| t * t == prod && t > 0).map(|t| t as u64)
}

/// Third sides found by Heron's formula over the whole window.
pub fn third_sides_naive(a: u64, b: u64) -> Vec<u64> {
    (a.abs_diff(b) + 1..a + b).filter(|&c| heron_area(a, b, c).is_some()).collect()
}

/// `(u, v)` with `u` odd, `v` even and `u² + v² = p`, by scanning.
pub fn decomp_naive(p: u64) -> Option<(u64, u64)> {
    let mut u = 1;
    while u * u < p {
        let rest = p - u * u;
        let v = brute_isqrt(rest);
        if v * v == rest && v % 2 == 0 && v > 0 {
            return Some((u, v));
        }
        u += 2;
    }
    None
}
