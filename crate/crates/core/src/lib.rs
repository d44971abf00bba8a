//! Exact integer machinery for Heron triangles with two fixed sides.
//!
//! A Heron triangle has integer sides and integer area. For fixed sides `a`
//! and `b`, `H(a, b)` counts the third sides `c` that complete one. This crate
//! provides:
//!
//! - [`arith`]: integer square roots, deterministic factorization below 2⁶⁴,
//!   divisor functions and sum-of-two-squares representations.
//! - [`heron`]: Heron predicates and two independent ways of computing
//!   `H(a, b)` (a window scan and an enumeration over rational angles).
//! - [`prime_case`]: the classification of `H(p, q)` for primes, the eight
//!   third-side equations, the divisor characterization of their solutions,
//!   the constructive families and the witness machinery for the last
//!   equation.
//! - [`survey`]: serial grid aggregation over `a, b ≤ x`.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact;
//! overflow is reported as an [`Error`], never wrapped.

#![no_std]

extern crate alloc;

pub mod arith;
mod error;
pub mod heron;
pub mod prime_case;
pub mod survey;

pub use error::{Error, Result};

/// Largest side length or prime accepted by the public operations.
///
/// With sides below this bound every intermediate (`p²q²`, `16S²`) fits in
/// an `i128`.
pub const MAX_INPUT: u64 = 1_000_000_000;

pub(crate) fn check_bound(n: u64) -> Result<()> {
    if n > MAX_INPUT {
        Err(Error::OutOfRange { value: n, max: MAX_INPUT })
    } else {
        Ok(())
    }
}
