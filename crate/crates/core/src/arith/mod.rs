//! Exact integer arithmetic: roots, factorization, divisor functions and
//! sums of two squares.

mod divisors;
mod factor;
mod roots;
mod squares;

pub use divisors::{d1, r2, tau};
pub use factor::{factorize, is_prime, set_factor_seed, Factorization, DEFAULT_FACTOR_SEED};
pub use roots::{isqrt, perfect_square};
pub use squares::{prime_two_squares, sum_of_two_squares, two_square_reps, TwoSquaresRep};
