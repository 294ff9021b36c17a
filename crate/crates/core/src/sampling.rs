//! Seeded rational sampling shared by the randomized checks.

use crate::exactpoly::{rat, Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `p, q` uniform in `[1, 99]`.
pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.random_range(1..=99), rng.random_range(1..=99))
}

/// `p/q` with `p` uniform in `[-99, 99] \ {0}` and `q` in `[1, 99]`.
pub fn signed_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let mut p = 0;
    while p == 0 {
        p = rng.random_range(-99..=99);
    }
    rat(p, rng.random_range(1..=99))
}

/// `p/q` with `p` in `[-9, 9]` (zero allowed) and `q` in `[1, 9]`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn positive_vec<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| positive_rational(rng)).collect()
}

pub fn signed_vec<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| signed_rational(rng)).collect()
}

/// Polynomial of degree at most `degree` with `small_rational` coefficients.
pub fn small_poly<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Poly {
    Poly::from_coeffs((0..=degree).map(|_| small_rational(rng)).collect())
}
