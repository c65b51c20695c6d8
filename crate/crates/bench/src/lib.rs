//! Shared input builders for the benchmarks: deterministic polynomials with
//! controlled degree and root structure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polycert::{rat, rat_int, Polynomial};

/// `(x - 1)(x - 2)…(x - n)`: tightly clustered integer roots, the classic
/// stress case for root separation.
pub fn wilkinson(n: usize) -> Polynomial {
    let roots: Vec<_> = (1..=n as i64).map(rat_int).collect();
    Polynomial::from_roots(&roots)
}

/// Monic real-rooted polynomial with `degree` random rational roots
/// (numerators in `[-20, 20]`, denominators up to 4), reproducible from the
/// seed.
pub fn seeded_real_rooted(degree: usize, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots: Vec<_> = (0..degree)
        .map(|_| rat(rng.random_range(-20..=20), rng.random_range(1..=4)))
        .collect();
    Polynomial::from_roots(&roots)
}

/// Dense polynomial with every coefficient a nontrivial fraction, for
/// exercising arithmetic rather than root structure.
pub fn dense_rational(degree: usize, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<_> = (0..=degree)
        .map(|_| rat(rng.random_range(-99..=99), rng.random_range(1..=16)))
        .collect();
    let last = coeffs.last_mut().expect("degree + 1 entries");
    if last == &rat_int(0) {
        *last = rat_int(1);
    }
    Polynomial::new(coeffs)
}
