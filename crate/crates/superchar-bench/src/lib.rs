//! Shared helpers for the benchmark targets.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded_params(seed: u64, len: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

/// Parameters whose leading coefficient dominates the rest, so every
/// eigenvalue stays away from zero and solves are well conditioned.
pub fn dominant_params(seed: u64, len: usize) -> Vec<Complex64> {
    let mut params = seeded_params(seed, len);
    let tail: f64 = params[1..].iter().map(|c| c.norm()).sum();
    params[0] = Complex64::new(1.0 + 2.0 * tail, 0.0);
    params
}
