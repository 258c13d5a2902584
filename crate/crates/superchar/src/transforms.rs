//! The discrete Fourier, cosine, and sine transform matrices, and the signal
//! embeddings that restrict the DFT to even and odd functions.
//!
//! Conventions (all indices 0-based unless noted):
//!
//! * DFT: `F[j][k] = ζ^{jk} / sqrt(n)` with `ζ = exp(-2πi/n)`.  F is unitary,
//!   F² is the parity permutation `f(x) -> f(-x)`, and F⁴ = I.
//! * DCT: with `N = floor(n/2)`, the `(N+1) x (N+1)` matrix
//!   `U[j][k] = sqrt(|X_j| |X_k|) cos(2πjk/n) / sqrt(n)` where |X_j| is the
//!   size of the orbit {±j}.  U is real, symmetric, and orthogonal (U² = I).
//! * DST: with `N = floor((n - 1/4)/2)`, the `N x N` matrix (1-based j, k)
//!   `W[j][k] = (2/sqrt(n)) sin(2πjk/n)`.  W is real, symmetric, and
//!   orthogonal; the DFT restricted to odd functions is carried by -iW.

use crate::dct;
use crate::error::{Error, Result};
use crate::group::{fold, reduce, zeta};
use crate::matrix::Matrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// `sin(2π m / n)` with the argument reduced mod n before evaluation.
fn sin_frac(n: u64, m: i64) -> f64 {
    (TAU * reduce(m, n) as f64 / n as f64).sin()
}

/// `cos(2π m / n)` with the argument reduced mod n before evaluation.
pub(crate) fn cos_frac(n: u64, m: i64) -> f64 {
    (TAU * reduce(m, n) as f64 / n as f64).cos()
}

/// The unitary DFT matrix of size n.
pub fn dft_matrix(n: u64) -> Matrix<Complex64> {
    assert!(n >= 1, "modulus must be positive");
    let scale = 1.0 / (n as f64).sqrt();
    Matrix::from_fn(n as usize, n as usize, |j, k| {
        zeta(n, (j * k) as i64) * scale
    })
}

/// Size of the cosine transform: the number of {±x} orbits, `floor(n/2) + 1`.
pub fn dct_size(n: u64) -> usize {
    (n / 2 + 1) as usize
}

/// The symmetric orthogonal DCT matrix of a modulus n.
pub fn dct_matrix(n: u64) -> Matrix<f64> {
    assert!(n >= 1, "modulus must be positive");
    let size = dct_size(n);
    let root_n = (n as f64).sqrt();
    let roots: Vec<f64> = (0..size)
        .map(|j| (dct::class_size(n, j) as f64).sqrt())
        .collect();
    Matrix::from_fn(size, size, |j, k| {
        roots[j] * roots[k] * cos_frac(n, (j * k) as i64) / root_n
    })
}

/// Size of the sine transform: `n/2 - 1` for even n, `(n-1)/2` for odd n
/// (0 for n <= 2, where no odd function survives).
pub fn dst_size(n: u64) -> usize {
    ((4 * n - 1) / 8) as usize
}

/// The symmetric orthogonal DST matrix `W`; empty for n <= 2.
pub fn dst_matrix(n: u64) -> Matrix<f64> {
    assert!(n >= 1, "modulus must be positive");
    let size = dst_size(n);
    let scale = 2.0 / (n as f64).sqrt();
    Matrix::from_fn(size, size, |j, k| {
        scale * sin_frac(n, ((j + 1) * (k + 1)) as i64)
    })
}

/// The permutation matrix of `x -> -x` on Z/nZ.
pub fn parity_permutation(n: u64) -> Matrix<f64> {
    Matrix::from_fn(n as usize, n as usize, |j, k| {
        if ((j + k) as u64).is_multiple_of(n) {
            1.0
        } else {
            0.0
        }
    })
}

/// The odd exponential sum `τ_j(k) = ζ^{jk} - ζ^{-jk} = -2i sin(2πjk/n)`.
pub fn tau(n: u64, j: i64, k: i64) -> Complex64 {
    let m = reduce(j, n) as i64 * reduce(k, n) as i64;
    Complex64::new(0.0, -2.0 * sin_frac(n, m))
}

/// A complex function on Z/nZ.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    n: u64,
    samples: Vec<Complex64>,
}

impl Signal {
    pub fn new(n: u64, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != n as usize {
            return Err(Error::LengthMismatch {
                expected: n as usize,
                got: samples.len(),
            });
        }
        Ok(Signal { n, samples })
    }

    /// The point mass δ_j.
    pub fn delta(n: u64, j: u64) -> Self {
        let mut samples = vec![Complex64::new(0.0, 0.0); n as usize];
        samples[(j % n) as usize] = Complex64::new(1.0, 0.0);
        Signal { n, samples }
    }

    /// The normalized exponential `ε_j(x) = ζ^{-jx} / sqrt(n)`, which the DFT
    /// sends to δ_j.
    pub fn epsilon(n: u64, j: u64) -> Self {
        let scale = 1.0 / (n as f64).sqrt();
        let samples = (0..n)
            .map(|x| zeta(n, -((j % n) as i64) * x as i64) * scale)
            .collect();
        Signal { n, samples }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn max_abs_diff(&self, rhs: &Signal) -> f64 {
        assert_eq!(self.n, rhs.n);
        self.samples
            .iter()
            .zip(&rhs.samples)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

/// The DFT `f̂(ξ) = (1/sqrt(n)) Σ_x f(x) ζ^{xξ}`, evaluated directly.
pub fn apply_dft(f: &Signal) -> Signal {
    let n = f.n;
    let scale = 1.0 / (n as f64).sqrt();
    let powers: Vec<Complex64> = (0..n).map(|m| zeta(n, m as i64)).collect();
    let samples = (0..n)
        .map(|xi| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, &v) in f.samples.iter().enumerate() {
                acc += v * powers[(x as u64 * xi % n) as usize];
            }
            acc * scale
        })
        .collect();
    Signal { n, samples }
}

/// Embeds cosine coefficients as the even function
/// `f(x) = t[c] / sqrt(|X_c|)` with `c = min(x, n-x)`.
///
/// The embedding intertwines the transforms: applying the DFT to the embedded
/// signal equals embedding `U t`.
pub fn embed_even(n: u64, t: &[f64]) -> Result<Signal> {
    if t.len() != dct_size(n) {
        return Err(Error::LengthMismatch {
            expected: dct_size(n),
            got: t.len(),
        });
    }
    let samples = (0..n)
        .map(|x| {
            let c = fold(x as i64, n);
            Complex64::new(t[c] / (dct::class_size(n, c) as f64).sqrt(), 0.0)
        })
        .collect();
    Signal::new(n, samples)
}

/// Embeds sine coefficients s_1..s_N as the odd function with
/// `f(j) = s_j / sqrt(2)` and `f(n-j) = -s_j / sqrt(2)`.
///
/// Applying the DFT to the embedded signal equals embedding `-i W s`.
pub fn embed_odd(n: u64, s: &[Complex64]) -> Result<Signal> {
    if s.len() != dst_size(n) {
        return Err(Error::LengthMismatch {
            expected: dst_size(n),
            got: s.len(),
        });
    }
    let mut samples = vec![Complex64::new(0.0, 0.0); n as usize];
    let scale = 1.0 / std::f64::consts::SQRT_2;
    for (idx, &value) in s.iter().enumerate() {
        let j = idx + 1;
        samples[j] = value * scale;
        samples[n as usize - j] = -value * scale;
    }
    Signal::new(n, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dft_entries_and_gauss_sum() {
        let f = dft_matrix(4);
        assert!((f[(1, 1)] - Complex64::new(0.0, -0.5)).norm() < 1e-15);
        assert!((f[(0, 3)] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        // Quadratic Gauss sum: sqrt(5) * trace(F_5) = Σ ζ^{j²} = sqrt(5).
        let f5 = dft_matrix(5);
        let trace: Complex64 = (0..5).map(|j| f5[(j, j)]).sum();
        assert!((trace * 5f64.sqrt() - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn dft_squares_to_parity() {
        for n in [2u64, 3, 8, 13] {
            let f = dft_matrix(n);
            let f2 = f.mul(&f);
            let p = parity_permutation(n).to_complex();
            assert!(f2.max_abs_diff(&p) < 1e-12, "n={n}");
            let f4 = f2.mul(&f2);
            assert!(f4.max_abs_diff_identity() < 1e-10, "n={n}");
            assert!(f.is_unitary(1e-12));
        }
    }

    #[test]
    fn dct_matrix_frozen_n4() {
        let u = dct_matrix(4);
        let r = std::f64::consts::SQRT_2;
        let expected = Matrix::from_rows(&[
            vec![0.5, 0.5 * r, 0.5],
            vec![0.5 * r, 0.0, -0.5 * r],
            vec![0.5, -0.5 * r, 0.5],
        ]);
        assert!(u.max_abs_diff(&expected) < 1e-12);
        assert_eq!(dct_matrix(1).rows(), 1);
        assert!((dct_matrix(1)[(0, 0)] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn dct_matrix_is_the_sign_theory_unitary() {
        use crate::group::{OrbitPartition, SupercharacterTable, UnitSubgroup};
        for n in [5u64, 8, 9, 12] {
            let table = SupercharacterTable::new(&OrbitPartition::new(&UnitSubgroup::pm_one(n)));
            let u = table.unitary_matrix().map(|z| z.re);
            assert!(dct_matrix(n).max_abs_diff(&u) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn dst_sizes_and_small_matrices() {
        let sizes: Vec<usize> = (1..=12).map(dst_size).collect();
        assert_eq!(sizes, vec![0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5]);
        assert_eq!(dst_matrix(2).rows(), 0);
        assert!((dst_matrix(3)[(0, 0)] - 1.0).abs() < 1e-15);
        assert!((dst_matrix(4)[(0, 0)] - 1.0).abs() < 1e-15);
        let w8 = dst_matrix(8);
        let h = 0.5 * std::f64::consts::SQRT_2;
        let expected = Matrix::from_rows(&[
            vec![0.5, h, 0.5],
            vec![h, 0.0, -h],
            vec![0.5, -h, 0.5],
        ]);
        assert!(w8.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn transform_matrices_are_symmetric_orthogonal() {
        for n in 3..=40u64 {
            let u = dct_matrix(n);
            assert!(u.max_abs_diff(&u.transpose()) < 1e-13);
            assert!(u.to_complex().is_unitary(1e-12), "dct n={n}");
            let w = dst_matrix(n);
            assert!(w.max_abs_diff(&w.transpose()) < 1e-13);
            assert!(w.to_complex().is_unitary(1e-12), "dst n={n}");
        }
    }

    #[test]
    fn dft_swaps_exponential_and_point_bases() {
        for n in [5u64, 6] {
            for j in 0..n {
                let eps_hat = apply_dft(&Signal::epsilon(n, j));
                assert!(eps_hat.max_abs_diff(&Signal::delta(n, j)) < 1e-13);
                let delta_hat = apply_dft(&Signal::delta(n, j));
                let conj_eps = Signal::new(
                    n,
                    Signal::epsilon(n, j)
                        .samples()
                        .iter()
                        .map(|z| z.conj())
                        .collect(),
                )
                .unwrap();
                assert!(delta_hat.max_abs_diff(&conj_eps) < 1e-13);
            }
        }
    }

    #[test]
    fn even_embedding_commutes_with_the_dft() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2u64, 5, 8, 13, 16] {
            let size = dct_size(n);
            let t: Vec<f64> = (0..size).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let lhs = apply_dft(&embed_even(n, &t).unwrap());
            let ut = dct_matrix(n).mul_vec(&t);
            let rhs = embed_even(n, &ut).unwrap();
            assert!(lhs.max_abs_diff(&rhs) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn odd_embedding_commutes_with_the_dft() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in [3u64, 7, 8, 12, 15] {
            let size = dst_size(n);
            let s: Vec<Complex64> = (0..size)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let lhs = apply_dft(&embed_odd(n, &s).unwrap());
            let minus_i = Complex64::new(0.0, -1.0);
            let vs: Vec<Complex64> = dst_matrix(n)
                .to_complex()
                .mul_vec(&s)
                .into_iter()
                .map(|z| z * minus_i)
                .collect();
            let rhs = embed_odd(n, &vs).unwrap();
            assert!(lhs.max_abs_diff(&rhs) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn tau_agrees_with_its_exponential_form() {
        for n in [4u64, 9, 11] {
            for j in 0..n as i64 {
                for k in 0..n as i64 {
                    let direct = tau(n, j, k);
                    let via_zeta = zeta(n, j * k) - zeta(n, -j * k);
                    assert!((direct - via_zeta).norm() < 1e-14, "n={n} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn signal_length_is_checked() {
        assert!(Signal::new(4, vec![Complex64::new(1.0, 0.0); 3]).is_err());
        assert!(embed_even(8, &[0.0; 4]).is_err());
        assert!(embed_odd(8, &[Complex64::new(0.0, 0.0); 4]).is_err());
    }
}
