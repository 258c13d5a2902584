//! Circulant matrices: the commutative algebra diagonalized by the DFT.
//!
//! A circulant element is parametrized by its first row `c_0..c_{n-1}`; the
//! dense matrix has entry (j, k) = `c_{(k-j) mod n}`, the algebra product is
//! cyclic convolution, and conjugation `F^H M F` by the unitary DFT yields
//! `diag(λ_k)` with `λ_k = Σ_i c_i ζ^{ik}`, `ζ = exp(-2πi/n)`.
//!
//! This is the supercharacter algebra of the trivial unit subgroup: the shift
//! basis below coincides with the structure-constant basis attached to
//! Γ = {1} (every orbit a singleton).

use crate::error::{Error, Result};
use crate::exact::ExactQuadratic;
use crate::group::{reduce, zeta};
use crate::matrix::{require_square, Matrix};
use crate::transforms::dft_matrix;
use num_complex::Complex64;

fn check_len(n: u64, len: usize) -> Result<()> {
    if len != n as usize {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            got: len,
        });
    }
    Ok(())
}

/// The exact shift basis matrix P_i with entry (j, k) = `[k - j ≡ i (mod n)]`;
/// P_1 is the cyclic shift and P_i = P_1^i.
pub fn shift_basis(n: u64, i: usize) -> Result<Matrix<ExactQuadratic>> {
    if i >= n as usize {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: n as usize,
        });
    }
    let size = n as usize;
    Ok(Matrix::from_fn(size, size, |j, k| {
        ExactQuadratic::int(i64::from(reduce(k as i64 - j as i64, n) == i as u64))
    }))
}

/// A circulant matrix, stored as its first row.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantElement {
    n: u64,
    params: Vec<Complex64>,
}

impl CirculantElement {
    pub fn new(n: u64, params: Vec<Complex64>) -> Result<Self> {
        check_len(n, params.len())?;
        Ok(CirculantElement { n, params })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// c_0..c_{n-1}: the first row of the dense matrix.
    pub fn params(&self) -> &[Complex64] {
        &self.params
    }

    pub fn matrix(&self) -> Matrix<Complex64> {
        let size = self.n as usize;
        Matrix::from_fn(size, size, |j, k| {
            self.params[reduce(k as i64 - j as i64, self.n) as usize]
        })
    }

    /// Eigenvalues `λ_k = Σ_i c_i ζ^{ik}`, matching the diagonal of F^H M F.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let n = self.n;
        (0..n as usize)
            .map(|k| {
                self.params
                    .iter()
                    .enumerate()
                    .map(|(i, c)| *c * zeta(n, (i * k) as i64))
                    .sum()
            })
            .collect()
    }

    /// The algebra product: cyclic convolution of parameter vectors, so that
    /// `matrix(a * b) = matrix(a) · matrix(b)`.
    pub fn multiply(&self, other: &CirculantElement) -> Result<CirculantElement> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let size = self.n as usize;
        let params = (0..size)
            .map(|k| {
                (0..size)
                    .map(|i| {
                        self.params[i]
                            * other.params[reduce(k as i64 - i as i64, self.n) as usize]
                    })
                    .sum()
            })
            .collect();
        Ok(CirculantElement { n: self.n, params })
    }

    /// Solves `M x = rhs` through `x = F ((F^H rhs) ./ λ)`.
    pub fn solve(&self, rhs: &[Complex64], singular_tol: f64) -> Result<Vec<Complex64>> {
        check_len(self.n, rhs.len())?;
        let lambda = self.eigenvalues();
        let singular: Vec<usize> = lambda
            .iter()
            .enumerate()
            .filter(|(_, l)| l.norm() <= singular_tol)
            .map(|(k, _)| k)
            .collect();
        if !singular.is_empty() {
            return Err(Error::SingularElement { indices: singular });
        }
        let f = dft_matrix(self.n);
        let mut y = f.conj_transpose().mul_vec(rhs);
        for (v, l) in y.iter_mut().zip(&lambda) {
            *v /= l;
        }
        Ok(f.mul_vec(&y))
    }
}

/// Accepts a matrix iff conjugation by the DFT leaves it diagonal within
/// `tol`, and reads the parameters off the first row.
pub fn membership(m: &Matrix<Complex64>, n: u64, tol: f64) -> Result<CirculantElement> {
    require_square(m, n as usize)?;
    let f = dft_matrix(n);
    let residual = f.conj_transpose().mul(m).mul(&f).offdiag_max_abs();
    if residual > tol {
        return Err(Error::NotInAlgebra {
            residual,
            tolerance: tol,
        });
    }
    let params = (0..n as usize).map(|k| m[(0, k)]).collect();
    CirculantElement::new(n, params)
}
