//! The commutative matrix algebra diagonalized by the DST.
//!
//! Elements carry two parametrizations on N = dst_size(n) coefficients
//! (1-based throughout, matching the 1-based rows and columns of W):
//!
//! * the S-form, whose dense matrix has first row exactly s_1..s_N and whose
//!   entry (j, k) is `Σ_{ℓ=1}^{min(j,k)} sgn(n - 2r) s_{fold(r)}` with
//!   `r = |k - j| + 2ℓ - 1` (terms with r = n/2 drop out);
//! * for odd n only, the T-form with entries
//!   `t_{fold(j+k)} - t_{fold(j-k)}` (t_0 = 0), whose basis matrices
//!   `[T_i]_{j,k} = [fold(j-k) = i] - [fold(j+k) = i]` satisfy
//!   `W T_i W = diag(2 cos(2πik/n))`.
//!
//! Even-n elements satisfy the cross-sum relation
//! `a_{i-1,j} + a_{i+1,j} = a_{i,j-1} + a_{i,j+1}` (zero-padded) at every
//! cell; odd-n elements violate it, and only in the last row and column.

use crate::error::{Error, Result};
use crate::exact::ExactQuadratic;
use crate::group::fold;
use crate::matrix::{linear_solve, require_square, Matrix};
use crate::transforms::{cos_frac, dst_matrix, dst_size};
use num_complex::Complex64;
use std::f64::consts::TAU;

fn check_len(n: u64, len: usize) -> Result<()> {
    if len != dst_size(n) {
        return Err(Error::LengthMismatch {
            expected: dst_size(n),
            got: len,
        });
    }
    Ok(())
}

fn check_index(n: u64, i: usize) -> Result<()> {
    let size = dst_size(n);
    if i == 0 || i > size {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: size + 1,
        });
    }
    Ok(())
}

fn check_odd(n: u64) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus { n });
    }
    Ok(())
}

/// Signed S-parameter contributions to entry (j, k), 1-based.
fn s_entry_terms(n: u64, j: usize, k: usize) -> Vec<(usize, i64)> {
    let d = j.abs_diff(k);
    let mut terms = Vec::with_capacity(j.min(k));
    for l in 1..=j.min(k) {
        let raw = d + 2 * l - 1;
        let sign = (n as i64 - 2 * raw as i64).signum();
        if sign != 0 {
            terms.push((fold(raw as i64, n), sign));
        }
    }
    terms
}

/// The exact S-form basis matrix S_i (entries in {-1, 0, 1}); S_1 = I.
pub fn s_basis(n: u64, i: usize) -> Result<Matrix<ExactQuadratic>> {
    check_index(n, i)?;
    let size = dst_size(n);
    Ok(Matrix::from_fn(size, size, |j0, k0| {
        let total: i64 = s_entry_terms(n, j0 + 1, k0 + 1)
            .into_iter()
            .filter(|&(idx, _)| idx == i)
            .map(|(_, sign)| sign)
            .sum();
        ExactQuadratic::int(total)
    }))
}

/// The exact dense S-form matrix for exact parameters `s[0] = s_1, ...`.
pub fn s_general_exact(n: u64, s: &[ExactQuadratic]) -> Result<Matrix<ExactQuadratic>> {
    check_len(n, s.len())?;
    let size = dst_size(n);
    Ok(Matrix::from_fn(size, size, |j0, k0| {
        s_entry_terms(n, j0 + 1, k0 + 1)
            .into_iter()
            .fold(ExactQuadratic::int(0), |acc, (idx, sign)| {
                acc + s[idx - 1] * ExactQuadratic::int(sign)
            })
    }))
}

/// The exact T-form basis matrix T_i (odd n; entries in {-1, 0, 1}).
pub fn t_basis(n: u64, i: usize) -> Result<Matrix<ExactQuadratic>> {
    check_odd(n)?;
    check_index(n, i)?;
    let size = dst_size(n);
    Ok(Matrix::from_fn(size, size, |j0, k0| {
        let (j, k) = (j0 as i64 + 1, k0 as i64 + 1);
        let mut v = 0;
        if fold(j - k, n) == i {
            v += 1;
        }
        if fold(j + k, n) == i {
            v -= 1;
        }
        ExactQuadratic::int(v)
    }))
}

/// The exact dense T-form matrix `t_{fold(j+k)} - t_{fold(j-k)}` for exact
/// parameters (odd n).
pub fn t_general_exact(n: u64, t: &[ExactQuadratic]) -> Result<Matrix<ExactQuadratic>> {
    check_odd(n)?;
    check_len(n, t.len())?;
    let size = dst_size(n);
    let at = |m: usize| {
        if m == 0 {
            ExactQuadratic::int(0)
        } else {
            t[m - 1]
        }
    };
    Ok(Matrix::from_fn(size, size, |j0, k0| {
        let (j, k) = (j0 as i64 + 1, k0 as i64 + 1);
        at(fold(j + k, n)) - at(fold(j - k, n))
    }))
}

/// An element of the sine algebra in the S-parametrization: the dense
/// matrix's first row is exactly `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct DstElementS {
    n: u64,
    params: Vec<Complex64>,
}

/// An element of the sine algebra in the T-parametrization (odd n).
#[derive(Clone, Debug, PartialEq)]
pub struct DstElementT {
    n: u64,
    params: Vec<Complex64>,
}

impl DstElementS {
    pub fn new(n: u64, params: Vec<Complex64>) -> Result<Self> {
        check_len(n, params.len())?;
        Ok(DstElementS { n, params })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// s_1..s_N, stored 0-based.
    pub fn params(&self) -> &[Complex64] {
        &self.params
    }

    pub fn matrix(&self) -> Matrix<Complex64> {
        let size = dst_size(self.n);
        Matrix::from_fn(size, size, |j0, k0| {
            s_entry_terms(self.n, j0 + 1, k0 + 1)
                .into_iter()
                .fold(Complex64::new(0.0, 0.0), |acc, (idx, sign)| {
                    acc + self.params[idx - 1] * sign as f64
                })
        })
    }

    /// Eigenvalues `λ_k = Σ_j s_j sin(2πjk/n) / sin(2πk/n)` for k = 1..N,
    /// matching the diagonal of W (Σ s_j S_j) W.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let n = self.n;
        let sin = |m: usize| (TAU * m as f64 / n as f64).sin();
        (1..=dst_size(n))
            .map(|k| {
                let denom = sin(k);
                self.params
                    .iter()
                    .enumerate()
                    .map(|(idx, s)| *s * (sin((idx + 1) * k % n as usize) / denom))
                    .sum()
            })
            .collect()
    }

    /// Solves (Σ s_j S_j) x = rhs through `x = W ((W rhs) ./ λ)`.
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
        let w = dst_matrix(self.n).to_complex();
        let mut y = w.mul_vec(rhs);
        for (v, l) in y.iter_mut().zip(&lambda) {
            *v /= l;
        }
        Ok(w.mul_vec(&y))
    }

    /// Re-parametrizes into the T-form by solving the N × N system that
    /// equates first rows: `s_k = t_{fold(k+1)} - t_{fold(k-1)}`.
    pub fn to_t(&self) -> Result<DstElementT> {
        check_odd(self.n)?;
        let size = dst_size(self.n);
        let a = Matrix::from_fn(size, size, |k0, i0| {
            let k = k0 as i64 + 1;
            let i = i0 + 1;
            let mut v = 0.0;
            if fold(k + 1, self.n) == i {
                v += 1.0;
            }
            if fold(k - 1, self.n) == i {
                v -= 1.0;
            }
            Complex64::new(v, 0.0)
        });
        let t = linear_solve(&a, &self.params)
            .ok_or(Error::SingularConversion { n: self.n })?;
        DstElementT::new(self.n, t)
    }
}

impl DstElementT {
    pub fn new(n: u64, params: Vec<Complex64>) -> Result<Self> {
        check_odd(n)?;
        check_len(n, params.len())?;
        Ok(DstElementT { n, params })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// t_1..t_N, stored 0-based.
    pub fn params(&self) -> &[Complex64] {
        &self.params
    }

    pub fn matrix(&self) -> Matrix<Complex64> {
        let size = dst_size(self.n);
        let at = |m: usize| {
            if m == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                self.params[m - 1]
            }
        };
        Matrix::from_fn(size, size, |j0, k0| {
            let (j, k) = (j0 as i64 + 1, k0 as i64 + 1);
            at(fold(j + k, self.n)) - at(fold(j - k, self.n))
        })
    }

    /// Eigenvalues `λ_k = -Σ_i t_i 2 cos(2πik/n)` for k = 1..N.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let n = self.n;
        (1..=dst_size(n))
            .map(|k| {
                -self
                    .params
                    .iter()
                    .enumerate()
                    .map(|(idx, t)| *t * (2.0 * cos_frac(n, ((idx + 1) * k) as i64)))
                    .sum::<Complex64>()
            })
            .collect()
    }

    /// Re-parametrizes into the S-form by reading the first row.
    pub fn to_s(&self) -> DstElementS {
        let at = |m: usize| {
            if m == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                self.params[m - 1]
            }
        };
        let params = (1..=dst_size(self.n))
            .map(|k| at(fold(1 + k as i64, self.n)) - at(fold(k as i64 - 1, self.n)))
            .collect();
        DstElementS {
            n: self.n,
            params,
        }
    }
}

/// Accepts a matrix iff conjugation by W leaves it diagonal within `tol`,
/// and reads the S-parameters off the first row.
pub fn membership(m: &Matrix<Complex64>, n: u64, tol: f64) -> Result<DstElementS> {
    require_square(m, dst_size(n))?;
    let w = dst_matrix(n).to_complex();
    let residual = w.mul(m).mul(&w).offdiag_max_abs();
    if residual > tol {
        return Err(Error::NotInAlgebra {
            residual,
            tolerance: tol,
        });
    }
    let params = (0..dst_size(n)).map(|k| m[(0, k)]).collect();
    DstElementS::new(n, params)
}

/// T_i generates the whole T-form algebra exactly when gcd(i, n) = 1.
pub fn is_generator(n: u64, i: usize) -> Result<bool> {
    check_odd(n)?;
    check_index(n, i)?;
    Ok(num_integer::gcd(i as u64, n) == 1)
}

/// Cells (1-based) where the cross-sum relation fails by more than `tol`,
/// with the deviation magnitude.  Applies to any square matrix; indices are
/// zero-padded outside the matrix.
pub fn cross_sum_violations(m: &Matrix<Complex64>, tol: f64) -> Vec<(usize, usize, f64)> {
    assert!(m.is_square(), "cross-sum test needs a square matrix");
    let size = m.rows();
    let zero = Complex64::new(0.0, 0.0);
    let at = |r: i64, c: i64| {
        if r < 1 || c < 1 || r > size as i64 || c > size as i64 {
            zero
        } else {
            m[((r - 1) as usize, (c - 1) as usize)]
        }
    };
    let mut violations = Vec::new();
    for i in 1..=size as i64 {
        for j in 1..=size as i64 {
            let deviation =
                (at(i - 1, j) + at(i + 1, j) - at(i, j - 1) - at(i, j + 1)).norm();
            if deviation > tol {
                violations.push((i as usize, j as usize, deviation));
            }
        }
    }
    violations
}
