//! The commutative matrix algebra diagonalized by the DCT.
//!
//! With N = floor(n/2), the orbits of negation on Z/nZ are X_0 = {0},
//! X_i = {i, n-i}, and (for even n) X_{n/2} = {n/2}.  The algebra has the
//! basis T_0 = I, T_1, ..., T_N with
//!
//! ```text
//! [T_i]_{j,k} = c_{ijk} * sqrt(|X_k|) / sqrt(|X_j|),
//! c_{ijk} = #{(x, y) in X_i × X_j : x + y = k (mod n)},
//! ```
//!
//! so every entry is one of 0, 1, 2, sqrt(2) and is represented exactly.
//! Conjugating T_i by the DCT matrix gives diag(|X_i| cos(2πik/n)), and an
//! element Σ t_i T_i is determined by its first row: entry (0, k) equals
//! t_k sqrt(|X_k|).

use crate::error::{Error, Result};
use crate::exact::ExactQuadratic;
use crate::group::fold;
use crate::matrix::{require_square, Matrix};
use crate::transforms::{cos_frac, dct_matrix, dct_size};
use num_complex::Complex64;
use num_integer::gcd;

/// |X_i| for the negation orbits: 1 for {0} and (even n) {n/2}, else 2.
pub fn class_size(n: u64, i: usize) -> usize {
    debug_assert!(i < dct_size(n), "class index out of range");
    if i == 0 || 2 * i as u64 == n {
        1
    } else {
        2
    }
}

/// Members of X_i without duplicates.
fn class_members(n: u64, i: usize) -> [u64; 2] {
    let i = i as u64;
    if i == 0 || 2 * i == n {
        [i, i]
    } else {
        [i, n - i]
    }
}

/// The count c_{ijk} = #{(x, y) in X_i × X_j : x + y = k}, evaluated at the
/// least representative k of X_k.
fn coeff(n: u64, i: usize, j: usize, k: usize) -> u64 {
    let members = class_members(n, i);
    let take = if members[0] == members[1] { 1 } else { 2 };
    members[..take]
        .iter()
        .filter(|&&x| fold(k as i64 - x as i64, n) == j)
        .count() as u64
}

/// `c * sqrt(|X_k|/|X_j|)` as an exact value.  The only fractional case,
/// |X_j| = 2 and |X_k| = 1, always carries an even count.
fn scaled_count(c: u64, size_j: usize, size_k: usize) -> ExactQuadratic {
    match (size_j, size_k) {
        (a, b) if a == b => ExactQuadratic::int(c as i64),
        (1, 2) => ExactQuadratic::new(0, c as i64),
        (2, 1) => {
            debug_assert!(c.is_multiple_of(2), "half-weight entries come in pairs");
            ExactQuadratic::new(0, (c / 2) as i64)
        }
        _ => unreachable!("orbit sizes are 1 or 2"),
    }
}

fn check_index(n: u64, i: usize) -> Result<()> {
    if i >= dct_size(n) {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: dct_size(n),
        });
    }
    Ok(())
}

fn check_len(n: u64, len: usize) -> Result<()> {
    if len != dct_size(n) {
        return Err(Error::LengthMismatch {
            expected: dct_size(n),
            got: len,
        });
    }
    Ok(())
}

/// The exact basis matrix T_i.
pub fn basis(n: u64, i: usize) -> Result<Matrix<ExactQuadratic>> {
    check_index(n, i)?;
    let size = dct_size(n);
    Ok(Matrix::from_fn(size, size, |j, k| {
        scaled_count(coeff(n, i, j, k), class_size(n, j), class_size(n, k))
    }))
}

/// The exact dense matrix Σ t_i T_i for exact parameters.
pub fn general_exact(n: u64, t: &[ExactQuadratic]) -> Result<Matrix<ExactQuadratic>> {
    check_len(n, t.len())?;
    let size = dct_size(n);
    Ok(Matrix::from_fn(size, size, |j, k| {
        let mut acc = ExactQuadratic::int(0);
        let lo = fold(k as i64 - j as i64, n);
        let hi = fold(k as i64 + j as i64, n);
        for i in candidate_indices(lo, hi) {
            let c = coeff(n, i, j, k);
            if c > 0 {
                acc = acc + t[i] * scaled_count(c, class_size(n, j), class_size(n, k));
            }
        }
        acc
    }))
}

/// Nonzero contributions to entry (j, k) can only come from the classes of
/// k - j and k + j.
fn candidate_indices(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    let second = if hi == lo { None } else { Some(hi) };
    std::iter::once(lo).chain(second)
}

/// The dense matrix written through its closed entry layout: first row and
/// column `sqrt(|X_j||X_k|) t_{max(j,k)}`, the mirrored rule on the row and
/// column n/2 when n is even, and `t_{fold(k-j)} + t_{fold(k+j)}` inside.
/// Cross-checks the structure-count construction entry by entry.
pub fn general_piecewise(n: u64, t: &[Complex64]) -> Result<Matrix<Complex64>> {
    check_len(n, t.len())?;
    let size = dct_size(n);
    let half = (n / 2) as usize;
    Ok(Matrix::from_fn(size, size, |j, k| {
        let border = |a: usize, b: usize| {
            let scale = ((class_size(n, a) * class_size(n, b)) as f64).sqrt();
            t[a.max(b)] * scale
        };
        if j == 0 || k == 0 {
            border(j, k)
        } else if n.is_multiple_of(2) && (j == half || k == half) {
            border(half - j, half - k)
        } else {
            t[fold(k as i64 - j as i64, n)] + t[fold(k as i64 + j as i64, n)]
        }
    }))
}

/// An element Σ t_i T_i of the cosine algebra, stored by its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct DctElement {
    n: u64,
    params: Vec<Complex64>,
}

impl DctElement {
    pub fn new(n: u64, params: Vec<Complex64>) -> Result<Self> {
        check_len(n, params.len())?;
        Ok(DctElement { n, params })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn params(&self) -> &[Complex64] {
        &self.params
    }

    /// The dense matrix Σ t_i T_i.
    pub fn matrix(&self) -> Matrix<Complex64> {
        let n = self.n;
        let size = dct_size(n);
        Matrix::from_fn(size, size, |j, k| {
            let scale = ((class_size(n, k) as f64) / (class_size(n, j) as f64)).sqrt();
            let mut acc = Complex64::new(0.0, 0.0);
            let lo = fold(k as i64 - j as i64, n);
            let hi = fold(k as i64 + j as i64, n);
            for i in candidate_indices(lo, hi) {
                let c = coeff(n, i, j, k);
                if c > 0 {
                    acc += self.params[i] * (c as f64 * scale);
                }
            }
            acc
        })
    }

    /// Eigenvalues `λ_k = Σ_i t_i |X_i| cos(2πik/n)` for k = 0..N, matching
    /// the diagonal of U (Σ t_i T_i) U.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let n = self.n;
        (0..dct_size(n))
            .map(|k| {
                self.params
                    .iter()
                    .enumerate()
                    .map(|(i, t)| *t * (class_size(n, i) as f64 * cos_frac(n, (i * k) as i64)))
                    .sum()
            })
            .collect()
    }

    /// The product of two elements, computed on parameters through the
    /// structure counts: `(a b)_k = Σ_i Σ_{x in X_i} a_i b_{fold(k - x)}`.
    pub fn multiply(&self, rhs: &DctElement) -> Result<DctElement> {
        if self.n != rhs.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let size = dct_size(n);
        let mut params = vec![Complex64::new(0.0, 0.0); size];
        for (k, out) in params.iter_mut().enumerate() {
            for (i, a) in self.params.iter().enumerate() {
                let members = class_members(n, i);
                let take = if members[0] == members[1] { 1 } else { 2 };
                for &x in &members[..take] {
                    *out += a * rhs.params[fold(k as i64 - x as i64, n)];
                }
            }
        }
        DctElement::new(n, params)
    }

    /// Solves (Σ t_i T_i) x = rhs through the spectral decomposition
    /// `x = U ((U rhs) ./ λ)`.  Eigenvalues with |λ_k| <= singular_tol make
    /// the element singular.
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
        let u = dct_matrix(self.n).to_complex();
        let mut y = u.mul_vec(rhs);
        for (v, l) in y.iter_mut().zip(&lambda) {
            *v /= l;
        }
        Ok(u.mul_vec(&y))
    }
}

/// Accepts a matrix iff conjugation by the DCT matrix leaves it diagonal
/// within `tol`, and reads the parameters off the first row:
/// `t_k = M[0][k] / sqrt(|X_k|)`.
pub fn membership(m: &Matrix<Complex64>, n: u64, tol: f64) -> Result<DctElement> {
    require_square(m, dct_size(n))?;
    let u = dct_matrix(n).to_complex();
    let residual = u.mul(m).mul(&u).offdiag_max_abs();
    if residual > tol {
        return Err(Error::NotInAlgebra {
            residual,
            tolerance: tol,
        });
    }
    let params = (0..dct_size(n))
        .map(|k| m[(0, k)] / (class_size(n, k) as f64).sqrt())
        .collect();
    DctElement::new(n, params)
}

/// T_i generates the whole algebra (its eigenvalues are pairwise distinct)
/// exactly when gcd(i, n) = 1.
pub fn is_generator(n: u64, i: usize) -> Result<bool> {
    check_index(n, i)?;
    Ok(gcd(i as u64, n) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Parses "0 1 2 s" rows (s = sqrt2) into an exact matrix.
    fn exact_matrix(rows: &[&str]) -> Matrix<ExactQuadratic> {
        let parsed: Vec<Vec<ExactQuadratic>> = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| match tok {
                        "s" => ExactQuadratic::sqrt2(),
                        "-s" => -ExactQuadratic::sqrt2(),
                        _ => ExactQuadratic::int(tok.parse().expect("integer token")),
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&parsed)
    }

    fn random_params(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
        (0..len)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn basis_n7_index3() {
        let expected = exact_matrix(&["0 0 0 s", "0 0 1 1", "0 1 1 0", "s 1 0 0"]);
        assert_eq!(basis(7, 3).unwrap(), expected);
    }

    #[test]
    fn basis_n8_index3() {
        let expected = exact_matrix(&[
            "0 0 0 s 0",
            "0 0 1 0 s",
            "0 1 0 1 0",
            "s 0 1 0 0",
            "0 s 0 0 0",
        ]);
        assert_eq!(basis(8, 3).unwrap(), expected);
    }

    #[test]
    fn basis_family_n10() {
        let expected = [
            vec!["1 0 0 0 0 0", "0 1 0 0 0 0", "0 0 1 0 0 0", "0 0 0 1 0 0", "0 0 0 0 1 0", "0 0 0 0 0 1"],
            vec!["0 s 0 0 0 0", "s 0 1 0 0 0", "0 1 0 1 0 0", "0 0 1 0 1 0", "0 0 0 1 0 s", "0 0 0 0 s 0"],
            vec!["0 0 s 0 0 0", "0 1 0 1 0 0", "s 0 0 0 1 0", "0 1 0 0 0 s", "0 0 1 0 1 0", "0 0 0 s 0 0"],
            vec!["0 0 0 s 0 0", "0 0 1 0 1 0", "0 1 0 0 0 s", "s 0 0 0 1 0", "0 1 0 1 0 0", "0 0 s 0 0 0"],
            vec!["0 0 0 0 s 0", "0 0 0 1 0 s", "0 0 1 0 1 0", "0 1 0 1 0 0", "s 0 1 0 0 0", "0 s 0 0 0 0"],
            vec!["0 0 0 0 0 1", "0 0 0 0 1 0", "0 0 0 1 0 0", "0 0 1 0 0 0", "0 1 0 0 0 0", "1 0 0 0 0 0"],
        ];
        for (i, rows) in expected.iter().enumerate() {
            assert_eq!(basis(10, i).unwrap(), exact_matrix(rows), "T_{i}");
        }
    }

    #[test]
    fn basis_family_n11() {
        let expected = [
            vec!["1 0 0 0 0 0", "0 1 0 0 0 0", "0 0 1 0 0 0", "0 0 0 1 0 0", "0 0 0 0 1 0", "0 0 0 0 0 1"],
            vec!["0 s 0 0 0 0", "s 0 1 0 0 0", "0 1 0 1 0 0", "0 0 1 0 1 0", "0 0 0 1 0 1", "0 0 0 0 1 1"],
            vec!["0 0 s 0 0 0", "0 1 0 1 0 0", "s 0 0 0 1 0", "0 1 0 0 0 1", "0 0 1 0 0 1", "0 0 0 1 1 0"],
            vec!["0 0 0 s 0 0", "0 0 1 0 1 0", "0 1 0 0 0 1", "s 0 0 0 0 1", "0 1 0 0 1 0", "0 0 1 1 0 0"],
            vec!["0 0 0 0 s 0", "0 0 0 1 0 1", "0 0 1 0 0 1", "0 1 0 0 1 0", "s 0 0 1 0 0", "0 1 1 0 0 0"],
            vec!["0 0 0 0 0 s", "0 0 0 0 1 1", "0 0 0 1 1 0", "0 0 1 1 0 0", "0 1 1 0 0 0", "s 1 0 0 0 0"],
        ];
        for (i, rows) in expected.iter().enumerate() {
            assert_eq!(basis(11, i).unwrap(), exact_matrix(rows), "T_{i}");
        }
    }

    #[test]
    fn basis_entries_stay_in_the_grammar() {
        for n in 1..=40u64 {
            for i in 0..dct_size(n) {
                let t = basis(n, i).unwrap();
                assert_eq!(t, t.transpose(), "T_{i} symmetric, n={n}");
                for &e in t.data() {
                    let ok = matches!(
                        (e.a, e.b),
                        (0, 0) | (1, 0) | (2, 0) | (0, 1)
                    );
                    assert!(ok, "entry {e:?} outside grammar, n={n} i={i}");
                }
            }
            assert_eq!(
                basis(n, 0).unwrap(),
                Matrix::identity(dct_size(n)),
                "T_0 = I, n={n}"
            );
        }
    }

    #[test]
    fn dense_matrix_matches_basis_combination_and_layout() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in [4u64, 7, 10, 11, 16, 21] {
            let params = random_params(&mut rng, dct_size(n));
            let e = DctElement::new(n, params.clone()).unwrap();
            let dense = e.matrix();
            let mut by_basis = Matrix::zeros(dct_size(n), dct_size(n));
            for (i, t) in params.iter().enumerate() {
                let b = basis(n, i).unwrap().to_complex();
                by_basis = by_basis.add(&b.scale(*t));
            }
            assert!(dense.max_abs_diff(&by_basis) < 1e-12, "n={n}");
            let layout = general_piecewise(n, &params).unwrap();
            assert!(dense.max_abs_diff(&layout) < 1e-12, "layout n={n}");
        }
    }

    #[test]
    fn exact_general_agrees_with_float_general() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for n in [7u64, 10, 12] {
            let ints: Vec<i64> = (0..dct_size(n)).map(|_| rng.gen_range(-4..5)).collect();
            let exact: Vec<ExactQuadratic> = ints.iter().map(|&a| ExactQuadratic::int(a)).collect();
            let complexes: Vec<Complex64> = ints
                .iter()
                .map(|&a| Complex64::new(a as f64, 0.0))
                .collect();
            let lhs = general_exact(n, &exact).unwrap().to_complex();
            let rhs = DctElement::new(n, complexes).unwrap().matrix();
            assert!(lhs.max_abs_diff(&rhs) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn eigenvalues_match_conjugated_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for n in [5u64, 8, 11] {
            let e = DctElement::new(n, random_params(&mut rng, dct_size(n))).unwrap();
            let u = dct_matrix(n).to_complex();
            let h = u.mul(&e.matrix()).mul(&u);
            assert!(h.offdiag_max_abs() < 1e-12);
            for (k, lambda) in e.eigenvalues().iter().enumerate() {
                assert!((h[(k, k)] - lambda).norm() < 1e-11, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn squaring_the_third_basis_element_mod_7() {
        let e3 = DctElement::new(7, vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let sq = e3.multiply(&e3).unwrap();
        let expected = [2.0, 1.0, 0.0, 0.0];
        for (k, p) in sq.params().iter().enumerate() {
            assert!((p - Complex64::new(expected[k], 0.0)).norm() < 1e-13, "k={k}");
        }
        // and the parameter product matches the dense product
        let dense = e3.matrix().mul(&e3.matrix());
        assert!(dense.max_abs_diff(&sq.matrix()) < 1e-12);
    }

    #[test]
    fn multiply_matches_dense_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for n in [6u64, 9, 12] {
            let a = DctElement::new(n, random_params(&mut rng, dct_size(n))).unwrap();
            let b = DctElement::new(n, random_params(&mut rng, dct_size(n))).unwrap();
            let ab = a.multiply(&b).unwrap();
            assert!(ab.matrix().max_abs_diff(&a.matrix().mul(&b.matrix())) < 1e-12);
            // eigenvalues multiply pointwise
            for ((la, lb), lab) in a
                .eigenvalues()
                .iter()
                .zip(b.eigenvalues())
                .zip(ab.eigenvalues())
            {
                assert!((la * lb - lab).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn membership_round_trip_and_rejection() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for n in [8u64, 11] {
            let e = DctElement::new(n, random_params(&mut rng, dct_size(n))).unwrap();
            let back = membership(&e.matrix(), n, 1e-9).unwrap();
            for (p, q) in e.params().iter().zip(back.params()) {
                assert!((p - q).norm() < 1e-11);
            }
        }
        // a cyclic shift is not symmetric under negation, so it must fail
        let size = dct_size(5);
        let shift = Matrix::from_fn(size, size, |j, k| {
            if (j + 1) % size == k {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        match membership(&shift, 5, 1e-9) {
            Err(Error::NotInAlgebra { residual, .. }) => assert!(residual > 1e-3),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn solve_inverts_well_conditioned_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for n in [7u64, 12] {
            let mut params = random_params(&mut rng, dct_size(n));
            params[0] += Complex64::new(8.0, 0.0); // dominate: all |λ| >= 8 - 2Σ|t_i|
            let e = DctElement::new(n, params).unwrap();
            let rhs = random_params(&mut rng, dct_size(n));
            let x = e.solve(&rhs, 1e-12).unwrap();
            let back = e.matrix().mul_vec(&x);
            let err = back
                .iter()
                .zip(&rhs)
                .fold(0.0f64, |m, (u, v)| m.max((u - v).norm()));
            assert!(err < 1e-10, "n={n} err={err:.3e}");
        }
    }

    #[test]
    fn solve_reports_singular_indices() {
        // n = 4, t = e_1: eigenvalues 2 cos(2πk/4) = (2, 0, -2)
        let e = DctElement::new(4, vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ])
        .unwrap();
        let rhs = vec![Complex64::new(1.0, 0.0); 3];
        assert_eq!(
            e.solve(&rhs, 1e-12),
            Err(Error::SingularElement { indices: vec![1] })
        );
    }

    #[test]
    fn generator_criterion_is_coprimality() {
        let generators: Vec<usize> = (0..dct_size(12))
            .filter(|&i| is_generator(12, i).unwrap())
            .collect();
        assert_eq!(generators, vec![1, 5]);
        assert!(is_generator(7, 3).unwrap());
        assert!(!is_generator(7, 0).unwrap());
        assert!(is_generator(1, 0).unwrap()); // gcd(0, 1) = 1: the 1x1 algebra
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            basis(10, 6),
            Err(Error::IndexOutOfRange { index: 6, limit: 6 })
        ));
        assert!(DctElement::new(10, vec![Complex64::new(0.0, 0.0); 5]).is_err());
        let a = DctElement::new(10, vec![Complex64::new(1.0, 0.0); 6]).unwrap();
        let b = DctElement::new(12, vec![Complex64::new(1.0, 0.0); 7]).unwrap();
        assert!(matches!(
            a.multiply(&b),
            Err(Error::ModulusMismatch { left: 10, right: 12 })
        ));
        let wide = Matrix::zeros(3, 4);
        assert!(matches!(
            membership(&wide, 10, 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
