//! The single table of numerical tolerances used by the verification and
//! acceptance suites.
//!
//! Every bound is far above worst-case rounding for the sizes exercised
//! (n ≤ 256, entries O(1)): a dense unitary product accumulates error of
//! order `n·ε ≈ 6e-14`, so failures at these thresholds indicate genuine
//! algebraic defects rather than floating-point noise.

use crate::matrix::Matrix;
use num_complex::Complex64;

/// Unitarity defect `|Q Q^H - I|_max` of a transform matrix.
pub const UNITARITY: f64 = 1e-10;

/// Off-diagonal residue after conjugating an algebra element by its
/// transform.
pub const DIAG_RESIDUAL: f64 = 1e-10;

/// Distance between a closed-form eigenvalue and the computed diagonal.
pub const EIGEN_MATCH: f64 = 1e-9;

/// Defect in multiplicative laws (dense products vs structure constants,
/// eigenvalue homomorphism, supercharacter product rule).
pub const PRODUCT_RULE: f64 = 1e-8;

/// Parameter drift across an encode/decode round trip.
pub const ROUND_TRIP: f64 = 1e-10;

/// `|M x - rhs|_max` after a diagonalization-based solve on a
/// well-conditioned element.
pub const SOLVE_RESIDUAL: f64 = 1e-8;

/// Defect in transform/embedding commuting relations.
pub const COMMUTE: f64 = 1e-10;

/// Pointwise defect in trigonometric product identities.
pub const TRIG_IDENTITY: f64 = 1e-10;

/// Bound for identities exact up to a handful of rounding steps
/// (involutions, fourth powers, permutation structure).
pub const STRICT: f64 = 1e-12;

/// Base factor of [`default_membership_tol`].
pub const MEMBERSHIP_DEFAULT: f64 = 1e-9;

/// Minimal eigenvalue gap certifying that a basis element generates the
/// algebra.
pub const GENERATOR_SEPARATION: f64 = 1e-8;

/// Floor below which a membership rejection is considered too timid: clearly
/// foreign matrices must miss by at least this much.
pub const NONMEMBER_RESIDUAL: f64 = 1e-3;

/// Membership tolerance used when the caller does not pin one:
/// `MEMBERSHIP_DEFAULT * max(1, |M|_max)`.
pub fn default_membership_tol(m: &Matrix<Complex64>) -> f64 {
    MEMBERSHIP_DEFAULT * m.max_abs().max(1.0)
}
