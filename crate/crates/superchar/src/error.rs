//! Error type shared by every module of the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or operating on the algebras.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A generator passed to a unit-subgroup constructor is not coprime to n.
    NonUnitGenerator { n: u64, generator: u64 },
    /// A basis or parameter index lies outside the valid range for the modulus.
    IndexOutOfRange { index: usize, limit: usize },
    /// A parameter or sample vector has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// A matrix has the wrong shape for the requested operation.
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// Two operands belong to algebras with different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// The operation is only defined for odd moduli.
    EvenModulus { n: u64 },
    /// Conjugation by the transform did not leave a diagonal matrix.
    NotInAlgebra { residual: f64, tolerance: f64 },
    /// The element has eigenvalues too close to zero to invert.
    SingularElement { indices: Vec<usize> },
    /// The change-of-parametrization system was numerically singular.
    SingularConversion { n: u64 },
    /// An n-range with min > max or min < 1.
    InvalidRange { min: u64, max: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitGenerator { n, generator } => {
                write!(f, "generator {generator} is not a unit modulo {n}")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "index {index} out of range (limit {limit})")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            Error::DimensionMismatch { expected, got } => write!(
                f,
                "expected a {}x{} matrix, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::ModulusMismatch { left, right } => {
                write!(f, "mismatched moduli: {left} vs {right}")
            }
            Error::EvenModulus { n } => {
                write!(f, "operation requires an odd modulus, got {n}")
            }
            Error::NotInAlgebra {
                residual,
                tolerance,
            } => write!(
                f,
                "matrix is not in the algebra: off-diagonal residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
            ),
            Error::SingularElement { indices } => {
                write!(f, "element is singular at eigenvalue indices {indices:?}")
            }
            Error::SingularConversion { n } => {
                write!(f, "parametrization change is singular for n = {n}")
            }
            Error::InvalidRange { min, max } => {
                write!(f, "invalid range: min {min}, max {max}")
            }
        }
    }
}

impl std::error::Error for Error {}
