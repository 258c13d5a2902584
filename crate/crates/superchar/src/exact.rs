//! Exact arithmetic in Z[sqrt(2)].
//!
//! Basis matrices of the cosine and sine algebras have entries drawn from
//! {0, 1, 2, sqrt(2), -1}, so a pair of integers `a + b*sqrt(2)` represents
//! every value that occurs without rounding.  Equality of two values is
//! equality of the integer pairs.

use num_complex::Complex64;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The number `a + b*sqrt(2)` with integer `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactQuadratic {
    pub a: i64,
    pub b: i64,
}

impl ExactQuadratic {
    pub const fn new(a: i64, b: i64) -> Self {
        ExactQuadratic { a, b }
    }

    /// The integer `a`.
    pub const fn int(a: i64) -> Self {
        ExactQuadratic { a, b: 0 }
    }

    /// The value `sqrt(2)`.
    pub const fn sqrt2() -> Self {
        ExactQuadratic { a: 0, b: 1 }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl Add for ExactQuadratic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExactQuadratic::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for ExactQuadratic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ExactQuadratic::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for ExactQuadratic {
    type Output = Self;
    fn neg(self) -> Self {
        ExactQuadratic::new(-self.a, -self.b)
    }
}

impl Mul for ExactQuadratic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b*sqrt(2)) * (c + d*sqrt(2)) = ac + 2bd + (ad + bc)*sqrt(2)
        ExactQuadratic::new(
            self.a * rhs.a + 2 * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Zero for ExactQuadratic {
    fn zero() -> Self {
        ExactQuadratic::int(0)
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl One for ExactQuadratic {
    fn one() -> Self {
        ExactQuadratic::int(1)
    }
}

impl fmt::Display for ExactQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "sqrt(2)"),
            (0, -1) => write!(f, "-sqrt(2)"),
            (0, b) => write!(f, "{b}*sqrt(2)"),
            (a, b) if b > 0 => write!(f, "{a}+{b}*sqrt(2)"),
            (a, b) => write!(f, "{a}-{}*sqrt(2)", -b),
        }
    }
}
