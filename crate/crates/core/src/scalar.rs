//! Field elements.
//!
//! Two realizations of the ground field are provided: exact rationals over
//! arbitrary-precision integers ([`Rational`]) and binary64 floats. Every
//! zero test that decides a theorem goes through [`Rational`]; floats are
//! only used for trigonometric inputs and tolerance comparisons.

use core::fmt::{Debug, Display};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::{det_bareiss, det_expansion, Matrix};
use crate::Error;

/// Exact rational in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

/// Arithmetic needed by the multilinear formulas, plus a backend-specific
/// determinant.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Determinant of a square matrix on this backend.
    fn determinant(m: &Matrix<Self>) -> Result<Self, Error>;
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn determinant(m: &Matrix<Self>) -> Result<Self, Error> {
        det_bareiss(m)
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn determinant(m: &Matrix<Self>) -> Result<Self, Error> {
        det_expansion(m)
    }
}

/// Builds the canonical rational `p/q`.
pub fn normalize_rational(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational, Error> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::InvalidScalar);
    }
    Ok(Rational::new(p.into(), q))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// Shorthand for `p/q`; panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    normalize_rational(p, q).expect("zero denominator")
}
