//! Scalar traits shared by the exact linear algebra and projective code.
//!
//! Everything in this crate is generic over a [`Field`]; the two fields in
//! use are the rationals ([`Rational`]) and the non-Archimedean surrogate
//! field [`HReal`](crate::nonarch::HReal).

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a numerator and a nonzero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact field. Division by zero panics; callers that can see a zero
/// divisor test with [`Field::is_zero`] first.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// A totally ordered field.
pub trait OrderedField: Field {
    /// Sign of the element relative to zero.
    fn sign(&self) -> Ordering;

    fn cmp_field(&self, other: &Self) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            (self.clone() - other).sign()
        }
    }

    fn abs_val(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl OrderedField for Rational {
    fn sign(&self) -> Ordering {
        if Zero::is_zero(self) {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn cmp_field(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}
