//! Exact scalar types.
//!
//! Everything in this crate is generic over [`Scalar`] (a commutative ring
//! with exact equality) and, where division is needed, [`Field`]. No floating
//! point is used anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

mod eps;
mod gaussian;
mod poly;
mod quadratic;
mod ratfunc;
mod rational;
pub mod roots;

pub use eps::{EpsPolynomial, Monomial};
pub use gaussian::GaussianRational;
pub use poly::Poly;
pub use quadratic::QuadraticRational;
pub use ratfunc::{rf_limit_at_zero, rf_substitute, RationalFunction};
pub use rational::{q, Rational};

/// A commutative ring with exact equality.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Canonical form. Every type in this module normalizes eagerly, so the
    /// default is a clone; the method exists so callers can assert idempotence.
    fn normalized(&self) -> Self {
        self.clone()
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;

    /// `self / rhs`, or `None` when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

/// Sum of a sequence of scalars.
pub fn sum<S: Scalar>(items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::zero(), |acc, x| acc + x)
}

/// Writes `coeff·monomial` as one term of a sum, folding the sign of a
/// plain negative coefficient into the separator. An empty monomial
/// stands for `1`.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &str, monomial: &str) -> fmt::Result {
    let atomic = |s: &str| !s.contains([' ', '+']) && !s[1..].contains('-');
    let (negative, body) = match coeff.strip_prefix('-') {
        Some(rest) if atomic(coeff) => (true, rest),
        _ => (false, coeff),
    };
    let sep = match (first, negative) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if monomial.is_empty() {
        write!(f, "{sep}{body}")
    } else if body == "1" {
        write!(f, "{sep}{monomial}")
    } else if atomic(body) {
        write!(f, "{sep}{body}*{monomial}")
    } else {
        write!(f, "{sep}({body})*{monomial}")
    }
}
