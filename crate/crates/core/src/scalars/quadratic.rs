use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Field, Rational, Scalar};

/// Element `a + b·√d` of a quadratic extension of the rationals.
///
/// The radicand is carried at runtime. A radicand of zero marks an element
/// of the base field that is compatible with any extension; arithmetic
/// between two elements with different nonzero radicands panics. `d` must
/// not be a perfect square (checked by [`QuadraticRational::sqrt_of`]).
#[derive(Clone)]
pub struct QuadraticRational {
    pub a: Rational,
    pub b: Rational,
    d: BigInt,
}

impl QuadraticRational {
    pub fn rational(a: Rational) -> Self {
        QuadraticRational { a, b: Rational::zero(), d: BigInt::zero() }
    }

    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            return Self::rational(a);
        }
        assert!(!d.is_zero(), "irrational part needs a radicand");
        QuadraticRational { a, b, d }
    }

    /// `√d` for an integer `d` that is not a perfect square; `None` otherwise.
    pub fn sqrt_of(d: &BigInt) -> Option<Self> {
        if Rational::from_integer(d.clone()).sqrt_exact().is_some() {
            return None;
        }
        Some(QuadraticRational::new(Rational::zero(), Rational::one(), d.clone()))
    }

    /// `√r` for a nonnegative rational, as a rational when `r` is a square.
    pub fn sqrt(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if let Some(s) = r.sqrt_exact() {
            return Some(Self::rational(s));
        }
        // √(n/m) = √(nm)/m = s·√d/m.
        let (s, d) = super::rational::extract_small_squares(&(r.numer() * r.denom()));
        let b = Rational::new(s, r.denom().clone());
        Some(QuadraticRational::new(Rational::zero(), b, d))
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        (!self.d.is_zero()).then_some(&self.d)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn join(&self, other: &Self) -> BigInt {
        match (self.d.is_zero(), other.d.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixing different quadratic extensions");
                self.d.clone()
            }
        }
    }

    fn conj(&self) -> Self {
        QuadraticRational::new(self.a.clone(), -self.b.clone(), self.d.clone())
    }
}

impl PartialEq for QuadraticRational {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Add for QuadraticRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.join(&rhs);
        QuadraticRational::new(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QuadraticRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.join(&rhs);
        QuadraticRational::new(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Mul for QuadraticRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.join(&rhs);
        let dr = Rational::from_integer(d.clone());
        QuadraticRational::new(&self.a * &rhs.a + &self.b * &rhs.b * dr, &self.a * &rhs.b + &self.b * &rhs.a, d)
    }
}

impl Neg for QuadraticRational {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticRational::new(-self.a, -self.b, self.d)
    }
}

impl Scalar for QuadraticRational {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

impl Field for QuadraticRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + b√d)(a - b√d) = a² - d b², nonzero because d is not a square.
        let n = &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone());
        let ni = n.inv()?;
        let c = self.conj();
        Some(QuadraticRational::new(c.a * ni.clone(), c.b * ni, self.d.clone()))
    }
}

impl fmt::Display for QuadraticRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadraticRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
