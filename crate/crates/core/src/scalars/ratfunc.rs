use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, Poly, Rational, Scalar};
use crate::error::{Error, Result};

/// Quotient of two polynomials in the contraction parameter `t`.
///
/// Normalized on construction: numerator and denominator are coprime and
/// the denominator is monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RationalFunction {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let lead = den.leading().inv().expect("nonzero denominator");
        RationalFunction { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `c·t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        Self::from_poly(Poly::monomial(c, k))
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    /// Value at `t = x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x) * di)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }
}

/// Limit of `r(t)` as `t → 0`.
///
/// Because `r` is kept in lowest terms, the limit exists exactly when the
/// reduced denominator does not vanish at zero.
pub fn rf_limit_at_zero(r: &RationalFunction) -> Result<Rational> {
    let d0 = r.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtZero);
    }
    Ok(r.num.coeff(0) / d0)
}

/// Composition `r(s(t))`.
pub fn rf_substitute(r: &RationalFunction, s: &Poly<Rational>) -> RationalFunction {
    RationalFunction::normalize(r.num.compose(s), r.den.compose(s))
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::normalize(self.num + rhs.num, self.den);
        }
        Self::normalize(self.num * rhs.den.clone() + rhs.num * self.den.clone(), self.den * rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::normalize(self.num * rhs.num, self.den * rhs.den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(Poly::constant(r.clone()))
    }
    fn normalized(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::normalize(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RfRepr {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RfRepr { num: self.num.coeffs().to_vec(), den: self.den.coeffs().to_vec() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        // A bare rational is accepted as a constant function.
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Full(RfRepr),
            Const(Rational),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Full(r) => {
                RationalFunction::new(Poly::new(r.num), Poly::new(r.den)).map_err(serde::de::Error::custom)
            }
            Repr::Const(c) => Ok(RationalFunction::from_rational(&c)),
        }
    }
}
