use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rational, Scalar};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Poly::new(vec![S::zero(), S::one()])
    }

    /// `c·t^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Composition `self(s(t))`.
    pub fn compose(&self, s: &Poly<S>) -> Poly<S> {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| acc * s.clone() + Poly::constant(c.clone()))
    }

    pub fn derivative(&self) -> Poly<S> {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * S::from_i64(k as i64)).collect())
    }

    pub fn scale(&self, c: &S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiplicity of `t` as a factor (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.coeffs.len())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<S: Field> Poly<S> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly<S>) -> (Poly<S>, Poly<S>) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![S::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = rem[k].clone() * lead_inv.clone();
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx].clone() - c.clone() * dc.clone();
                }
                quo[k - dd] = c;
            }
            rem.pop();
        }
        (Poly::new(quo), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly<S> {
        match self.leading().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly<S>) -> Poly<S> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly<S>) -> Poly<S> {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Poly<S> {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }
}

impl Poly<Rational> {
    /// Integer-coefficient primitive multiple with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<num_bigint::BigInt> {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        let mut l = num_bigint::BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let mut ints: Vec<num_bigint::BigInt> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut g = num_bigint::BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            for c in &mut ints {
                *c /= &g;
            }
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in &mut ints {
                *c = -c.clone();
            }
        }
        ints
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Poly<S>) -> Poly<S> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(vec![]);
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Scalar for Poly<S> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn one() -> Self {
        Poly::constant(S::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(S::from_rational(r))
    }
    fn normalized(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.normalized()).collect())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            super::write_term(f, first, &c.to_string(), &monomial)?;
            first = false;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::q;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (qq, r) = a.div_rem(&p(&[-1, 1]));
        assert_eq!(qq, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn compose_and_eval() {
        let r = p(&[0, 1, 1]); // t + t^2
        let s = p(&[1, 1]); // t + 1
        assert_eq!(r.compose(&s), p(&[2, 3, 1]));
        assert_eq!(r.eval(&q(1, 2)), q(3, 4));
    }

    #[test]
    fn squarefree() {
        // (t-1)^2 (t+1)
        let a = p(&[1, -1, -1, 1]);
        assert_eq!(a.squarefree_part(), p(&[-1, 0, 1]));
    }

    #[test]
    fn primitive_integer_form() {
        let a = Poly::new(vec![q(1, 2), q(-1, 3)]);
        let ints: Vec<i64> = a.primitive_integer().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(ints, vec![-3, 2]);
    }

    #[test]
    fn display_folds_signs() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-t^2");
        assert_eq!(Poly::new(vec![q(-1, 2), q(3, 4)]).to_string(), "3/4*t - 1/2");
        assert_eq!(Poly::<Rational>::zero().to_string(), "0");
    }
}
