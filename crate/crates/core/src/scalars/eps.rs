use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};

/// Exponent vector `(e₁, …, e_p)` with trailing zeros trimmed, so that the
/// same monomial has one representation regardless of `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `ε_{index+1}`
    pub fn var(index: usize) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = 1;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new(
            (0..n).map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0)).collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "eps{}", i + 1)?;
            } else {
                write!(f, "eps{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients in formal parameters
/// `ε₁, …, ε_p`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EpsPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl EpsPolynomial {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        EpsPolynomial { terms }
    }

    /// The parameter `ε_{index+1}`.
    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index), Rational::one())
    }

    /// Number of parameters actually occurring.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().enumerate().fold(c.clone(), |acc, (i, &e)| {
                    let x = point.get(i).cloned().unwrap_or_else(Rational::zero);
                    acc * x.pow(e)
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for EpsPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.insert_add(m, c);
        }
        self
    }
}

impl Sub for EpsPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for EpsPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = EpsPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for EpsPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        EpsPolynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Scalar for EpsPolynomial {
    fn zero() -> Self {
        EpsPolynomial::default()
    }
    fn one() -> Self {
        EpsPolynomial::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: &Rational) -> Self {
        EpsPolynomial::constant(r.clone())
    }
}

impl fmt::Display for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let monomial = if m.degree() == 0 { String::new() } else { m.to_string() };
            super::write_term(f, k == 0, &c.to_string(), &monomial)?;
        }
        Ok(())
    }
}

impl fmt::Debug for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let e1 = EpsPolynomial::var(0);
        let z = e1.clone() - e1;
        assert!(z.is_zero());
        assert_eq!(z.nvars(), 0);
    }

    #[test]
    fn product_and_eval() {
        let e1 = EpsPolynomial::var(0);
        let e2 = EpsPolynomial::var(1);
        let p = (e1.clone() + e2.clone()) * (e1 - e2);
        assert_eq!(p.nvars(), 2);
        let v = p.eval(&[Rational::from(3), Rational::from(2)]);
        assert_eq!(v, Rational::from(5));
        assert_eq!(p.to_string(), "-eps2^2 + eps1^2");
    }
}
