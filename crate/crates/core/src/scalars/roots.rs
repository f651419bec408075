//! Exact real-root analysis for rational polynomials.
//!
//! Roots are isolated with Sturm sequences and rational bisection. A
//! rational root `p/q` of a primitive integer polynomial has `q` dividing
//! the leading coefficient `a`, so `a·r` is an integer; once an isolating
//! interval is narrower than `1/|a|` there is at most one candidate to
//! test exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Poly, Rational, Scalar};

/// Real roots of a nonzero polynomial, split by rationality.
#[derive(Clone, Debug, PartialEq)]
pub struct RootAnalysis {
    /// Distinct rational roots, ascending.
    pub rational: Vec<Rational>,
    /// Squarefree factor carrying all remaining roots (no rational roots).
    pub irrational_factor: Poly<Rational>,
    /// Number of distinct real roots of `irrational_factor`.
    pub irrational_real: usize,
}

impl RootAnalysis {
    pub fn has_real_root(&self) -> bool {
        !self.rational.is_empty() || self.irrational_real > 0
    }
}

fn sturm_sequence(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        seq.push(-r);
    }
    seq.pop();
    seq
}

/// Sign variations of the sequence at `x`, or at ±∞ when `x` is `None`.
fn variations(seq: &[Poly<Rational>], x: Option<&Rational>, plus_inf: bool) -> usize {
    let signs = seq.iter().map(|p| match x {
        Some(x) => p.eval(x).signum(),
        None => {
            let s = p.leading().signum();
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if plus_inf || !odd {
                s
            } else {
                -s
            }
        }
    });
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots.
pub fn real_root_count(p: &Poly<Rational>) -> usize {
    if p.is_constant() {
        return 0;
    }
    let s = p.squarefree_part();
    let seq = sturm_sequence(&s);
    variations(&seq, None, false) - variations(&seq, None, true)
}

fn root_bound(p: &Poly<Rational>) -> Rational {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs() / lead.clone())
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let s = p.squarefree_part();
    let ints = s.primitive_integer();
    let lead = Rational::from_integer(ints.last().unwrap().abs());
    let seq = sturm_sequence(&s);
    let bound = root_bound(&s);
    let count = |lo: &Rational, hi: &Rational| variations(&seq, Some(lo), false) - variations(&seq, Some(hi), false);

    let mut found = BTreeSet::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        let width = &hi - &lo;
        if c == 1 && width.clone() * lead.clone() < Rational::one() {
            let first: BigInt = (&lo * &lead).ceil();
            let last: BigInt = (&hi * &lead).floor();
            let mut m = first;
            while m <= last {
                let r = Rational::from_integer(m.clone()) / lead.clone();
                if r > lo && r < hi && s.eval(&r).is_zero() {
                    found.insert(r);
                }
                m += 1;
            }
            continue;
        }
        // Split at a point that is not a root so endpoint counts stay valid.
        let two = Rational::from(2);
        let mut mid = (&lo + &hi) / two.clone();
        let mut step = width / Rational::from(4);
        while s.eval(&mid).is_zero() {
            found.insert(mid.clone());
            step = step / two.clone();
            mid = &mid + &step;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found.into_iter().collect()
}

/// Full rational/irrational split of the real roots of `p`.
pub fn analyze(p: &Poly<Rational>) -> RootAnalysis {
    let rational = rational_roots(p);
    let mut rest = if p.is_zero() { Poly::zero() } else { p.squarefree_part() };
    for r in &rational {
        rest = rest.exact_div(&Poly::new(vec![-r.clone(), Rational::one()]));
    }
    let irrational_real = real_root_count(&rest);
    RootAnalysis { rational, irrational_factor: rest, irrational_real }
}

/// `true` if `n` is the square of a rational.
pub fn is_rational_square(n: &Rational) -> bool {
    n.sqrt_exact().is_some()
}

/// Common real roots of a family of polynomials, by way of their gcd.
/// Returns `None` when every polynomial is identically zero.
pub fn common_roots(polys: &[Poly<Rational>]) -> Option<RootAnalysis> {
    let g = polys.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return None;
    }
    Some(analyze(&g))
}

/// Determinant over a commutative ring by cofactor expansion; intended for
/// the small Sylvester matrices used in elimination.
pub fn det_ring<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    match n {
        0 => S::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut acc = S::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<S>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].clone() * det_ring(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Resultant of two polynomials over a commutative ring via the Sylvester
/// matrix.
pub fn resultant<S: Scalar>(f: &Poly<S>, g: &Poly<S>) -> S {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return S::zero();
    };
    if m == 0 && n == 0 {
        return S::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![S::zero(); size];
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![S::zero(); size];
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det_ring(&rows)
}
