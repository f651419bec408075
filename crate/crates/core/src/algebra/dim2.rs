//! Closed-form searches in dimension two: idempotents, square-zero
//! elements and one-dimensional ideals.
//!
//! For `x = u₁e₁ + u₂e₂` write `x∘x = Q(u) = u₁²A + u₁u₂S + u₂²D` with
//! `A = e₁e₁`, `S = e₁e₂ + e₂e₁`, `D = e₂e₂`. A nonzero idempotent lies on
//! a direction `u` with `Q(u) = λu`, `λ ≠ 0`, namely `x = u/λ`; these
//! directions are the projective roots of the binary cubic
//! `u₁Q₂(u) − u₂Q₁(u)`. Square-zero directions are the common roots of
//! `Q₁` and `Q₂`.

use crate::error::{Error, Result};
use crate::scalars::roots::{self, RootAnalysis};
use crate::scalars::{Poly, Rational, Scalar};

use super::{identity_element, Algebra, Element, Subspace};

/// Outcome of an exact search for a special element.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecialElement {
    /// A witness with rational coordinates.
    Rational(Element<Rational>),
    /// Real solutions exist but none is rational. The witness lies on a line
    /// `e₁ + λe₂` where `λ` is a real root of the given irreducible
    /// polynomial.
    ExistsIrrational {
        slope_polynomial: Poly<Rational>,
    },
    NotFound,
}

impl SpecialElement {
    pub fn exists(&self) -> bool {
        !matches!(self, SpecialElement::NotFound)
    }

    pub fn rational(&self) -> Option<&Element<Rational>> {
        match self {
            SpecialElement::Rational(e) => Some(e),
            _ => None,
        }
    }
}

fn require_dim2(alg: &Algebra<Rational>) -> Result<()> {
    if alg.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: alg.dim() });
    }
    Ok(())
}

struct Quadric {
    a: [Rational; 2],
    s: [Rational; 2],
    d: [Rational; 2],
}

impl Quadric {
    fn of(alg: &Algebra<Rational>) -> Self {
        let c = |i, j, k| alg.constant(i, j, k).clone();
        Quadric {
            a: [c(0, 0, 0), c(0, 0, 1)],
            s: [c(0, 1, 0) + c(1, 0, 0), c(0, 1, 1) + c(1, 0, 1)],
            d: [c(1, 1, 0), c(1, 1, 1)],
        }
    }

    /// `Q_k(1, λ)` as a polynomial in `λ`.
    fn affine(&self, k: usize) -> Poly<Rational> {
        Poly::new(vec![self.a[k].clone(), self.s[k].clone(), self.d[k].clone()])
    }

    fn eval(&self, u: &[Rational; 2]) -> [Rational; 2] {
        let (u1, u2) = (&u[0], &u[1]);
        std::array::from_fn(|k| u1 * u1 * self.a[k].clone() + u1 * u2 * self.s[k].clone() + u2 * u2 * self.d[k].clone())
    }
}

/// If `Q(u) = λu` with `λ ≠ 0`, the idempotent `u/λ`.
fn idempotent_on(q: &Quadric, u: [Rational; 2]) -> Option<Element<Rational>> {
    let qu = q.eval(&u);
    let k = if u[0].is_zero() { 1 } else { 0 };
    let lambda = qu[k].clone() / u[k].clone();
    if lambda.is_zero() {
        return None;
    }
    debug_assert_eq!(qu[1 - k], &lambda * &u[1 - k]);
    Some(Element::new(vec![u[0].clone() / lambda.clone(), u[1].clone() / lambda]))
}

/// A nonzero idempotent different from the identity.
pub fn nontrivial_idempotent2(alg: &Algebra<Rational>) -> Result<SpecialElement> {
    require_dim2(alg)?;
    let q = Quadric::of(alg);
    let identity = identity_element(alg);
    let admissible = |x: &Element<Rational>| identity.as_ref() != Some(x);

    // u₁Q₂ − u₂Q₁ at u = (1, λ).
    let cubic = Poly::new(vec![
        q.a[1].clone(),
        q.s[1].clone() - q.a[0].clone(),
        q.d[1].clone() - q.s[0].clone(),
        -q.d[0].clone(),
    ]);

    if cubic.is_zero() {
        // Q(u) = L(u)·u with L(u) = A₁u₁ + S₁u₂; idempotents fill the line L = 1.
        let one = Rational::one();
        let candidates =
            (0..4i64).map(|k| [one.clone(), Rational::from(k)]).chain(std::iter::once([Rational::zero(), one.clone()]));
        for u in candidates {
            if let Some(x) = idempotent_on(&q, u) {
                if admissible(&x) {
                    return Ok(SpecialElement::Rational(x));
                }
            }
        }
        return Ok(SpecialElement::NotFound);
    }

    let mut directions: Vec<[Rational; 2]> = Vec::new();
    if q.d[0].is_zero() {
        directions.push([Rational::zero(), Rational::one()]);
    }
    let analysis = roots::analyze(&cubic);
    directions.extend(analysis.rational.iter().map(|l| [Rational::one(), l.clone()]));
    for u in directions {
        if let Some(x) = idempotent_on(&q, u) {
            if admissible(&x) {
                return Ok(SpecialElement::Rational(x));
            }
        }
    }

    if analysis.irrational_real > 0 {
        let r = &analysis.irrational_factor;
        // r is irreducible over ℚ, so either every root of r is a
        // square-zero direction or none is.
        let square_zero = q.affine(0).div_rem(r).1.is_zero() && q.affine(1).div_rem(r).1.is_zero();
        if !square_zero {
            return Ok(SpecialElement::ExistsIrrational { slope_polynomial: r.clone() });
        }
    }
    Ok(SpecialElement::NotFound)
}

/// A nonzero `x` with `x∘x = 0`.
pub fn square_zero2(alg: &Algebra<Rational>) -> Result<SpecialElement> {
    require_dim2(alg)?;
    let q = Quadric::of(alg);
    if q.d.iter().all(Scalar::is_zero) {
        return Ok(SpecialElement::Rational(Element::basis(2, 1)));
    }
    match roots::common_roots(&[q.affine(0), q.affine(1)]) {
        None => Ok(SpecialElement::Rational(Element::basis(2, 0))),
        Some(RootAnalysis { rational, irrational_factor, irrational_real }) => {
            if let Some(l) = rational.first() {
                Ok(SpecialElement::Rational(Element::new(vec![Rational::one(), l.clone()])))
            } else if irrational_real > 0 {
                Ok(SpecialElement::ExistsIrrational { slope_polynomial: irrational_factor })
            } else {
                Ok(SpecialElement::NotFound)
            }
        }
    }
}

/// Lines `span{e₁ + λe₂}` for the real roots `λ` of an irreducible
/// polynomial of degree at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrationalLine {
    pub slope_polynomial: Poly<Rational>,
    pub real_roots: usize,
}

/// Two-sided ideals of dimension one.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealLines {
    /// Every line is an ideal.
    EveryLine,
    Lines {
        rational: Vec<Subspace<Rational>>,
        irrational: Vec<IrrationalLine>,
    },
}

impl IdealLines {
    /// Total number of ideal lines, `None` if infinite.
    pub fn count(&self) -> Option<usize> {
        match self {
            IdealLines::EveryLine => None,
            IdealLines::Lines { rational, irrational } => {
                Some(rational.len() + irrational.iter().map(|l| l.real_roots).sum::<usize>())
            }
        }
    }

    pub fn contains_rational(&self, u: &Element<Rational>) -> bool {
        match self {
            IdealLines::EveryLine => true,
            IdealLines::Lines { rational, .. } => rational.iter().any(|l| l.contains(u)),
        }
    }
}

/// All lines `L` with `A∘L ⊆ L` and `L∘A ⊆ L`.
pub fn one_dim_ideals2(alg: &Algebra<Rational>) -> Result<IdealLines> {
    require_dim2(alg)?;
    let lam = Poly::<Rational>::var();
    let c = |i: usize, j: usize, k: usize| Poly::constant(alg.constant(i, j, k).clone());

    // For u = e₁ + λe₂ and each product w ∈ {u∘e_j, e_j∘u}: det[u, w] = w₂ − λw₁.
    let mut conditions = Vec::with_capacity(4);
    for j in 0..2 {
        for left in [true, false] {
            let w = |k: usize| {
                if left {
                    c(0, j, k) + lam.clone() * c(1, j, k)
                } else {
                    c(j, 0, k) + lam.clone() * c(j, 1, k)
                }
            };
            conditions.push(w(1) - lam.clone() * w(0));
        }
    }

    let Some(analysis) = roots::common_roots(&conditions) else {
        return Ok(IdealLines::EveryLine);
    };

    let mut rational: Vec<Subspace<Rational>> =
        analysis.rational.iter().map(|l| Subspace::new(vec![Element::new(vec![Rational::one(), l.clone()])])).collect();
    // u = e₂: every product must have zero e₁-coordinate.
    let e2_closed = (0..2).all(|j| alg.constant(1, j, 0).is_zero() && alg.constant(j, 1, 0).is_zero());
    if e2_closed {
        rational.push(Subspace::new(vec![Element::basis(2, 1)]));
    }
    let irrational = if analysis.irrational_real > 0 {
        vec![IrrationalLine { slope_polynomial: analysis.irrational_factor, real_roots: analysis.irrational_real }]
    } else {
        vec![]
    };
    Ok(IdealLines::Lines { rational, irrational })
}

/// A one-dimensional law `e₁∘e₁ = c·e₁`.
#[derive(Clone, Debug, PartialEq)]
pub enum LineLaw {
    Zero,
    /// `c ≠ 0`; `e₁/c` is idempotent.
    Idempotent {
        generator: Rational,
    },
}

pub fn line_law(alg: &Algebra<Rational>) -> Result<LineLaw> {
    if alg.dim() != 1 {
        return Err(Error::UnsupportedDimension { required: 1, found: alg.dim() });
    }
    let c = alg.constant(0, 0, 0);
    Ok(if c.is_zero() { LineLaw::Zero } else { LineLaw::Idempotent { generator: Rational::one() / c.clone() } })
}
