//! Isomorphism classification of two-dimensional associative algebras and
//! of two-dimensional Jordan algebras, with constructive witnesses.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    change_basis, derived_dim, identity_element, is_jordan, is_nilpotent, left_annihilator, lie_part,
    nontrivial_idempotent2, require_associative, right_annihilator, square_zero2, Algebra, Element, LinearMap,
    Subspace,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::roots::{self, resultant};
use crate::scalars::{q, EpsPolynomial, Field, Poly, QuadraticRational, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassLabel {
    Abelian,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    Beta5,
    Beta6,
    Beta7,
    #[serde(rename = "jabelian")]
    JAbelian,
    Phi1,
    Phi2,
    Phi3,
    Phi4,
    Phi5,
    Phi6,
}

impl ClassLabel {
    pub const ASSOCIATIVE: [ClassLabel; 8] = [
        ClassLabel::Abelian,
        ClassLabel::Beta1,
        ClassLabel::Beta2,
        ClassLabel::Beta3,
        ClassLabel::Beta4,
        ClassLabel::Beta5,
        ClassLabel::Beta6,
        ClassLabel::Beta7,
    ];

    pub const JORDAN: [ClassLabel; 7] = [
        ClassLabel::JAbelian,
        ClassLabel::Phi1,
        ClassLabel::Phi2,
        ClassLabel::Phi3,
        ClassLabel::Phi4,
        ClassLabel::Phi5,
        ClassLabel::Phi6,
    ];

    pub fn is_jordan_label(self) -> bool {
        Self::JORDAN.contains(&self)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Abelian => "abelian",
            ClassLabel::Beta1 => "beta1",
            ClassLabel::Beta2 => "beta2",
            ClassLabel::Beta3 => "beta3",
            ClassLabel::Beta4 => "beta4",
            ClassLabel::Beta5 => "beta5",
            ClassLabel::Beta6 => "beta6",
            ClassLabel::Beta7 => "beta7",
            ClassLabel::JAbelian => "jabelian",
            ClassLabel::Phi1 => "phi1",
            ClassLabel::Phi2 => "phi2",
            ClassLabel::Phi3 => "phi3",
            ClassLabel::Phi4 => "phi4",
            ClassLabel::Phi5 => "phi5",
            ClassLabel::Phi6 => "phi6",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ASSOCIATIVE
            .iter()
            .chain(Self::JORDAN.iter())
            .copied()
            .find(|l| l.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown class label `{s}`")))
    }
}

/// Basis-independent invariants of a two-dimensional associative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub commutative: bool,
    pub left_ann_dim: usize,
    pub right_ann_dim: usize,
    pub derived_dim: usize,
    pub unital: bool,
    pub nilpotent: bool,
    pub has_nontrivial_idempotent: bool,
    pub has_square_zero: bool,
}

/// Coefficients of the alternating map `μ(e₁,e₂) = a·e₁ + b·e₂`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LiePartCoefficients {
    pub a: Rational,
    pub b: Rational,
}

impl LiePartCoefficients {
    pub fn new(a: Rational, b: Rational) -> Self {
        LiePartCoefficients { a, b }
    }

    pub fn to_algebra(&self) -> Algebra<Rational> {
        lie_algebra(&self.a, &self.b)
    }
}

fn lie_algebra<S: Scalar>(a: &S, b: &S) -> Algebra<S> {
    let z = S::zero;
    Algebra::from_matrix2([[z(), z()], [a.clone(), b.clone()], [-a.clone(), -b.clone()], [z(), z()]])
}

fn require_dim2<S: Scalar>(alg: &Algebra<S>) -> Result<()> {
    if alg.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: alg.dim() });
    }
    Ok(())
}

pub fn fingerprint(alg: &Algebra<Rational>) -> Result<Fingerprint> {
    require_dim2(alg)?;
    require_associative(alg)?;
    Ok(Fingerprint {
        commutative: alg.is_commutative(),
        left_ann_dim: left_annihilator(alg).dim(),
        right_ann_dim: right_annihilator(alg).dim(),
        derived_dim: derived_dim(alg),
        unital: identity_element(alg).is_some(),
        nilpotent: is_nilpotent(alg),
        has_nontrivial_idempotent: nontrivial_idempotent2(alg)?.exists(),
        has_square_zero: square_zero2(alg)?.exists(),
    })
}

/// Fingerprints of the canonical laws, used to reject inconsistent input.
fn expected_fingerprint(label: ClassLabel) -> Fingerprint {
    let fp = |commutative, left, right, derived, unital, nilpotent, idem, sq| Fingerprint {
        commutative,
        left_ann_dim: left,
        right_ann_dim: right,
        derived_dim: derived,
        unital,
        nilpotent,
        has_nontrivial_idempotent: idem,
        has_square_zero: sq,
    };
    match label {
        ClassLabel::Abelian => fp(true, 2, 2, 0, false, true, false, true),
        ClassLabel::Beta1 => fp(true, 0, 0, 2, true, false, false, false),
        ClassLabel::Beta2 => fp(true, 0, 0, 2, true, false, true, false),
        ClassLabel::Beta3 => fp(true, 0, 0, 2, true, false, false, true),
        ClassLabel::Beta4 => fp(true, 1, 1, 1, false, false, true, true),
        ClassLabel::Beta5 => fp(true, 1, 1, 1, false, true, false, true),
        ClassLabel::Beta6 => fp(false, 1, 0, 2, false, false, true, true),
        ClassLabel::Beta7 => fp(false, 0, 1, 2, false, false, true, true),
        _ => unreachable!("no associative fingerprint for {label}"),
    }
}

fn decide(fp: &Fingerprint) -> Option<ClassLabel> {
    use ClassLabel::*;
    Some(match fp {
        Fingerprint { derived_dim: 0, .. } => Abelian,
        Fingerprint { commutative: false, left_ann_dim: 1, .. } => Beta6,
        Fingerprint { commutative: false, right_ann_dim: 1, .. } => Beta7,
        Fingerprint { commutative: false, .. } => return None,
        Fingerprint { unital: false, nilpotent: true, .. } => Beta5,
        Fingerprint { unital: false, .. } => Beta4,
        Fingerprint { has_square_zero: true, .. } => Beta3,
        Fingerprint { has_nontrivial_idempotent: true, .. } => Beta2,
        _ => Beta1,
    })
}

pub fn classify(alg: &Algebra<Rational>) -> Result<ClassLabel> {
    let fp = fingerprint(alg)?;
    match decide(&fp) {
        Some(label) if expected_fingerprint(label) == fp => Ok(label),
        _ => Err(Error::UnclassifiableFingerprint(format!("{fp:?}"))),
    }
}

pub fn canonical_algebra(label: ClassLabel) -> Algebra<Rational> {
    use ClassLabel::*;
    let m = |rows: [[Rational; 2]; 4]| Algebra::from_matrix2(rows);
    let (o, z, h) = (q(1, 1), q(0, 1), q(1, 2));
    match label {
        Abelian | JAbelian => Algebra::zero(2),
        Beta1 | Phi1 => m([[o.clone(), z.clone()], [z.clone(), o.clone()], [z.clone(), o.clone()], [-o, z]]),
        Beta2 | Phi2 => m([[o.clone(), z.clone()], [z.clone(), o.clone()], [z.clone(), o.clone()], [o, z]]),
        Beta3 | Phi3 => m([[o.clone(), z.clone()], [z.clone(), o.clone()], [z.clone(), o], [z.clone(), z]]),
        Beta4 | Phi4 => m([[z.clone(), z.clone()], [z.clone(), z.clone()], [z.clone(), z.clone()], [z, o]]),
        Beta5 | Phi5 => m([[z.clone(), o], [z.clone(), z.clone()], [z.clone(), z.clone()], [z.clone(), z]]),
        Beta6 => m([[o.clone(), z.clone()], [z.clone(), o], [z.clone(), z.clone()], [z.clone(), z]]),
        Beta7 => m([[o.clone(), z.clone()], [z.clone(), z.clone()], [z.clone(), o], [z.clone(), z]]),
        Phi6 => m([[o, z.clone()], [z.clone(), h.clone()], [z.clone(), h], [z.clone(), z]]),
    }
}

/// A change of basis taking an algebra to its canonical form. Columns are
/// the images of the new basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Rational(LinearMap<Rational>),
    /// Entries in `ℚ(√radicand)`.
    Quadratic {
        radicand: BigInt,
        map: LinearMap<QuadraticRational>,
    },
}

impl Witness {
    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            Witness::Rational(_) => None,
            Witness::Quadratic { radicand, .. } => Some(radicand),
        }
    }

    /// Whether transporting `alg` along the witness yields `canonical_algebra(label)` exactly.
    pub fn transports(&self, alg: &Algebra<Rational>, label: ClassLabel) -> bool {
        let target = canonical_algebra(label);
        match self {
            Witness::Rational(g) => change_basis(alg, g).is_ok_and(|b| b == target),
            Witness::Quadratic { map, .. } => {
                let lift = |r: &Rational| QuadraticRational::rational(r.clone());
                change_basis(&alg.map(lift), map).is_ok_and(|b| b == target.map(lift))
            }
        }
    }
}

/// The identity `1`, a second vector `v`, and `v∘v = p·1 + q·v`.
struct UnitalFrame {
    one: Vec<Rational>,
    w: Vec<Rational>,
    /// `w∘w = disc/4 · 1` with `w = v − q/2·1`.
    disc: Rational,
}

fn unital_frame(alg: &Algebra<Rational>, one: &Element<Rational>) -> UnitalFrame {
    let one = one.coords().to_vec();
    let v = if one[1].is_zero() { vec![q(0, 1), q(1, 1)] } else { vec![q(1, 1), q(0, 1)] };
    let vv = alg.mul_coords(&v, &v);
    let pq = Matrix::from_columns(&[one.clone(), v.clone()]).solve(&vv).expect("1 and v span the algebra");
    let (p, qq) = (&pq[0], &pq[1]);
    let half_q = qq.clone() * q(1, 2);
    let w = (0..2).map(|i| v[i].clone() - half_q.clone() * one[i].clone()).collect();
    UnitalFrame { one, w, disc: qq * qq + q(4, 1) * p.clone() }
}

fn rational_witness(cols: [Vec<Rational>; 2]) -> Witness {
    Witness::Rational(LinearMap::from_images(&cols))
}

/// A nonzero vector of a one-dimensional subspace.
fn line_vector(s: &Subspace<Rational>) -> Vec<Rational> {
    s.basis()[0].coords().to_vec()
}

/// A basis vector outside the given subspace.
fn vector_outside(s: &Subspace<Rational>) -> Vec<Rational> {
    (0..2).map(|i| Element::basis(2, i)).find(|e| !s.contains(e)).expect("proper subspace").into_coords()
}

/// `λ` with `x∘x = λx`, given that `x∘x` is parallel to `x`.
fn square_ratio(alg: &Algebra<Rational>, x: &[Rational]) -> Rational {
    let xx = alg.mul_coords(x, x);
    let k = if x[0].is_zero() { 1 } else { 0 };
    xx[k].clone() / x[k].clone()
}

pub fn isomorphism_witness(alg: &Algebra<Rational>) -> Result<(ClassLabel, Witness)> {
    let label = classify(alg)?;
    let witness = match label {
        ClassLabel::Abelian => Witness::Rational(LinearMap::identity(2)),
        ClassLabel::Beta1 | ClassLabel::Beta2 | ClassLabel::Beta3 => {
            let one = identity_element(alg).expect("unital class");
            let frame = unital_frame(alg, &one);
            if label == ClassLabel::Beta3 {
                rational_witness([frame.one, frame.w])
            } else {
                // x₂ = c·w with c² · disc/4 = ∓1.
                let target = if label == ClassLabel::Beta1 { -frame.disc.clone() } else { frame.disc.clone() };
                let root = QuadraticRational::sqrt(&(target * q(1, 4))).expect("sign fixed by class");
                let c = root.inv().expect("nonzero discriminant");
                let lift = |r: &Rational| QuadraticRational::rational(r.clone());
                match c.as_rational() {
                    Some(c) => rational_witness([frame.one, frame.w.iter().map(|x| x.clone() * c.clone()).collect()]),
                    None => Witness::Quadratic {
                        radicand: c.radicand().expect("irrational").clone(),
                        map: LinearMap::from_images(&[
                            frame.one.iter().map(lift).collect(),
                            frame.w.iter().map(|x| lift(x) * c.clone()).collect(),
                        ]),
                    },
                }
            }
        }
        ClassLabel::Beta4 => {
            let x1 = line_vector(&left_annihilator(alg));
            let w = alg.mul_coords(&vector_outside(&left_annihilator(alg)), &vector_outside(&left_annihilator(alg)));
            let lambda = square_ratio(alg, &w);
            rational_witness([x1, w.iter().map(|x| x.clone() / lambda.clone()).collect()])
        }
        ClassLabel::Beta5 => {
            let derived = Subspace::span(&[
                Element::new(alg.basis_product(0, 0).to_vec()),
                Element::new(alg.basis_product(0, 1).to_vec()),
                Element::new(alg.basis_product(1, 0).to_vec()),
                Element::new(alg.basis_product(1, 1).to_vec()),
            ]);
            let x1 = vector_outside(&derived);
            let x2 = alg.mul_coords(&x1, &x1);
            rational_witness([x1, x2])
        }
        ClassLabel::Beta6 | ClassLabel::Beta7 => {
            let ann = if label == ClassLabel::Beta6 { left_annihilator(alg) } else { right_annihilator(alg) };
            let v = vector_outside(&ann);
            let lambda = square_ratio(alg, &v);
            rational_witness([v.iter().map(|x| x.clone() / lambda.clone()).collect(), line_vector(&ann)])
        }
        _ => unreachable!("classify returns associative labels"),
    };
    debug_assert!(witness.transports(alg, label));
    Ok((label, witness))
}

pub fn jordan_classify2(alg: &Algebra<Rational>) -> Result<ClassLabel> {
    require_dim2(alg)?;
    if !alg.is_symmetric() || !is_jordan(alg)? {
        return Err(Error::NotJordan);
    }
    if alg.is_zero() {
        return Ok(ClassLabel::JAbelian);
    }
    if let Some(one) = identity_element(alg) {
        let disc = unital_frame(alg, &one).disc;
        return Ok(match disc.signum() {
            -1 => ClassLabel::Phi1,
            1 => ClassLabel::Phi2,
            _ => ClassLabel::Phi3,
        });
    }
    if is_nilpotent(alg) {
        return Ok(ClassLabel::Phi5);
    }
    let unclassifiable = || Error::UnclassifiableFingerprint("jordan law without rational idempotent".into());
    let idem = nontrivial_idempotent2(alg)?;
    let e = idem.rational().ok_or_else(unclassifiable)?;
    // Spectrum of x ↦ e∘x through its trace and determinant.
    let l = Matrix::from_columns(&[
        alg.mul_coords(e.coords(), &[q(1, 1), q(0, 1)]),
        alg.mul_coords(e.coords(), &[q(0, 1), q(1, 1)]),
    ]);
    let trace = l[(0, 0)].clone() + l[(1, 1)].clone();
    let det = l.determinant();
    if trace == q(1, 1) && det.is_zero() {
        Ok(ClassLabel::Phi4)
    } else if trace == q(3, 2) && det == q(1, 2) {
        Ok(ClassLabel::Phi6)
    } else {
        Err(unclassifiable())
    }
}

/// The alternating part of a two-dimensional law as coefficients.
pub fn lie_coefficients(alg: &Algebra<Rational>) -> Result<LiePartCoefficients> {
    require_dim2(alg)?;
    let mu = lie_part(alg);
    let v = mu.basis_product(0, 1);
    Ok(LiePartCoefficients::new(v[0].clone(), v[1].clone()))
}

/// All `(a, b)` for which `φ_label + μ_{a,b}` is associative.
///
/// The associativity residuals are quadratic polynomials in `(a, b)`; the
/// system is solved by eliminating `b` with resultants and back-substituting
/// each rational root in `a`.
pub fn admissible_lie_parts(label: ClassLabel) -> Result<Vec<LiePartCoefficients>> {
    let phi = canonical_algebra(label).map(|r| EpsPolynomial::constant(r.clone()));
    let mu = lie_algebra(&EpsPolynomial::var(0), &EpsPolynomial::var(1));
    let law = phi.plus(&mu)?;
    let residuals = crate::algebra::associativity_residuals(&law);
    let system: Vec<Poly<Poly<Rational>>> =
        residuals.data().iter().filter(|p| !p.is_zero()).map(as_poly_in_b).collect();
    let mut solutions = solve_bivariate(&system)?;
    solutions.sort();
    solutions.dedup();
    Ok(solutions)
}

/// A polynomial in `(ε₁, ε₂) = (a, b)` as a polynomial in `b` over `ℚ[a]`.
fn as_poly_in_b(p: &EpsPolynomial) -> Poly<Poly<Rational>> {
    let mut coeffs: Vec<Poly<Rational>> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponents();
        let ea = e.first().copied().unwrap_or(0) as usize;
        let eb = e.get(1).copied().unwrap_or(0) as usize;
        if coeffs.len() <= eb {
            coeffs.resize(eb + 1, Poly::zero());
        }
        coeffs[eb] = coeffs[eb].clone() + Poly::monomial(c.clone(), ea);
    }
    Poly::new(coeffs)
}

fn solve_bivariate(system: &[Poly<Poly<Rational>>]) -> Result<Vec<LiePartCoefficients>> {
    if system.is_empty() {
        return Err(Error::InfiniteSolutionSet);
    }
    let (free_of_b, with_b): (Vec<_>, Vec<_>) = system.iter().partition(|p| p.degree().is_some_and(|d| d == 0));
    let mut eliminants: Vec<Poly<Rational>> = free_of_b.iter().map(|p| p.coeff(0)).collect();
    for (i, f) in with_b.iter().enumerate() {
        for g in &with_b[i + 1..] {
            eliminants.push(resultant(f, g));
        }
    }
    let Some(in_a) = roots::common_roots(&eliminants) else {
        return Err(Error::InfiniteSolutionSet);
    };
    if in_a.irrational_real > 0 {
        return Err(Error::IrrationalSolutions);
    }
    let mut out = Vec::new();
    for a in &in_a.rational {
        let in_b: Vec<Poly<Rational>> =
            system.iter().map(|p| Poly::new(p.coeffs().iter().map(|c| c.eval(a)).collect())).collect();
        let Some(bs) = roots::common_roots(&in_b) else {
            return Err(Error::InfiniteSolutionSet);
        };
        if bs.irrational_real > 0 {
            return Err(Error::IrrationalSolutions);
        }
        out.extend(bs.rational.into_iter().map(|b| LiePartCoefficients::new(a.clone(), b)));
    }
    Ok(out)
}

/// `φ_label + μ_{a,b}`.
pub fn jordan_lie_sum(label: ClassLabel, mu: &LiePartCoefficients) -> Algebra<Rational> {
    canonical_algebra(label).plus(&mu.to_algebra()).expect("both two-dimensional")
}
