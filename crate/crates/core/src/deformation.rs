//! Hochschild coboundaries and cocycles, orbit tangent spaces, second
//! cohomology and formal perturbations.

use crate::algebra::{require_associative, unit, Algebra, LinearMap, TrilinearMap};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{q, EpsPolynomial, Field, Monomial, Rational, Scalar};

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `δ_β f (x, y) = β(f x, y) + β(x, f y) − f(β(x, y))`.
pub fn coboundary<S: Field>(beta: &Algebra<S>, f: &LinearMap<S>) -> Result<Algebra<S>> {
    let n = beta.dim();
    check_dims(n, f.dim())?;
    let images: Vec<Vec<S>> = (0..n).map(|i| f.apply(&unit(n, i))).collect();
    let mut constants = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let left = beta.mul_coords(&images[i], &unit(n, j));
            let right = beta.mul_coords(&unit(n, i), &images[j]);
            let pushed = f.apply(beta.basis_product(i, j));
            for k in 0..n {
                constants.push(left[k].clone() + right[k].clone() - pushed[k].clone());
            }
        }
    }
    Algebra::new(n, constants)
}

/// Span of `{δ_β f}` as the rows `δ_β(E_rs)` for the elementary maps
/// `E_rs : e_s ↦ e_r`.
#[derive(Clone, Debug)]
pub struct TangentSpace<S: Scalar> {
    pub base: Algebra<S>,
    pub spanning: Vec<Vec<S>>,
    pub rank: usize,
}

fn elementary<S: Field>(n: usize, r: usize, s: usize) -> LinearMap<S> {
    let mut m = Matrix::zeros(n, n);
    m[(r, s)] = S::one();
    LinearMap::new(m)
}

pub fn tangent_space<S: Field>(beta: &Algebra<S>) -> Result<TangentSpace<S>> {
    require_associative(beta)?;
    let n = beta.dim();
    let mut spanning = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            spanning.push(coboundary(beta, &elementary(n, r, s))?.constants().to_vec());
        }
    }
    let rank = Matrix::from_rows(spanning.clone()).rank();
    Ok(TangentSpace { base: beta.clone(), spanning, rank })
}

pub fn orbit_dim<S: Field>(beta: &Algebra<S>) -> Result<usize> {
    Ok(tangent_space(beta)?.rank)
}

pub fn stabilizer_dim<S: Field>(beta: &Algebra<S>) -> Result<usize> {
    Ok(beta.dim() * beta.dim() - orbit_dim(beta)?)
}

/// `b₁∘b₂(x,y,z) = b₁(b₂(x,y),z) − b₁(x,b₂(y,z)) + b₂(b₁(x,y),z) − b₂(x,b₁(y,z))`.
pub fn circle_product<S: Scalar>(b1: &Algebra<S>, b2: &Algebra<S>) -> Result<TrilinearMap<S>> {
    let n = b1.dim();
    check_dims(n, b2.dim())?;
    let half = |p: &Algebra<S>, r: &Algebra<S>, i: usize, j: usize, k: usize| {
        let a = p.mul_coords(r.basis_product(i, j), &unit(n, k));
        let b = p.mul_coords(&unit(n, i), r.basis_product(j, k));
        a.into_iter().zip(b).map(|(x, y)| x - y).collect::<Vec<S>>()
    };
    Ok(TrilinearMap::from_fn(n, |i, j, k| {
        half(b1, b2, i, j, k).into_iter().zip(half(b2, b1, i, j, k)).map(|(x, y)| x + y).collect()
    }))
}

/// `δ²_β φ = ½(β∘φ + φ∘β)`, the linearization of `β ↦ β∘β` at `β`.
pub fn cocycle_operator<S: Scalar>(beta: &Algebra<S>, phi: &Algebra<S>) -> Result<TrilinearMap<S>> {
    require_associative(beta)?;
    let sum = circle_product(beta, phi)?.plus(&circle_product(phi, beta)?);
    Ok(sum.scaled(&S::from_rational(&q(1, 2))))
}

/// Dimensions of 2-cocycles, 2-coboundaries and their quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Cohomology2 {
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub h2_dim: usize,
}

pub fn cohomology2<S: Field>(beta: &Algebra<S>) -> Result<Cohomology2> {
    require_associative(beta)?;
    let n = beta.dim();
    let n3 = n * n * n;
    // Column c is δ² applied to the bilinear map with the single constant c.
    let columns = (0..n3)
        .map(|c| {
            let phi = Algebra::new(n, unit(n3, c))?;
            Ok(cocycle_operator(beta, &phi)?.data().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    let z2_dim = n3 - Matrix::from_columns(&columns).rank();
    let b2_dim = orbit_dim(beta)?;
    Ok(Cohomology2 { z2_dim, b2_dim, h2_dim: z2_dim - b2_dim })
}

/// The law `β₀ + ε₁φ₁ + ε₁ε₂φ₂ + … + ε₁⋯ε_pφ_p` with independent directions.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation {
    base: Algebra<Rational>,
    directions: Vec<Algebra<Rational>>,
}

impl Perturbation {
    pub fn new(base: Algebra<Rational>, directions: Vec<Algebra<Rational>>) -> Result<Self> {
        for d in &directions {
            check_dims(base.dim(), d.dim())?;
        }
        if !directions.is_empty() {
            let rows: Vec<Vec<Rational>> = directions.iter().map(|d| d.constants().to_vec()).collect();
            if Matrix::from_rows(rows).rank() < directions.len() {
                return Err(Error::DependentDirections);
            }
        }
        Ok(Perturbation { base, directions })
    }

    pub fn base(&self) -> &Algebra<Rational> {
        &self.base
    }

    pub fn directions(&self) -> &[Algebra<Rational>] {
        &self.directions
    }

    /// The infinitesimal part `ξ`.
    pub fn xi(&self) -> Algebra<EpsPolynomial> {
        let n = self.base.dim();
        let mut xi = Algebra::zero(n);
        for (k, phi) in self.directions.iter().enumerate() {
            let coeff = EpsPolynomial::term(Monomial::new(vec![1; k + 1]), Rational::one());
            let term = phi.map(|c| EpsPolynomial::constant(c.clone())).scaled(&coeff);
            xi = xi.plus(&term).expect("same dimension");
        }
        xi
    }

    /// `β₀ + ξ`.
    pub fn law(&self) -> Algebra<EpsPolynomial> {
        self.lifted_base().plus(&self.xi()).expect("same dimension")
    }

    fn lifted_base(&self) -> Algebra<EpsPolynomial> {
        self.base.map(|c| EpsPolynomial::constant(c.clone()))
    }
}

/// `2δ²_{β₀}ξ + ξ∘ξ`, which equals `(β₀+ξ)∘(β₀+ξ)` when `β₀` is associative.
pub fn perturbation_residual(p: &Perturbation) -> Result<TrilinearMap<EpsPolynomial>> {
    let base = p.lifted_base();
    let xi = p.xi();
    let linear = cocycle_operator(&base, &xi)?.scaled(&EpsPolynomial::from_i64(2));
    Ok(linear.plus(&circle_product(&xi, &xi)?))
}
