//! Bilinear laws given by structure constants, and their basic invariants.
//!
//! An [`Algebra`] of dimension `n` stores the tensor `a_{ij}^k` with
//! `e_i ∘ e_j = Σ_k a_{ij}^k e_k`. Nothing here assumes associativity;
//! [`is_associative`] decides it.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Field, Rational, Scalar};

mod dim2;

pub use dim2::{
    line_law, nontrivial_idempotent2, one_dim_ideals2, square_zero2, IdealLines, IrrationalLine, LineLaw,
    SpecialElement,
};

#[derive(Clone, PartialEq)]
pub struct Algebra<S> {
    dim: usize,
    constants: Vec<S>,
}

impl<S: Scalar> Algebra<S> {
    /// `constants[(i·n + j)·n + k] = a_{ij}^k`.
    pub fn new(dim: usize, constants: Vec<S>) -> Result<Self> {
        let expected = dim * dim * dim;
        if constants.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: constants.len() });
        }
        Ok(Algebra { dim, constants })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> S) -> Self {
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    constants.push(f(i, j, k));
                }
            }
        }
        Algebra { dim, constants }
    }

    pub fn zero(dim: usize) -> Self {
        Algebra { dim, constants: vec![S::zero(); dim * dim * dim] }
    }

    /// Two-dimensional law from the 4×2 coefficient matrix whose rows are
    /// `e₁e₁, e₁e₂, e₂e₁, e₂e₂` in coordinates.
    pub fn from_matrix2(rows: [[S; 2]; 4]) -> Self {
        let constants = rows.into_iter().flatten().collect();
        Algebra { dim: 2, constants }
    }

    /// Inverse of [`Algebra::from_matrix2`].
    pub fn to_matrix2(&self) -> Option<[[S; 2]; 4]> {
        (self.dim == 2).then(|| std::array::from_fn(|r| std::array::from_fn(|k| self.constants[2 * r + k].clone())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[S] {
        &self.constants
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i ∘ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    /// `x ∘ y` on raw coordinate slices (lengths must equal `dim`).
    pub fn mul_coords(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let a = self.constant(i, j, k);
                    if !a.is_zero() {
                        *o = o.clone() + c.clone() * a.clone();
                    }
                }
            }
        }
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Algebra<T> {
        Algebra { dim: self.dim, constants: self.constants.iter().map(f).collect() }
    }

    pub fn plus(&self, other: &Algebra<S>) -> Result<Algebra<S>> {
        check_dim(self.dim, other.dim)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn minus(&self, other: &Algebra<S>) -> Result<Algebra<S>> {
        check_dim(self.dim, other.dim)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    pub fn scaled(&self, c: &S) -> Algebra<S> {
        self.map(|a| a.clone() * c.clone())
    }

    fn zip(&self, other: &Algebra<S>, f: impl Fn(&S, &S) -> S) -> Algebra<S> {
        Algebra {
            dim: self.dim,
            constants: self.constants.iter().zip(&other.constants).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constants.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            self.basis_product(i, i).iter().all(Scalar::is_zero)
                && (0..n).all(|j| {
                    self.basis_product(i, j)
                        .iter()
                        .zip(self.basis_product(j, i))
                        .all(|(a, b)| (a.clone() + b.clone()).is_zero())
                })
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.is_symmetric()
    }

    /// Direct sum `self ⊕ other` (block-diagonal constants).
    pub fn direct_sum(&self, other: &Algebra<S>) -> Algebra<S> {
        let (n, m) = (self.dim, other.dim);
        Algebra::from_fn(n + m, |i, j, k| match (i < n, j < n, k < n) {
            (true, true, true) => self.constant(i, j, k).clone(),
            (false, false, false) => other.constant(i - n, j - n, k - n).clone(),
            _ => S::zero(),
        })
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl<S: Scalar> fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim={}; ", self.dim)?;
        let mut first = true;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if p.iter().all(Scalar::is_zero) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "e{}e{}=(", i + 1, j + 1)?;
                for (k, c) in p.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")?;
            }
        }
        write!(f, ")")
    }
}

/// A vector in coordinates of the working basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Element { coords }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![S::zero(); dim];
        coords[i] = S::one();
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element { coords: vec![S::zero(); dim] }
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn plus(&self, other: &Element<S>) -> Element<S> {
        Element::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn minus(&self, other: &Element<S>) -> Element<S> {
        Element::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scaled(&self, c: &S) -> Element<S> {
        Element::new(self.coords.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

impl<S> std::ops::Index<usize> for Element<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

/// Endomorphism of the underlying space. Column `j` of the matrix holds
/// the coordinates of `f(e_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearMap<S> {
    matrix: Matrix<S>,
    invertible: bool,
}

impl<S: Field> LinearMap<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "linear map must be square");
        let invertible = !matrix.determinant().is_zero();
        LinearMap { matrix, invertible }
    }

    /// Map sending `e_j` to `images[j]`.
    pub fn from_images(images: &[Vec<S>]) -> Self {
        Self::new(Matrix::from_columns(images))
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n), invertible: true }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.apply(v)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap<S>) -> LinearMap<S> {
        LinearMap::new(self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self) -> Option<LinearMap<S>> {
        self.matrix.inverse().map(|m| LinearMap { matrix: m, invertible: true })
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> LinearMap<T> {
        LinearMap::new(self.matrix.map(f))
    }
}

/// Linear subspace given by an independent spanning list.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<S> {
    basis: Vec<Element<S>>,
}

impl<S: Field> Subspace<S> {
    /// Panics if the vectors are dependent.
    pub fn new(basis: Vec<Element<S>>) -> Self {
        let s = Subspace { basis };
        assert_eq!(s.rank_of(&s.basis), s.basis.len(), "dependent subspace basis");
        s
    }

    /// Subspace spanned by arbitrary vectors (dependent ones dropped).
    pub fn span(vectors: &[Element<S>]) -> Self {
        let mut basis: Vec<Element<S>> = Vec::new();
        for v in vectors {
            let mut trial = basis.clone();
            trial.push(v.clone());
            if Subspace::<S>::rank_static(&trial) == trial.len() {
                basis = trial;
            }
        }
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &Element<S>) -> bool {
        let mut trial = self.basis.clone();
        trial.push(v.clone());
        Self::rank_static(&trial) == self.basis.len()
    }

    fn rank_of(&self, vs: &[Element<S>]) -> usize {
        Self::rank_static(vs)
    }

    fn rank_static(vs: &[Element<S>]) -> usize {
        if vs.is_empty() {
            return 0;
        }
        Matrix::from_rows(vs.iter().map(|v| v.coords.clone()).collect()).rank()
    }
}

/// Tensor `T(e_i, e_j, e_k)_l` of a trilinear map.
#[derive(Clone, PartialEq, Debug)]
pub struct TrilinearMap<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> TrilinearMap<S> {
    pub fn zero(dim: usize) -> Self {
        TrilinearMap { dim, data: vec![S::zero(); dim.pow(4)] }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Vec<S>) -> Self {
        let mut data = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    debug_assert_eq!(v.len(), dim);
                    data.extend(v);
                }
            }
        }
        TrilinearMap { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        let n = self.dim;
        &self.data[((i * n + j) * n + k) * n + l]
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries in lexicographic `(i, j, k, l)` order.
    pub fn nonzero_entries(&self) -> Vec<([usize; 4], &S)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| ([idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n], v))
            .collect()
    }

    pub fn plus(&self, other: &TrilinearMap<S>) -> TrilinearMap<S> {
        assert_eq!(self.dim, other.dim);
        TrilinearMap {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scaled(&self, c: &S) -> TrilinearMap<S> {
        TrilinearMap { dim: self.dim, data: self.data.iter().map(|a| a.clone() * c.clone()).collect() }
    }
}

/// `x ∘ y`.
pub fn multiply<S: Scalar>(alg: &Algebra<S>, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
    check_dim(alg.dim, x.dim())?;
    check_dim(alg.dim, y.dim())?;
    Ok(Element::new(alg.mul_coords(&x.coords, &y.coords)))
}

/// Entries `((e_i e_j) e_k − e_i (e_j e_k))_l`, i.e. the residuals
/// `Σ_h a_{ij}^h a_{hk}^l − a_{ih}^l a_{jk}^h`.
pub fn associativity_residuals<S: Scalar>(alg: &Algebra<S>) -> TrilinearMap<S> {
    let n = alg.dim;
    TrilinearMap::from_fn(n, |i, j, k| {
        let left = alg.mul_coords(alg.basis_product(i, j), &unit::<S>(n, k));
        let right = alg.mul_coords(&unit::<S>(n, i), alg.basis_product(j, k));
        left.into_iter().zip(right).map(|(a, b)| a - b).collect()
    })
}

pub fn is_associative<S: Scalar>(alg: &Algebra<S>) -> bool {
    first_residual(alg).is_none()
}

/// Index of the first nonzero associativity residual.
pub fn first_residual<S: Scalar>(alg: &Algebra<S>) -> Option<[usize; 4]> {
    associativity_residuals(alg).nonzero_entries().first().map(|(idx, _)| *idx)
}

pub(crate) fn require_associative<S: Scalar>(alg: &Algebra<S>) -> Result<()> {
    match first_residual(alg) {
        None => Ok(()),
        Some(idx) => Err(Error::NotAssociative(idx)),
    }
}

pub(crate) fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// Symmetrization `(x∘y + y∘x)/2`.
pub fn jordan_part<S: Scalar>(alg: &Algebra<S>) -> Algebra<S> {
    let half = S::from_rational(&Rational::new(1, 2));
    Algebra::from_fn(alg.dim, |i, j, k| (alg.constant(i, j, k).clone() + alg.constant(j, i, k).clone()) * half.clone())
}

/// Antisymmetrization `(x∘y − y∘x)/2`.
pub fn lie_part<S: Scalar>(alg: &Algebra<S>) -> Algebra<S> {
    let half = S::from_rational(&Rational::new(1, 2));
    Algebra::from_fn(alg.dim, |i, j, k| (alg.constant(i, j, k).clone() - alg.constant(j, i, k).clone()) * half.clone())
}

/// Decides the Jordan identity `(x²)(xy) = x(x²y)` for a symmetric law.
///
/// With `x = Σ x_i e_i`, the defect is a polynomial of degree 3 in the
/// `x_i` and 1 in the `y_l`; it vanishes identically iff the coefficient of
/// every monomial `x_a x_b x_c y_l` does. Each coefficient is the sum of
/// the basis evaluations over the distinct orderings of `(a, b, c)`.
pub fn is_jordan<S: Scalar>(alg: &Algebra<S>) -> Result<bool> {
    if !alg.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = alg.dim;
    let term = |a: usize, b: usize, c: usize, l: usize| -> Vec<S> {
        let ab = alg.basis_product(a, b);
        let lhs = alg.mul_coords(ab, alg.basis_product(c, l));
        let inner = alg.mul_coords(ab, &unit::<S>(n, l));
        let rhs = alg.mul_coords(&unit::<S>(n, c), &inner);
        lhs.into_iter().zip(rhs).map(|(p, q)| p - q).collect()
    };
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let orders = distinct_orderings([a, b, c]);
                for l in 0..n {
                    let mut acc = vec![S::zero(); n];
                    for &[p, q, r] in &orders {
                        for (o, v) in acc.iter_mut().zip(term(p, q, r, l)) {
                            *o = o.clone() + v;
                        }
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn distinct_orderings(idx: [usize; 3]) -> Vec<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out: Vec<[usize; 3]> = PERMS.iter().map(|p| [idx[p[0]], idx[p[1]], idx[p[2]]]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Decides the Jacobi identity for an alternating law (it is trilinear, so
/// basis triples suffice).
pub fn is_lie<S: Scalar>(alg: &Algebra<S>) -> Result<bool> {
    if !alg.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let n = alg.dim;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t1 = alg.mul_coords(alg.basis_product(x, y), &unit::<S>(n, z));
                let t2 = alg.mul_coords(alg.basis_product(y, z), &unit::<S>(n, x));
                let t3 = alg.mul_coords(alg.basis_product(z, x), &unit::<S>(n, y));
                let nonzero = t1.into_iter().zip(t2).zip(t3).any(|((a, b), c)| !(a + b + c).is_zero());
                if nonzero {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The law `g⁻¹ ∘ β(g·, g·)`: structure constants in the basis `x_i = g(e_i)`.
pub fn change_basis<S: Field>(alg: &Algebra<S>, g: &LinearMap<S>) -> Result<Algebra<S>> {
    check_dim(alg.dim, g.dim())?;
    let inv = g.inverse().ok_or(Error::SingularMap)?;
    let n = alg.dim;
    let images: Vec<Vec<S>> = (0..n).map(|j| g.matrix().column(j)).collect();
    let mut constants = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            constants.extend(inv.apply(&alg.mul_coords(&images[i], &images[j])));
        }
    }
    Algebra::new(n, constants)
}

/// `{u : u∘v = 0 for all v}`.
pub fn left_annihilator<S: Field>(alg: &Algebra<S>) -> Subspace<S> {
    annihilator(alg, true)
}

/// `{u : v∘u = 0 for all v}`.
pub fn right_annihilator<S: Field>(alg: &Algebra<S>) -> Subspace<S> {
    annihilator(alg, false)
}

fn annihilator<S: Field>(alg: &Algebra<S>, left: bool) -> Subspace<S> {
    let n = alg.dim;
    if n == 0 {
        return Subspace { basis: vec![] };
    }
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push(
                (0..n).map(|i| if left { alg.constant(i, j, k) } else { alg.constant(j, i, k) }.clone()).collect(),
            );
        }
    }
    let kernel = Matrix::from_rows(rows).kernel();
    Subspace { basis: kernel.into_iter().map(Element::new).collect() }
}

/// The two-sided identity, if one exists.
pub fn identity_element<S: Field>(alg: &Algebra<S>) -> Option<Element<S>> {
    let n = alg.dim;
    if n == 0 {
        return None;
    }
    let mut rows = Vec::with_capacity(2 * n * n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for k in 0..n {
            let target = if j == k { S::one() } else { S::zero() };
            rows.push((0..n).map(|i| alg.constant(i, j, k).clone()).collect());
            rhs.push(target.clone());
            rows.push((0..n).map(|i| alg.constant(j, i, k).clone()).collect());
            rhs.push(target);
        }
    }
    Matrix::from_rows(rows).solve(&rhs).map(Element::new)
}

/// `dim span{e_i ∘ e_j}`.
pub fn derived_dim<S: Field>(alg: &Algebra<S>) -> usize {
    let n = alg.dim;
    if n == 0 {
        return 0;
    }
    let rows: Vec<Vec<S>> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| alg.basis_product(i, j).to_vec()).collect();
    Matrix::from_rows(rows).rank()
}

/// Whether the chain `A ⊇ A² ⊇ A³ ⊇ …` with `A^{k+1} = A^k∘A + A∘A^k`
/// reaches zero.
pub fn is_nilpotent<S: Field>(alg: &Algebra<S>) -> bool {
    let n = alg.dim;
    let mut current: Vec<Vec<S>> = (0..n).map(|i| unit::<S>(n, i)).collect();
    loop {
        if current.is_empty() {
            return true;
        }
        let mut products = Vec::new();
        for v in &current {
            for i in 0..n {
                let e = unit::<S>(n, i);
                products.push(alg.mul_coords(v, &e));
                products.push(alg.mul_coords(&e, v));
            }
        }
        let next: Vec<Vec<S>> = Subspace::span(&products.into_iter().map(Element::new).collect::<Vec<_>>())
            .basis
            .into_iter()
            .map(Element::into_coords)
            .collect();
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests;
