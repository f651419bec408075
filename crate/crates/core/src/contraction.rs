//! Contractions: transport of a law along a basis family `f_t`, the limit
//! `t → 0`, verification against the classification, bounded template
//! search and the contraction diagram.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{change_basis, is_associative, Algebra, LinearMap};
use crate::classify::{canonical_algebra, classify, ClassLabel};
use crate::deformation::orbit_dim;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{q, rf_limit_at_zero, Poly, Rational, RationalFunction, Scalar};

/// A basis family `f_t`; column `j` is `f_t(e_j)` with entries in `ℚ(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionFamily {
    matrix: Matrix<RationalFunction>,
    determinant: RationalFunction,
}

impl ContractionFamily {
    pub fn new(matrix: Matrix<RationalFunction>) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        let determinant = matrix.determinant();
        if determinant.is_zero() {
            return Err(Error::IdenticallySingular);
        }
        Ok(ContractionFamily { matrix, determinant })
    }

    /// Family with the given images of the basis vectors.
    pub fn from_images(images: &[Vec<RationalFunction>]) -> Result<Self> {
        Self::new(Matrix::from_columns(images))
    }

    pub fn matrix(&self) -> &Matrix<RationalFunction> {
        &self.matrix
    }

    pub fn determinant(&self) -> &RationalFunction {
        &self.determinant
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `f_{t₀}`, if every entry is defined there.
    pub fn at(&self, t0: &Rational) -> Option<LinearMap<Rational>> {
        let rows = self
            .matrix
            .to_rows()
            .iter()
            .map(|row| row.iter().map(|r| r.eval(t0)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(LinearMap::new(Matrix::from_rows(rows)))
    }

    /// `self ∘ other`, both in the same parameter.
    pub fn compose(&self, other: &ContractionFamily) -> Result<Self> {
        Self::new(self.matrix.mul(&other.matrix))
    }
}

fn rf(p: &[Rational]) -> RationalFunction {
    RationalFunction::from_poly(Poly::new(p.to_vec()))
}

/// `c·t^k`.
fn mono(c: Rational, k: usize) -> RationalFunction {
    RationalFunction::monomial(c, k)
}

fn lift(alg: &Algebra<Rational>) -> Algebra<RationalFunction> {
    alg.map(|c| RationalFunction::from_poly(Poly::constant(c.clone())))
}

/// Structure constants of `f_t⁻¹ ∘ β(f_t ·, f_t ·)` in `ℚ(t)`.
pub fn transport(beta: &Algebra<Rational>, fam: &ContractionFamily) -> Result<Algebra<RationalFunction>> {
    if beta.dim() != fam.dim() {
        return Err(Error::DimensionMismatch { expected: beta.dim(), found: fam.dim() });
    }
    change_basis(&lift(beta), &LinearMap::new(fam.matrix.clone())).map_err(|e| match e {
        Error::SingularMap => Error::IdenticallySingular,
        other => other,
    })
}

/// Evaluation of a law over `ℚ(t)` at `t₀`.
pub fn eval_law(alg: &Algebra<RationalFunction>, t0: &Rational) -> Option<Algebra<Rational>> {
    let constants = alg.constants().iter().map(|r| r.eval(t0)).collect::<Option<Vec<_>>>()?;
    Algebra::new(alg.dim(), constants).ok()
}

/// The limit `t → 0` of the transported law.
pub fn contract(beta: &Algebra<Rational>, fam: &ContractionFamily) -> Result<Algebra<Rational>> {
    let moving = transport(beta, fam)?;
    let constants = moving.constants().iter().map(rf_limit_at_zero).collect::<Result<Vec<_>>>()?;
    let limit = Algebra::new(beta.dim(), constants)?;
    debug_assert!(!is_associative(beta) || is_associative(&limit));
    Ok(limit)
}

/// `x_i = t·e_i`, contracting every law onto the zero law.
pub fn abelian_family(n: usize) -> ContractionFamily {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = RationalFunction::t();
    }
    ContractionFamily::new(m).expect("t^n is not identically zero")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContractionEdge {
    pub source: ClassLabel,
    pub target: ClassLabel,
    pub family: ContractionFamily,
    pub verified: bool,
    /// Class of the limit, when the limit exists.
    pub limit_label: Option<ClassLabel>,
    pub dimension_drop: bool,
    pub reason: Option<String>,
}

pub fn verify_edge(source: ClassLabel, target: ClassLabel, fam: &ContractionFamily) -> ContractionEdge {
    let mut edge = ContractionEdge {
        source,
        target,
        family: fam.clone(),
        verified: false,
        limit_label: None,
        dimension_drop: false,
        reason: None,
    };
    let src = canonical_algebra(source);
    let (d_src, d_tgt) = match (orbit_dim(&src), orbit_dim(&canonical_algebra(target))) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            edge.reason = Some(e.to_string());
            return edge;
        }
    };
    edge.dimension_drop = d_src > d_tgt;
    let limit = match contract(&src, fam) {
        Ok(l) => l,
        Err(e) => {
            edge.reason = Some(e.to_string());
            return edge;
        }
    };
    match classify(&limit) {
        Ok(label) => edge.limit_label = Some(label),
        Err(e) => {
            edge.reason = Some(e.to_string());
            return edge;
        }
    }
    edge.verified = edge.limit_label == Some(target) && edge.dimension_drop;
    if !edge.verified {
        edge.reason = Some(if edge.limit_label != Some(target) {
            format!("limit classifies as {}", edge.limit_label.expect("set above"))
        } else {
            format!("orbit dimension does not drop ({d_src} → {d_tgt})")
        });
    }
    edge
}

/// The explicit families from the classification of contractions in
/// dimension two. The `√(t/2)` family for `β₁ → β₅` is stored at
/// `t = 2s²`, which leaves the limit unchanged and keeps entries in `ℚ(s)`.
pub fn explicit_families() -> Vec<(ClassLabel, ClassLabel, ContractionFamily)> {
    use ClassLabel::*;
    let (zero, one, half) = (q(0, 1), q(1, 1), q(1, 2));
    let c = |x: &Rational| rf(std::slice::from_ref(x));
    let fam = |e1: [RationalFunction; 2], e2: [RationalFunction; 2]| {
        ContractionFamily::from_images(&[e1.to_vec(), e2.to_vec()]).expect("nonsingular family")
    };
    let diag_1_t = fam([c(&one), c(&zero)], [c(&zero), RationalFunction::t()]);
    vec![
        (Beta1, Beta3, diag_1_t.clone()),
        (Beta2, Beta3, diag_1_t),
        (Beta2, Beta4, fam([RationalFunction::t(), c(&zero)], [c(&half), c(&half)])),
        (Beta1, Beta5, fam([RationalFunction::t(), RationalFunction::t()], [c(&zero), mono(q(2, 1), 2)])),
        (Beta2, Beta5, fam([c(&zero), RationalFunction::t()], [mono(one.clone(), 2), c(&zero)])),
        (Beta3, Beta5, fam([RationalFunction::t(), RationalFunction::t()], [c(&zero), mono(one.clone(), 2)])),
        (Beta4, Beta5, fam([c(&one), RationalFunction::t()], [c(&zero), mono(one, 2)])),
    ]
}

/// A fixed rational matrix of the search templates, row-major.
fn template_matrices() -> Vec<[[Rational; 2]; 2]> {
    let (o, z) = (q(1, 1), q(0, 1));
    let mut out =
        vec![[[o.clone(), z.clone()], [z.clone(), o.clone()]], [[z.clone(), o.clone()], [o.clone(), z.clone()]]];
    let entries = [q(1, 1), q(-1, 1), q(1, 2), q(-1, 2)];
    for c in &entries {
        out.push([[o.clone(), c.clone()], [z.clone(), o.clone()]]);
    }
    for c in &entries {
        out.push([[o.clone(), z.clone()], [c.clone(), o.clone()]]);
    }
    out
}

/// A point of the search grid: `g · diag(t^a, t^b) · h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Template {
    pub a: u32,
    pub b: u32,
    pub g: usize,
    pub h: usize,
}

/// The searched grid, so that a negative answer is a reproducible claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub template_bound: u32,
    pub exponent_pairs: usize,
    pub outer_matrices: usize,
    pub families_tried: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Found { template: Template, family: ContractionFamily, census: Census },
    NotFound { census: Census },
}

impl SearchOutcome {
    pub fn census(&self) -> &Census {
        match self {
            SearchOutcome::Found { census, .. } | SearchOutcome::NotFound { census } => census,
        }
    }

    pub fn family(&self) -> Option<&ContractionFamily> {
        match self {
            SearchOutcome::Found { family, .. } => Some(family),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

pub const MAX_TEMPLATE_BOUND: u32 = 4;

fn template_family(t: Template, mats: &[[[Rational; 2]; 2]]) -> ContractionFamily {
    let lift_m = |m: &[[Rational; 2]; 2]| {
        Matrix::from_rows(m.iter().map(|r| r.iter().map(|x| rf(std::slice::from_ref(x))).collect()).collect())
    };
    let mut d = Matrix::zeros(2, 2);
    d[(0, 0)] = mono(q(1, 1), t.a as usize);
    d[(1, 1)] = mono(q(1, 1), t.b as usize);
    let m = lift_m(&mats[t.g]).mul(&d).mul(&lift_m(&mats[t.h]));
    ContractionFamily::new(m).expect("product of invertible matrices")
}

/// Tries `g · diag(t^a, t^b) · h` for `0 ≤ a, b ≤ bound` and `g, h` among
/// the identity, the swap and the eight unitriangular matrices with
/// off-diagonal entry in `{±1, ±½}`, in lexicographic order of
/// `(a, b, g, h)`. Returns the first family that verifies.
///
/// # Panics
/// If `template_bound` exceeds [`MAX_TEMPLATE_BOUND`].
pub fn search_families(source: ClassLabel, target: ClassLabel, template_bound: u32) -> SearchOutcome {
    assert!(template_bound <= MAX_TEMPLATE_BOUND, "template bound above {MAX_TEMPLATE_BOUND}");
    let mats = template_matrices();
    let side = template_bound as usize + 1;
    let mut census =
        Census { template_bound, exponent_pairs: side * side, outer_matrices: mats.len(), families_tried: 0 };
    let src = canonical_algebra(source);
    let target_dim = orbit_dim(&canonical_algebra(target)).expect("canonical laws are associative");
    let src_dim = orbit_dim(&src).expect("canonical laws are associative");
    for a in 0..=template_bound {
        for b in 0..=template_bound {
            for g in 0..mats.len() {
                for h in 0..mats.len() {
                    census.families_tried += 1;
                    if src_dim <= target_dim {
                        continue;
                    }
                    let template = Template { a, b, g, h };
                    let family = template_family(template, &mats);
                    let hit = contract(&src, &family).is_ok_and(|l| classify(&l) == Ok(target));
                    if hit {
                        return SearchOutcome::Found { template, family, census };
                    }
                }
            }
        }
    }
    SearchOutcome::NotFound { census }
}

#[derive(Clone, Debug)]
pub struct ContractionGraph {
    pub nodes: Vec<ClassLabel>,
    pub edges: Vec<ContractionEdge>,
}

impl ContractionGraph {
    pub fn edge_set(&self) -> Vec<(ClassLabel, ClassLabel)> {
        self.edges.iter().map(|e| (e.source, e.target)).collect()
    }

    pub fn in_degree(&self, label: ClassLabel) -> usize {
        self.edges.iter().filter(|e| e.target == label).count()
    }

    pub fn out_degree(&self, label: ClassLabel) -> usize {
        self.edges.iter().filter(|e| e.source == label).count()
    }

    /// Graphviz text with nodes and edges in label order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph contractions {\n");
        for n in &self.nodes {
            writeln!(out, "  {n};").expect("write to string");
        }
        for e in &self.edges {
            writeln!(out, "  {} -> {};", e.source, e.target).expect("write to string");
        }
        out.push_str("}\n");
        out
    }
}

/// Verified explicit families plus `x_i = t·e_i` from every nonzero class.
pub fn contraction_graph() -> ContractionGraph {
    let mut edges: Vec<ContractionEdge> =
        explicit_families().iter().map(|(s, t, f)| verify_edge(*s, *t, f)).filter(|e| e.verified).collect();
    for &label in &ClassLabel::ASSOCIATIVE[1..] {
        let edge = verify_edge(label, ClassLabel::Abelian, &abelian_family(2));
        if edge.verified {
            edges.push(edge);
        }
    }
    edges.sort_by_key(|e| (e.source, e.target));
    edges.dedup_by_key(|e| (e.source, e.target));
    ContractionGraph { nodes: ClassLabel::ASSOCIATIVE.to_vec(), edges }
}
