//! JSON formats for algebras, contraction families, perturbations and
//! reports.
//!
//! Algebras use `{"dim": n, "scalars": "rational", "constants": c}` with
//! `c[i][j]` the coordinates of `e_i∘e_j`, or the two-dimensional
//! shorthand `{"matrix": [[a1,a2],[b1,b2],[c1,c2],[d1,d2]]}` whose rows
//! are `e₁e₁, e₁e₂, e₂e₁, e₂e₂`. Scalars are `"p/q"` strings or integers.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, TrilinearMap};
use crate::classify::Witness;
use crate::contraction::ContractionFamily;
use crate::deformation::Perturbation;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Rational, RationalFunction, Scalar};

#[derive(Deserialize)]
#[serde(untagged)]
enum AlgebraRepr<S> {
    Full {
        dim: usize,
        #[serde(default)]
        scalars: Option<String>,
        constants: Vec<Vec<Vec<S>>>,
    },
    Shorthand {
        matrix: Vec<Vec<S>>,
    },
}

#[derive(Serialize)]
struct FullAlgebra<'a, S> {
    dim: usize,
    scalars: &'a str,
    constants: Vec<Vec<Vec<S>>>,
}

fn parse_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn from_value<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(parse_error)
}

fn tensor_to_algebra<S: Scalar>(dim: usize, constants: Vec<Vec<Vec<S>>>) -> Result<Algebra<S>> {
    let shape_ok =
        constants.len() == dim && constants.iter().all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim));
    if !shape_ok {
        return Err(Error::Parse(format!("constants must have shape {dim}×{dim}×{dim}")));
    }
    Algebra::new(dim, constants.into_iter().flatten().flatten().collect())
}

fn repr_to_algebra<S: Scalar>(repr: AlgebraRepr<S>, scalar_name: &str) -> Result<Algebra<S>> {
    match repr {
        AlgebraRepr::Full { dim, scalars, constants } => {
            if let Some(s) = scalars {
                if s != scalar_name {
                    return Err(Error::Parse(format!("unsupported scalars `{s}`, expected `{scalar_name}`")));
                }
            }
            tensor_to_algebra(dim, constants)
        }
        AlgebraRepr::Shorthand { matrix } => {
            if matrix.len() != 4 || matrix.iter().any(|r| r.len() != 2) {
                return Err(Error::Parse("shorthand matrix must be 4×2".into()));
            }
            Algebra::new(2, matrix.into_iter().flatten().collect())
        }
    }
}

fn algebra_from_value(v: Value) -> Result<Algebra<Rational>> {
    repr_to_algebra(from_value::<AlgebraRepr<Rational>>(v)?, "rational")
}

pub fn parse_algebra(text: &str) -> Result<Algebra<Rational>> {
    algebra_from_value(serde_json::from_str(text).map_err(parse_error)?)
}

/// Nested `c[i][j][k]` form of the structure constants.
pub fn nested_constants<S: Scalar>(alg: &Algebra<S>) -> Vec<Vec<Vec<S>>> {
    (0..alg.dim()).map(|i| (0..alg.dim()).map(|j| alg.basis_product(i, j).to_vec()).collect()).collect()
}

pub fn algebra_to_json<S: Scalar + Serialize>(alg: &Algebra<S>, scalars: &str) -> Value {
    serde_json::to_value(FullAlgebra { dim: alg.dim(), scalars, constants: nested_constants(alg) })
        .expect("serializable")
}

/// Normalized full form, pretty-printed with a trailing newline.
pub fn write_algebra(alg: &Algebra<Rational>) -> String {
    pretty(&algebra_to_json(alg, "rational"))
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Deserialize)]
struct FamilyRepr {
    matrix: Vec<Vec<RationalFunction>>,
}

/// `{"matrix": [[f11, f12], [f21, f22]]}` where column `j` holds the
/// coordinates of `f_t(e_j)`.
pub fn parse_family(text: &str) -> Result<ContractionFamily> {
    let repr: FamilyRepr = serde_json::from_str(text).map_err(parse_error)?;
    let n = repr.matrix.len();
    if repr.matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("family matrix must be square".into()));
    }
    ContractionFamily::new(Matrix::from_rows(repr.matrix))
}

pub fn family_to_json(fam: &ContractionFamily) -> Value {
    json!({ "matrix": fam.matrix().to_rows() })
}

#[derive(Deserialize)]
struct PerturbationRepr {
    base: Value,
    directions: Vec<Value>,
}

/// `{"base": <algebra>, "directions": [<algebra or nested tensor>, …]}`.
pub fn parse_perturbation(text: &str) -> Result<Perturbation> {
    let repr: PerturbationRepr = serde_json::from_str(text).map_err(parse_error)?;
    let base = algebra_from_value(repr.base)?;
    let directions = repr
        .directions
        .into_iter()
        .map(|d| match d {
            Value::Array(_) => tensor_to_algebra(base.dim(), from_value(d)?),
            other => algebra_from_value(other),
        })
        .collect::<Result<Vec<_>>>()?;
    Perturbation::new(base, directions)
}

pub fn perturbation_to_json(p: &Perturbation) -> Value {
    json!({
        "base": algebra_to_json(p.base(), "rational"),
        "directions": p.directions().iter().map(nested_constants).collect::<Vec<_>>(),
    })
}

/// Nonzero entries `(i, j, k, l, value)` of a trilinear map, value as text.
pub fn trilinear_entries<S: Scalar>(t: &TrilinearMap<S>) -> Vec<Value> {
    t.nonzero_entries().into_iter().map(|([i, j, k, l], v)| json!([i, j, k, l, v.to_string()])).collect()
}

/// A witness as a matrix whose columns are the new basis vectors. Over a
/// quadratic extension each entry is a pair `[a, b]` for `a + b√ext`.
pub fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::Rational(g) => json!({ "matrix": g.matrix().to_rows() }),
        Witness::Quadratic { radicand, map } => {
            let rows: Vec<Vec<Value>> =
                map.matrix().to_rows().iter().map(|r| r.iter().map(|x| json!([x.a, x.b])).collect()).collect();
            json!({ "matrix": rows, "ext": radicand.to_string() })
        }
    }
}
