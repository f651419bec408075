//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's own elimination and
//! coboundary code: ranks come from the characteristic polynomial of `MᵀM`,
//! tangent vectors from differentiating a transported law, and isomorphism
//! from exhaustive search over a finite candidate set.
#![allow(dead_code)]

use algvar::algebra::{associativity_residuals, change_basis, Algebra, LinearMap};
use algvar::classify::{canonical_algebra, ClassLabel};
use algvar::scalars::{rf_limit_at_zero, Field, Poly, Rational, RationalFunction, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` in `[-bound, bound]` with `1 ≤ q ≤ 3`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Rational {
    let den = rng.gen_range(1..=3);
    Rational::new(rng.gen_range(-bound * den..=bound * den), den)
}

pub fn invertible(rng: &mut impl Rng, n: usize, bound: i64) -> LinearMap<Rational> {
    loop {
        let cols: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| rational(rng, bound)).collect()).collect();
        let g = LinearMap::from_images(&cols);
        if g.is_invertible() {
            return g;
        }
    }
}

pub fn random_map(rng: &mut impl Rng, n: usize, bound: i64) -> LinearMap<Rational> {
    let cols: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| rational(rng, bound)).collect()).collect();
    LinearMap::from_images(&cols)
}

pub fn flat_map(n: usize, entries: &[Rational]) -> LinearMap<Rational> {
    let cols: Vec<Vec<Rational>> = entries.chunks(n).map(<[Rational]>::to_vec).collect();
    LinearMap::from_images(&cols)
}

pub fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// Rank via Faddeev–LeVerrier: the rank of `M` equals that of `G = MᵀM`,
/// which is `n` minus the multiplicity of `0` as a root of `det(λI − G)`.
pub fn rank_oracle(rows: &[Vec<Rational>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else { return 0 };
    let n = width;
    let g: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rows.iter().fold(r(0), |acc, row| acc + row[i].clone() * row[j].clone())).collect())
        .collect();
    let matmul = |a: &Vec<Vec<Rational>>, b: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(r(0), |acc, k| acc + a[i][k].clone() * b[k][j].clone())).collect())
            .collect()
    };
    // coeffs[k] is the coefficient of λ^k.
    let mut coeffs = vec![r(0); n + 1];
    coeffs[n] = r(1);
    let mut m = vec![vec![r(0); n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[n - k + 1].clone();
        }
        let gm = matmul(&g, &m);
        let trace = (0..n).fold(r(0), |acc, i| acc + gm[i][i].clone());
        coeffs[n - k] = -(trace / r(k as i64));
        if k < n {
            m = gm;
        }
    }
    let zero_multiplicity = coeffs.iter().take_while(|c| c.is_zero()).count();
    n - zero_multiplicity
}

/// `d/dt` at `t = 0` of the law transported along `x_i = (Id + t·f)(e_i)`.
pub fn derivative_action(beta: &Algebra<Rational>, f: &LinearMap<Rational>) -> Algebra<Rational> {
    let n = beta.dim();
    let t = RationalFunction::t();
    let lift = |x: &Rational| RationalFunction::from_rational(x);
    let cols: Vec<Vec<RationalFunction>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let id = if i == j { RationalFunction::one() } else { RationalFunction::zero() };
                    id + t.clone() * lift(&f.matrix()[(i, j)])
                })
                .collect()
        })
        .collect();
    let moved =
        change_basis(&beta.map(lift), &LinearMap::from_images(&cols)).expect("Id + t·f is generically invertible");
    moved.map(|c| {
        let at_zero = lift(&c.eval(&r(0)).expect("no pole at zero"));
        let quotient = (c.clone() - at_zero).checked_div(&t).expect("t is nonzero");
        rf_limit_at_zero(&quotient).expect("transported law is smooth at zero")
    })
}

pub fn unit_maps(n: usize) -> Vec<LinearMap<Rational>> {
    (0..n * n)
        .map(|idx| {
            let mut e = vec![r(0); n * n];
            e[idx] = r(1);
            flat_map(n, &e)
        })
        .collect()
}

/// Orbit dimension as the rank of the differentiated action.
pub fn orbit_dim_oracle(beta: &Algebra<Rational>) -> usize {
    let rows: Vec<Vec<Rational>> =
        unit_maps(beta.dim()).iter().map(|f| derivative_action(beta, f).constants().to_vec()).collect();
    rank_oracle(&rows)
}

/// `dim Z²` as the nullity of the linearized associativity residual.
pub fn cocycle_dim_oracle(beta: &Algebra<Rational>) -> usize {
    let n = beta.dim();
    let size = n * n * n;
    let s = Poly::<Rational>::var();
    let lifted = beta.map(|x| Poly::constant(x.clone()));
    let rows: Vec<Vec<Rational>> = (0..size)
        .map(|c| {
            let mut dir = vec![Poly::zero(); size];
            dir[c] = s.clone();
            let law = lifted.plus(&Algebra::new(n, dir).expect("shape")).expect("same dimension");
            associativity_residuals(&law).data().iter().map(|p| p.coeff(1)).collect()
        })
        .collect();
    size - rank_oracle(&rows)
}

pub fn h2_oracle(beta: &Algebra<Rational>) -> usize {
    cocycle_dim_oracle(beta) - orbit_dim_oracle(beta)
}

/// Exhaustive search for a basis `(x1, x2)` with coordinates in
/// `candidates` whose multiplication table is the canonical one of `label`.
pub fn brute_force_isomorphic(alg: &Algebra<Rational>, label: ClassLabel, candidates: &[Rational]) -> bool {
    let target = canonical_algebra(label);
    let vectors: Vec<Vec<Rational>> =
        candidates.iter().flat_map(|u| candidates.iter().map(move |v| vec![u.clone(), v.clone()])).collect();
    let combo = |coeffs: &[Rational], x1: &[Rational], x2: &[Rational]| -> Vec<Rational> {
        (0..2).map(|k| coeffs[0].clone() * x1[k].clone() + coeffs[1].clone() * x2[k].clone()).collect()
    };
    for x1 in &vectors {
        // x1·x1 only involves x2 when the table says so; prune early otherwise.
        let x1x1 = alg.mul_coords(x1, x1);
        if target.constant(0, 0, 1).is_zero() && x1x1 != combo(target.basis_product(0, 0), x1, &[r(0), r(0)]) {
            continue;
        }
        for x2 in &vectors {
            let det = x1[0].clone() * x2[1].clone() - x1[1].clone() * x2[0].clone();
            if det.is_zero() {
                continue;
            }
            let basis = [x1, x2];
            let matches = (0..2).all(|i| {
                (0..2).all(|j| alg.mul_coords(basis[i], basis[j]) == combo(target.basis_product(i, j), x1, x2))
            });
            if matches {
                return true;
            }
        }
    }
    false
}

/// Coordinates `0, ±1, ±ρ^{±1}, ±ρ^{±2}` for a scale `ρ`.
pub fn scale_candidates(rho: &Rational) -> Vec<Rational> {
    let inv = r(1) / rho.clone();
    let mut out = vec![r(0)];
    for v in [r(1), rho.clone(), inv.clone(), rho.pow(2), inv.pow(2)] {
        out.push(-v.clone());
        out.push(v);
    }
    out.sort();
    out.dedup();
    out
}

/// Parses a linear form such as `"a-2d"` or `"2c-b"` in the variables
/// `a, b, c, d` into its coefficient vector.
pub fn linear_form(text: &str) -> [i64; 4] {
    let mut out = [0i64; 4];
    let mut sign = 1;
    let mut digits = String::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '+' => sign = 1,
            '-' | '−' => sign = -1,
            '0'..='9' => digits.push(ch),
            'a'..='d' => {
                let coeff = if digits.is_empty() { 1 } else { digits.parse::<i64>().expect("digits") };
                out[(ch as u8 - b'a') as usize] += sign * coeff;
                sign = 1;
                digits.clear();
            }
            other => panic!("unexpected character {other:?} in {text:?}"),
        }
    }
    out
}

/// Evaluates a 4×2 table of linear forms at `(a, b, c, d)`.
pub fn eval_table(table: &[&str; 8], point: &[Rational; 4]) -> Algebra<Rational> {
    let vals: Vec<Rational> = table
        .iter()
        .map(|form| linear_form(form).iter().zip(point).fold(r(0), |acc, (k, x)| acc + r(*k) * x.clone()))
        .collect();
    Algebra::new(2, vals).expect("4×2 table")
}

/// Entry of a 4×2 coefficient matrix with rows named `a, b, c, d`:
/// `"b1"` is row `b`, coordinate 1.
pub fn matrix_var(m: &Algebra<Rational>, name: &str) -> Rational {
    let mut chars = name.chars();
    let row = (chars.next().expect("row letter") as u8 - b'a') as usize;
    let coord = chars.next().and_then(|c| c.to_digit(10)).expect("coordinate digit") as usize - 1;
    m.constants()[row * 2 + coord].clone()
}

pub type Monomial2 = (i64, &'static str, &'static str);

/// Value of `Σ lhs − Σ rhs` for one equation given as signed quadratic
/// monomials.
pub fn equation_defect(m: &Algebra<Rational>, lhs: &[Monomial2], rhs: &[Monomial2]) -> Rational {
    let side = |terms: &[Monomial2]| {
        terms.iter().fold(r(0), |acc, (k, x, y)| acc + r(*k) * matrix_var(m, x) * matrix_var(m, y))
    };
    side(lhs) - side(rhs)
}

/// The 2-dimensional laws together with random basis changes of them.
pub fn random_class_member(rng: &mut impl Rng, bound: i64) -> (ClassLabel, Algebra<Rational>) {
    let label = ClassLabel::ASSOCIATIVE[rng.gen_range(0..ClassLabel::ASSOCIATIVE.len())];
    let g = invertible(rng, 2, bound);
    (label, change_basis(&canonical_algebra(label), &g).expect("invertible"))
}

/// The ten printed associativity equations for the matrix with rows
/// `a, b, c, d` (`e1e1, e1e2, e2e1, e2e2`).
pub const ASSOCIATIVITY_EQUATIONS: [(&[Monomial2], &[Monomial2]); 10] = [
    (&[(1, "a2", "b1")], &[(1, "a2", "c1")]),
    (&[(1, "a2", "b2")], &[(1, "a2", "c2")]),
    (&[(1, "b1", "b2")], &[(1, "a2", "d1")]),
    (&[(1, "a2", "d1")], &[(1, "c1", "c2")]),
    (&[(1, "a2", "b1"), (1, "b2", "b2")], &[(1, "a1", "b2"), (1, "a2", "d2")]),
    (&[(1, "a1", "c1"), (1, "b1", "c2")], &[(1, "a1", "b1"), (1, "b2", "c1")]),
    (&[(1, "a1", "d1"), (1, "b1", "d2")], &[(1, "b1", "b1"), (1, "b2", "d1")]),
    (&[(1, "a1", "c2"), (1, "a2", "d2")], &[(1, "a2", "c1"), (1, "c2", "c2")]),
    (&[(1, "b1", "c2"), (1, "b2", "d2")], &[(1, "b2", "c1"), (1, "c2", "d2")]),
    (&[(1, "c1", "c1"), (1, "c2", "d1")], &[(1, "a1", "d1"), (1, "c1", "d2")]),
];
