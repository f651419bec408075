use super::*;
use crate::scalars::{q, Rational};

fn m2(rows: [[i64; 2]; 4]) -> Algebra<Rational> {
    Algebra::from_matrix2(rows.map(|r| r.map(Rational::from)))
}

fn beta(k: usize) -> Algebra<Rational> {
    match k {
        1 => m2([[1, 0], [0, 1], [0, 1], [-1, 0]]),
        2 => m2([[1, 0], [0, 1], [0, 1], [1, 0]]),
        3 => m2([[1, 0], [0, 1], [0, 1], [0, 0]]),
        4 => m2([[0, 0], [0, 0], [0, 0], [0, 1]]),
        5 => m2([[0, 1], [0, 0], [0, 0], [0, 0]]),
        6 => m2([[1, 0], [0, 1], [0, 0], [0, 0]]),
        7 => m2([[1, 0], [0, 0], [0, 1], [0, 0]]),
        _ => unreachable!(),
    }
}

fn el(v: [i64; 2]) -> Element<Rational> {
    Element::new(v.iter().map(|&x| Rational::from(x)).collect())
}

#[test]
fn canonical_laws_are_associative() {
    for k in 1..=7 {
        assert!(is_associative(&beta(k)), "beta{k}");
    }
    assert!(is_associative(&Algebra::<Rational>::zero(2)));
}

#[test]
fn non_associative_law_is_detected() {
    // e1e1 = e2, e1e2 = e1.
    let a = m2([[0, 1], [1, 0], [0, 0], [0, 0]]);
    assert!(!is_associative(&a));
    assert!(first_residual(&a).is_some());
    assert!(matches!(require_associative(&a), Err(Error::NotAssociative(_))));
}

#[test]
fn constants_layout_is_row_major_in_ijk() {
    let a = beta(1);
    assert_eq!(a.constant(1, 1, 0), &q(-1, 1));
    assert_eq!(a.basis_product(0, 1), &[q(0, 1), q(1, 1)]);
    assert_eq!(a.to_matrix2().unwrap(), beta(1).to_matrix2().unwrap());
}

#[test]
fn complex_numbers_multiply() {
    let a = beta(1);
    let x = el([1, 2]);
    let y = el([3, -1]);
    assert_eq!(multiply(&a, &x, &y).unwrap(), el([5, 5]));
}

#[test]
fn symmetric_and_lie_parts_recombine() {
    for k in 1..=7 {
        let a = beta(k);
        let j = jordan_part(&a);
        let l = lie_part(&a);
        assert!(j.is_symmetric() && l.is_alternating());
        assert_eq!(j.plus(&l).unwrap(), a);
        assert!(is_jordan(&j).unwrap(), "beta{k}");
        assert!(is_lie(&l).unwrap(), "beta{k}");
    }
}

#[test]
fn symmetric_non_jordan_law() {
    // e1e1 = e2, e2e2 = e1: symmetric, and (x²y)x ≠ x²(yx) for x = e1 + e2, y = e1.
    let a = m2([[0, 1], [0, 0], [0, 0], [1, 0]]);
    assert!(a.is_symmetric());
    assert!(!is_jordan(&a).unwrap());
}

#[test]
fn change_basis_to_new_generators() {
    // In beta2, (e1 ± e2)/2 are orthogonal idempotents.
    let a = beta(2);
    let g = LinearMap::from_images(&[vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(-1, 2)]]);
    let b = change_basis(&a, &g).unwrap();
    assert_eq!(b.basis_product(0, 0), &[q(1, 1), q(0, 1)]);
    assert_eq!(b.basis_product(1, 1), &[q(0, 1), q(1, 1)]);
    assert!(b.basis_product(0, 1).iter().all(Scalar::is_zero));
    let singular = LinearMap::from_images(&[vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]]);
    assert_eq!(change_basis(&a, &singular), Err(Error::SingularMap));
}

#[test]
fn structural_invariants_of_canonical_laws() {
    let ident: Vec<bool> = (1..=7).map(|k| identity_element(&beta(k)).is_some()).collect();
    assert_eq!(ident, [true, true, true, false, false, false, false]);
    let derived: Vec<usize> = (1..=7).map(|k| derived_dim(&beta(k))).collect();
    assert_eq!(derived, [2, 2, 2, 1, 1, 2, 2]);
    let nil: Vec<bool> = (1..=7).map(|k| is_nilpotent(&beta(k))).collect();
    assert_eq!(nil, [false, false, false, false, true, false, false]);
    assert_eq!(left_annihilator(&beta(6)).dim(), 1);
    assert_eq!(right_annihilator(&beta(6)).dim(), 0);
    assert_eq!(right_annihilator(&beta(7)).dim(), 1);
    assert!(left_annihilator(&beta(6)).contains(&el([0, 1])));
}

#[test]
fn idempotent_search() {
    assert!(!nontrivial_idempotent2(&beta(1)).unwrap().exists());
    assert!(!nontrivial_idempotent2(&beta(3)).unwrap().exists());
    assert!(!nontrivial_idempotent2(&beta(5)).unwrap().exists());
    for k in [2, 4, 6, 7] {
        let SpecialElement::Rational(x) = nontrivial_idempotent2(&beta(k)).unwrap() else {
            panic!("beta{k} has a rational idempotent");
        };
        assert_eq!(multiply(&beta(k), &x, &x).unwrap(), x);
        assert_ne!(Some(x), identity_element(&beta(k)));
    }
    // e1e1 = 2e2 (+ unit e1): v = e2 with v² = 2 gives idempotents (1 ± e2/√2)/2.
    let irr = m2([[1, 0], [0, 1], [0, 1], [2, 0]]);
    assert!(matches!(nontrivial_idempotent2(&irr).unwrap(), SpecialElement::ExistsIrrational { .. }));
}

#[test]
fn square_zero_search() {
    assert!(!square_zero2(&beta(1)).unwrap().exists());
    assert!(!square_zero2(&beta(2)).unwrap().exists());
    for k in [3, 5, 6, 7] {
        let x = square_zero2(&beta(k)).unwrap().rational().cloned().unwrap();
        assert!(multiply(&beta(k), &x, &x).unwrap().is_zero());
        assert!(!x.is_zero());
    }
    assert_eq!(square_zero2(&beta(4)).unwrap().rational(), Some(&el([1, 0])));
}

#[test]
fn ideal_lines() {
    assert_eq!(one_dim_ideals2(&beta(1)).unwrap().count(), Some(0));
    assert_eq!(one_dim_ideals2(&beta(2)).unwrap().count(), Some(2));
    assert_eq!(one_dim_ideals2(&beta(3)).unwrap().count(), Some(1));
    assert_eq!(one_dim_ideals2(&beta(4)).unwrap().count(), Some(2));
    assert_eq!(one_dim_ideals2(&beta(5)).unwrap().count(), Some(1));
    assert!(one_dim_ideals2(&beta(5)).unwrap().contains_rational(&el([0, 1])));
    assert_eq!(one_dim_ideals2(&Algebra::zero(2)).unwrap(), IdealLines::EveryLine);
    assert!(one_dim_ideals2(&Algebra::<Rational>::zero(3)).is_err());
}

#[test]
fn one_dimensional_laws() {
    assert_eq!(line_law(&Algebra::<Rational>::zero(1)).unwrap(), LineLaw::Zero);
    let a = Algebra::new(1, vec![q(3, 1)]).unwrap();
    assert_eq!(line_law(&a).unwrap(), LineLaw::Idempotent { generator: q(1, 3) });
    assert!(is_associative(&a) && is_associative(&Algebra::<Rational>::zero(0)));
    assert!(line_law(&beta(1)).is_err());
}
