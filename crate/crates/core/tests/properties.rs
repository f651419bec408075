mod common;

use algvar::algebra::{
    associativity_residuals, change_basis, is_associative, is_jordan, is_lie, jordan_part, lie_part, Algebra, LinearMap,
};
use algvar::classify::{
    admissible_lie_parts, canonical_algebra, classify, fingerprint, isomorphism_witness, jordan_classify2,
    jordan_lie_sum, lie_coefficients, ClassLabel,
};
use algvar::contraction::{contract, contraction_graph, eval_law, explicit_families, search_families, transport};
use algvar::deformation::{circle_product, coboundary, cocycle_operator, orbit_dim};
use algvar::scalars::{q, Rational};
use algvar::Error;
use common::*;
use proptest::prelude::*;

use ClassLabel::*;

fn rat(bound: i64) -> impl Strategy<Value = Rational> {
    (1i64..=3).prop_flat_map(move |d| (-bound * d..=bound * d).prop_map(move |n| Rational::new(n, d)))
}

fn map2(bound: i64) -> impl Strategy<Value = LinearMap<Rational>> {
    prop::collection::vec(rat(bound), 4).prop_map(|v| flat_map(2, &v))
}

fn invertible2() -> impl Strategy<Value = LinearMap<Rational>> {
    map2(5).prop_filter("invertible", LinearMap::is_invertible)
}

fn label() -> impl Strategy<Value = ClassLabel> {
    prop::sample::select(ClassLabel::ASSOCIATIVE.to_vec())
}

fn law2(bound: i64) -> impl Strategy<Value = Algebra<Rational>> {
    prop::collection::vec(rat(bound), 8).prop_map(|v| Algebra::new(2, v).unwrap())
}

/// The symmetric class each associative class reduces to.
fn jordan_of(label: ClassLabel) -> ClassLabel {
    match label {
        Abelian => JAbelian,
        Beta1 => Phi1,
        Beta2 => Phi2,
        Beta3 => Phi3,
        Beta4 => Phi4,
        Beta5 => Phi5,
        _ => Phi6,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_and_witness_survive_basis_change(l in label(), g in invertible2()) {
        let moved = change_basis(&canonical_algebra(l), &g).unwrap();
        prop_assert_eq!(classify(&moved), Ok(l));
        let (found, witness) = isomorphism_witness(&moved).unwrap();
        prop_assert_eq!(found, l);
        prop_assert!(witness.transports(&moved, l));
    }

    #[test]
    fn invariants_are_invariant(l in label(), g in invertible2()) {
        let canonical = canonical_algebra(l);
        let moved = change_basis(&canonical, &g).unwrap();
        prop_assert_eq!(fingerprint(&moved).unwrap(), fingerprint(&canonical).unwrap());
        prop_assert_eq!(orbit_dim(&moved).unwrap(), orbit_dim(&canonical).unwrap());
    }

    #[test]
    fn change_basis_composes(l in label(), g in invertible2(), h in invertible2()) {
        let beta = canonical_algebra(l);
        let stepwise = change_basis(&change_basis(&beta, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(stepwise, change_basis(&beta, &g.compose(&h)).unwrap());
    }

    #[test]
    fn symmetric_and_alternating_parts_reconstruct(alg in law2(4)) {
        let j = jordan_part(&alg);
        let l = lie_part(&alg);
        prop_assert!(j.is_symmetric());
        prop_assert!(l.is_alternating());
        prop_assert_eq!(j.plus(&l).unwrap(), alg);
        // Every alternating law in dimension 2 satisfies Jacobi.
        prop_assert_eq!(is_lie(&l), Ok(true));
    }

    #[test]
    fn associative_parts_are_jordan(l in label(), g in invertible2()) {
        let moved = change_basis(&canonical_algebra(l), &g).unwrap();
        prop_assert_eq!(is_jordan(&jordan_part(&moved)), Ok(true));
        prop_assert_eq!(jordan_classify2(&jordan_part(&moved)), Ok(jordan_of(l)));
    }

    #[test]
    fn coboundaries_are_cocycles(l in label(), g in invertible2(), f in map2(5)) {
        let beta = change_basis(&canonical_algebra(l), &g).unwrap();
        let phi = coboundary(&beta, &f).unwrap();
        prop_assert!(cocycle_operator(&beta, &phi).unwrap().is_zero());
    }

    #[test]
    fn coboundary_is_first_order_action(l in label(), f in map2(5)) {
        let beta = canonical_algebra(l);
        prop_assert_eq!(coboundary(&beta, &f).unwrap(), derivative_action(&beta, &f));
    }

    #[test]
    fn circle_product_is_symmetric(a in law2(3), b in law2(3)) {
        prop_assert_eq!(circle_product(&a, &b).unwrap(), circle_product(&b, &a).unwrap());
    }

    #[test]
    fn self_circle_product_is_twice_the_residual(a in law2(3)) {
        let doubled = associativity_residuals(&a).scaled(&q(2, 1));
        prop_assert_eq!(circle_product(&a, &a).unwrap(), doubled);
    }

    #[test]
    fn classify_rejects_exactly_the_non_associative(alg in law2(2)) {
        let assoc = associativity_residuals(&alg).is_zero();
        prop_assert_eq!(is_associative(&alg), assoc);
        if !assoc {
            prop_assert!(matches!(classify(&alg), Err(Error::NotAssociative(_))));
        } else {
            prop_assert!(classify(&alg).is_ok());
        }
    }

    #[test]
    fn families_are_basis_changes_at_generic_t(idx in 0usize..7, num in 1i64..40, den in 1i64..40) {
        let (source, _, family) = explicit_families().swap_remove(idx);
        let t0 = Rational::new(num, den);
        let law = eval_law(&transport(&canonical_algebra(source), &family).unwrap(), &t0).unwrap();
        prop_assert_eq!(classify(&law), Ok(source));
        let direct = change_basis(&canonical_algebra(source), &family.at(&t0).unwrap()).unwrap();
        prop_assert_eq!(law, direct);
    }
}

#[test]
fn associative_classes_split_into_jordan_and_admissible_lie_parts() {
    for l in ClassLabel::ASSOCIATIVE {
        let canon = canonical_algebra(l);
        let jl = jordan_of(l);
        assert_eq!(jordan_classify2(&jordan_part(&canon)), Ok(jl));
        if jl == JAbelian {
            assert!(lie_part(&canon).is_zero());
            continue;
        }
        let mu = lie_coefficients(&canon).unwrap();
        assert!(admissible_lie_parts(jl).unwrap().contains(&mu), "{l}");
        assert_eq!(jordan_lie_sum(jl, &mu), canon);
    }
}

#[test]
fn contraction_commutes_with_symmetrization() {
    for edge in contraction_graph().edges {
        let src = canonical_algebra(edge.source);
        let limit = contract(&src, &edge.family).unwrap();
        let jordan_limit = contract(&jordan_part(&src), &edge.family).unwrap();
        assert_eq!(jordan_limit, jordan_part(&limit), "{} -> {}", edge.source, edge.target);
        let lie_limit = contract(&lie_part(&src), &edge.family).unwrap();
        assert_eq!(lie_limit, lie_part(&limit), "{} -> {}", edge.source, edge.target);
    }
}

#[test]
fn composite_family_reaches_beta5() {
    let families = explicit_families();
    let find = |s, t| families.iter().find(|(a, b, _)| *a == s && *b == t).unwrap().2.clone();
    let composite = find(Beta1, Beta3).compose(&find(Beta3, Beta5)).unwrap();
    assert_eq!(classify(&contract(&canonical_algebra(Beta1), &composite).unwrap()), Ok(Beta5));
}

#[test]
fn edges_lower_orbit_dimension() {
    for edge in contraction_graph().edges {
        let src = orbit_dim(&canonical_algebra(edge.source)).unwrap();
        let dst = orbit_dim(&canonical_algebra(edge.target)).unwrap();
        assert!(dst < src, "{} -> {}", edge.source, edge.target);
    }
}

#[test]
fn rigid_classes_are_not_reached_by_small_templates() {
    for target in [Beta6, Beta7] {
        for source in [Beta1, Beta2, Beta3, Beta4] {
            assert!(search_families(source, target, 1).family().is_none(), "{source} -> {target}");
        }
    }
    for target in [Beta1, Beta2] {
        for source in ClassLabel::ASSOCIATIVE {
            let outcome = search_families(source, target, 2);
            assert!(outcome.family().is_none());
        }
    }
}

#[test]
fn search_agrees_with_explicit_families() {
    for (source, target, _) in explicit_families() {
        if let Some(family) = search_families(source, target, 2).family() {
            assert_eq!(classify(&contract(&canonical_algebra(source), family).unwrap()), Ok(target));
        }
    }
}
