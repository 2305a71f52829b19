use contact_symmetry::harmonic::{
    g0_action, harmonic_space, p_plus_action_triviality, BoundarySign, ChainComplex, Cochain2,
    ComponentType,
};
use contact_symmetry::sample::{self, random_element};
use contact_symmetry::scalar::int;
use contact_symmetry::symmetry::find_minus_identity;
use contact_symmetry::GradedContactAlgebra;

fn build(s: &str) -> GradedContactAlgebra {
    GradedContactAlgebra::build(s.parse().unwrap()).unwrap()
}

#[test]
fn boundary_squares_to_zero_across_families() {
    for s in ["sl:n=1", "su:p=1,q=0", "sp:n=1", "so:p=1,q=1"] {
        let alg = build(s);
        assert!(ChainComplex::new(&alg).boundary_squared_vanishes(), "{s}");
        assert!(
            ChainComplex::with_sign(&alg, BoundarySign::Negated).boundary_squared_vanishes(),
            "{s}"
        );
    }
}

#[test]
fn boundary_sign_does_not_change_the_harmonic_space() {
    let alg = build("sl:n=2");
    let a = ChainComplex::new(&alg).harmonic_space();
    let b = ChainComplex::with_sign(&alg, BoundarySign::Negated).harmonic_space();
    assert_eq!(a, b);
}

#[test]
fn su_and_sp_types() {
    let torsion = ComponentType::TORSION_MINUS1;
    let curvature = ComponentType::CURVATURE_G0;
    for s in ["su:p=1,q=1", "su:p=2,q=0"] {
        assert_eq!(
            harmonic_space(&build(s)).types(),
            vec![torsion, curvature],
            "{s}"
        );
    }
    assert_eq!(harmonic_space(&build("sp:n=2")).types(), vec![curvature]);
    assert_eq!(
        harmonic_space(&build("su:p=1,q=0")).types(),
        vec![ComponentType::CURVATURE_G1]
    );
}

#[test]
fn lie_contact_types() {
    // so(4,3) and so(5,2) carry only the homogeneity one torsion
    for s in ["so:p=2,q=1", "so:p=3,q=0"] {
        let report = harmonic_space(&build(s));
        assert_eq!(report.types(), vec![ComponentType::TORSION_MINUS1], "{s}");
        assert!(report.type_split_exact);
    }
}

#[test]
fn low_rank_isomorphisms_agree() {
    // so(3,2) = sp(4) and so(3,3) = sl(4) as contact graded algebras
    let a = harmonic_space(&build("so:p=1,q=0"));
    let b = harmonic_space(&build("sp:n=1"));
    assert_eq!(a.types(), b.types());
    assert_eq!(a.by_homogeneity, b.by_homogeneity);
    let a = harmonic_space(&build("so:p=1,q=1"));
    let b = harmonic_space(&build("sl:n=2"));
    assert_eq!(a.types(), b.types());
    assert_eq!(a.by_homogeneity, b.by_homogeneity);
}

#[test]
fn sign_laws_of_the_minus_identity() {
    for s in ["sl:n=1", "sl:n=2", "su:p=1,q=1", "sp:n=1"] {
        let alg = build(s);
        let g0 = find_minus_identity(&alg).unwrap();
        for (t, sign) in [
            (ComponentType::TORSION_MINUS1, -1),
            (ComponentType::CURVATURE_G0, 1),
            (ComponentType::CURVATURE_G1, 1),
        ] {
            for c in Cochain2::basis_of_type(&alg, t) {
                assert_eq!(
                    g0_action(&alg, g0.representative(), &c).unwrap(),
                    c.scale(&int(sign)),
                    "{s} {t}"
                );
            }
        }
    }
}

#[test]
fn p_plus_only_adds_higher_homogeneity() {
    let alg = build("sl:n=2");
    let mut rng = sample::rng(31);
    assert!(p_plus_action_triviality(
        &alg,
        &alg.zero(),
        &Cochain2::basis_of_type(&alg, ComponentType::TORSION_MINUS1)[0]
    )
    .unwrap());
    for c in Cochain2::basis_of_type(&alg, ComponentType::TORSION_MINUS1)
        .into_iter()
        .take(8)
    {
        let z = random_element(&alg, &[2], &mut rng);
        assert!(p_plus_action_triviality(&alg, &z, &c).unwrap());
    }
    let alg = build("sl:n=1");
    for c in Cochain2::basis_of_type(&alg, ComponentType::CURVATURE_G1) {
        let z = random_element(&alg, &[1], &mut rng);
        assert!(p_plus_action_triviality(&alg, &z, &c).unwrap());
    }
    let bad = random_element(&alg, &[0], &mut rng);
    let c = Cochain2::basis_of_type(&alg, ComponentType::CURVATURE_G1).remove(0);
    assert!(p_plus_action_triviality(&alg, &bad, &c).is_err());
}
