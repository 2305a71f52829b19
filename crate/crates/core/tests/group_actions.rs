use contact_symmetry::sample::{self, random_element, random_g0};
use contact_symmetry::scalar::{frac, int, Rational};
use contact_symmetry::{AlgebraElement, GradedContactAlgebra, QuotientVector};
use num_traits::Zero;

fn build(s: &str) -> GradedContactAlgebra {
    GradedContactAlgebra::build(s.parse().unwrap()).unwrap()
}

/// `Σ ad_Zʲ(X)/j!` by repeated brackets.
fn bracket_series(
    alg: &GradedContactAlgebra,
    z: &AlgebraElement,
    x: &AlgebraElement,
) -> AlgebraElement {
    let mut term = x.clone();
    let mut sum = x.clone();
    for j in 1..=5 {
        term = alg.bracket(z, &term).unwrap().scale(&frac(1, j));
        sum = sum.add(&term);
    }
    sum
}

#[test]
fn adjoint_matches_the_bracket_series() {
    for s in ["sl:n=1", "su:p=1,q=1", "sp:n=1"] {
        let alg = build(s);
        let mut rng = sample::rng(21);
        for _ in 0..10 {
            let z = random_element(&alg, &[1, 2], &mut rng);
            let x = random_element(&alg, &[-2, -1, 0, 1, 2], &mut rng);
            let g = alg.exp_nilpotent(&z).unwrap();
            assert_eq!(
                alg.adjoint(&g, &x).unwrap(),
                bracket_series(&alg, &z, &x),
                "{s}"
            );
        }
    }
}

#[test]
fn p_plus_moves_g_minus1_into_p() {
    let alg = build("sl:n=2");
    let mut rng = sample::rng(22);
    for _ in 0..10 {
        let z = random_element(&alg, &[1, 2], &mut rng);
        let x = random_element(&alg, &[-1], &mut rng);
        let moved = alg
            .adjoint(&alg.exp_nilpotent(&z).unwrap(), &x)
            .unwrap()
            .sub(&x);
        let parts = alg.grade_decompose(&moved).unwrap();
        assert!(parts.keys().all(|&d| d >= 0));
    }
}

#[test]
fn exp_of_g1_and_g2_commute() {
    let alg = build("su:p=1,q=1");
    let mut rng = sample::rng(23);
    for _ in 0..10 {
        let z1 = random_element(&alg, &[1], &mut rng);
        let z2 = random_element(&alg, &[2], &mut rng);
        let a = alg
            .exp_nilpotent(&z1)
            .unwrap()
            .mul(&alg.exp_nilpotent(&z2).unwrap());
        let b = alg
            .exp_nilpotent(&z2)
            .unwrap()
            .mul(&alg.exp_nilpotent(&z1).unwrap());
        let c = alg.exp_nilpotent(&z1.add(&z2)).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        assert_eq!(a.matrix(), c.matrix());
    }
}

#[test]
fn underline_adjoint_examples() {
    let alg = build("sl:n=1");
    let mut rng = sample::rng(24);
    let v = QuotientVector {
        x2: Rational::zero(),
        x1: vec![int(2), frac(-1, 3)],
    };
    assert_eq!(alg.underline_adjoint(&alg.identity(), &v).unwrap(), v);
    let z = random_element(&alg, &[1, 2], &mut rng);
    let g = alg.exp_nilpotent(&z).unwrap();
    assert_eq!(alg.underline_adjoint(&g, &v).unwrap(), v);
    // a g-2 class picks up -[Z1, X-2] in g-1
    let z1 = random_element(&alg, &[1], &mut rng);
    let g = alg.exp_nilpotent(&z1).unwrap();
    let w = QuotientVector {
        x2: int(1),
        x1: vec![Rational::zero(); 2],
    };
    let x2 = alg.lift(&w).unwrap();
    let shift = alg.project(&alg.bracket(&z1, &x2).unwrap()).unwrap();
    let got = alg.underline_adjoint(&g, &w).unwrap();
    assert_eq!(got.x2, int(1));
    assert_eq!(got.x1, shift.x1);
}

#[test]
fn factorization_round_trip() {
    for s in ["sl:n=2", "su:p=2,q=0", "sp:n=1", "so:p=1,q=1"] {
        let alg = build(s);
        let mut rng = sample::rng(25);
        for _ in 0..5 {
            let g0 = random_g0(&alg, &mut rng);
            let z1 = random_element(&alg, &[1], &mut rng);
            let z2 = random_element(&alg, &[2], &mut rng);
            let g = alg.assemble(&g0, &z1, &z2).unwrap();
            let (h0, w1, w2) = alg.factorize_parabolic(&g).unwrap();
            assert_eq!(h0.matrix(), g0.matrix(), "{s}");
            assert_eq!(w1, z1);
            assert_eq!(w2, z2);
        }
    }
}

#[test]
fn g_minus_elements_are_not_parabolic() {
    let alg = build("sl:n=1");
    let mut rng = sample::rng(26);
    let x = sample::random_nonzero_element(&alg, &[-1], &mut rng);
    let g = alg.exp_nilpotent(&x).unwrap();
    assert!(alg.factorize_parabolic(&g).is_err());
    assert!(!alg.preserves_filtration(&g).unwrap());
}
