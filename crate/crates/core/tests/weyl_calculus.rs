use contact_symmetry::linalg::CMatrix;
use contact_symmetry::sample::{self, random_element};
use contact_symmetry::scalar::{frac, gi, int, Rational};
use contact_symmetry::weyl::{
    almost_invariant_identity, bullet_action, connection_change_operator, curvature_shaped_tensor,
    grading_element_pairing, levi_pseudometric, pseudometric_gram, signature, soldering_change,
    uniqueness_verdict, FrameChange, GradedVector, Verdict,
};
use contact_symmetry::{Error, GradedContactAlgebra, Side};
use num_traits::{Signed, Zero};

fn build(s: &str) -> GradedContactAlgebra {
    GradedContactAlgebra::build(s.parse().unwrap()).unwrap()
}

fn g1(alg: &GradedContactAlgebra, vals: &[i64]) -> contact_symmetry::AlgebraElement {
    let mut c = vec![Rational::zero(); alg.dim()];
    for (k, v) in alg.degree_range(1).zip(vals) {
        c[k] = int(*v);
    }
    alg.from_coords(&c)
}

#[test]
fn soldering_change_examples() {
    let alg = build("sl:n=1");
    let mut rng = sample::rng(41);
    let x1 = random_element(&alg, &[-1], &mut rng);
    let v = GradedVector::new(&alg, int(3), x1.clone()).unwrap();
    assert_eq!(soldering_change(&alg, &alg.zero(), &v).unwrap(), v);
    let flat = GradedVector::new(&alg, Rational::zero(), x1.clone()).unwrap();
    let u1 = g1(&alg, &[1, 0]);
    assert_eq!(soldering_change(&alg, &u1, &flat).unwrap(), flat);
    let w = GradedVector::new(&alg, int(1), x1.clone()).unwrap();
    let x2 = w.minus2_part(&alg);
    let commutator = u1
        .matrix()
        .mul(x2.matrix())
        .sub(&x2.matrix().mul(u1.matrix()));
    let moved = soldering_change(&alg, &u1, &w).unwrap();
    assert_eq!(moved.x1.matrix(), &x1.matrix().sub(&commutator));
    assert_eq!(soldering_change(&alg, &u1.neg(), &moved).unwrap(), w);
}

#[test]
fn connection_change_examples() {
    let alg = build("sl:n=2");
    let mut rng = sample::rng(42);
    let u1 = random_element(&alg, &[1], &mut rng);
    let u2 = random_element(&alg, &[2], &mut rng);
    let x1 = random_element(&alg, &[-1], &mut rng);
    let v = GradedVector::new(&alg, frac(2, 3), x1.clone()).unwrap();
    let zero = FrameChange::new(&alg, alg.zero(), alg.zero()).unwrap();
    assert!(connection_change_operator(&alg, &zero, &v)
        .unwrap()
        .is_zero());
    let only_u2 = FrameChange::new(&alg, alg.zero(), u2.clone()).unwrap();
    let expected = alg.bracket(&u2, &v.minus2_part(&alg)).unwrap().neg();
    assert_eq!(
        connection_change_operator(&alg, &only_u2, &v).unwrap(),
        expected
    );
    let flat = GradedVector::new(&alg, Rational::zero(), x1.clone()).unwrap();
    let fc = FrameChange::new(&alg, u1.clone(), u2).unwrap();
    assert_eq!(
        connection_change_operator(&alg, &fc, &flat).unwrap(),
        alg.bracket(&u1, &x1).unwrap().neg()
    );
    assert!(FrameChange::new(&alg, x1, alg.zero()).is_err());
}

#[test]
fn grading_element_acts_by_homogeneity() {
    let alg = build("su:p=1,q=1");
    let mut rng = sample::rng(43);
    let e = alg.grading_element();
    for (i, j, k, l) in [(-1, -1, -1, 1), (-1, -1, 0, 2), (-2, -1, 1, 4)] {
        let t = curvature_shaped_tensor(&alg, i, j, k, || sample::small_rational(&mut rng));
        assert_eq!(t.homogeneity(&alg), Some(l));
        assert_eq!(
            bullet_action(&alg, &e, &t).unwrap(),
            t.scale(&int(l as i64))
        );
    }
}

#[test]
fn bullet_action_is_a_derivation() {
    let alg = build("sl:n=1");
    let mut rng = sample::rng(44);
    for _ in 0..10 {
        let a = random_element(&alg, &[-2, -1, 0, 1, 2], &mut rng);
        let s1 = sample::random_slots(&mut rng);
        let s2 = sample::random_slots(&mut rng);
        let t1 = sample::random_homogeneous_tensor(&alg, &s1, 3, &mut rng);
        let t2 = sample::random_homogeneous_tensor(&alg, &s2, 3, &mut rng);
        let lhs = bullet_action(&alg, &a, &t1.tensor(&t2)).unwrap();
        let rhs = bullet_action(&alg, &a, &t1)
            .unwrap()
            .tensor(&t2)
            .add(&t1.tensor(&bullet_action(&alg, &a, &t2).unwrap()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn grading_pairing_scales_inversely() {
    let alg = build("sp:n=1");
    let z2 = alg.basis_element(alg.degree_range(2).start);
    let (x, ok) = grading_element_pairing(&alg, &z2).unwrap();
    assert!(ok);
    let (y, _) = grading_element_pairing(&alg, &z2.scale(&frac(-3, 2))).unwrap();
    assert_eq!(y, x.scale(&frac(-2, 3)));
    assert_eq!(
        grading_element_pairing(&alg, &alg.zero()).unwrap_err(),
        Error::ZeroInput
    );
    assert!(matches!(
        grading_element_pairing(&alg, &alg.grading_element()),
        Err(Error::DegreeMismatch(_))
    ));
}

#[test]
fn almost_invariant_identity_for_sl_and_su() {
    for s in ["sl:n=1", "su:p=1,q=1"] {
        let alg = build(s);
        let mut rng = sample::rng(45);
        for _ in 0..20 {
            let u1 = random_element(&alg, &[1], &mut rng);
            let u2 = random_element(&alg, &[2], &mut rng);
            assert!(almost_invariant_identity(&alg, &u1, &u2).unwrap(), "{s}");
        }
    }
}

#[test]
fn pseudometric_isotropy_and_definiteness() {
    let alg = build("sl:n=2");
    let l: Vec<usize> = alg
        .degree_range(-1)
        .filter(|&k| alg.basis()[k].side == Some(Side::L))
        .collect();
    for &a in &l {
        for &b in &l {
            assert!(
                levi_pseudometric(&alg, &alg.basis_element(a), &alg.basis_element(b))
                    .unwrap()
                    .is_zero()
            );
        }
    }
    assert_eq!(signature(&pseudometric_gram(&alg).unwrap()), (2, 2));
    let alg = build("su:p=2,q=0");
    let mut rng = sample::rng(46);
    for _ in 0..20 {
        let xi = sample::random_nonzero_element(&alg, &[-1], &mut rng);
        assert!(levi_pseudometric(&alg, &xi, &xi).unwrap().is_positive());
    }
    let sp = build("sp:n=1");
    assert!(matches!(
        levi_pseudometric(&sp, &sp.zero(), &sp.zero()),
        Err(Error::UnsupportedFamily(_))
    ));
}

#[test]
fn verdicts_match_the_coefficient() {
    let alg = build("sl:n=1");
    let mut rng = sample::rng(47);
    for _ in 0..100 {
        let u1 = random_element(&alg, &[1], &mut rng);
        let v = uniqueness_verdict(&alg, &u1).unwrap();
        assert!(v.criteria_agree);
        assert_eq!(v.verdict == Verdict::Obstructed, !v.coefficient.is_zero());
    }
    assert_eq!(
        uniqueness_verdict(&alg, &g1(&alg, &[2, 0]))
            .unwrap()
            .verdict,
        Verdict::Undecided
    );
    let su = build("su:p=1,q=0");
    let mut m = CMatrix::zeros(3, 3);
    m[(0, 1)] = gi(0, 2);
    m[(1, 2)] = -(gi(0, 2).conj());
    let u1 = su.element(m).unwrap();
    assert_eq!(
        uniqueness_verdict(&su, &u1).unwrap().verdict,
        Verdict::Obstructed
    );
    let so = build("so:p=1,q=1");
    assert!(matches!(
        uniqueness_verdict(&so, &so.zero()),
        Err(Error::UnsupportedFamily(_))
    ));
}
