//! Seeded random sampling of small exact values.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::algebra::{AlgebraElement, GradedContactAlgebra};
use crate::group::GroupElement;
use crate::linalg::CMatrix;
use crate::scalar::{frac, Rational};
use crate::weyl::{GradedTensor, Slot};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/b` with `|a| ≤ 5`, `1 ≤ b ≤ 3`.
pub fn small_rational(rng: &mut SampleRng) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_small_rational(rng: &mut SampleRng) -> Rational {
    loop {
        let q = small_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random element of the given degrees with small rational coordinates.
pub fn random_element(
    alg: &GradedContactAlgebra,
    degrees: &[i32],
    rng: &mut SampleRng,
) -> AlgebraElement {
    let mut c = vec![Rational::zero(); alg.dim()];
    for &d in degrees {
        for k in alg.degree_range(d) {
            c[k] = small_rational(rng);
        }
    }
    alg.from_coords(&c)
}

pub fn random_nonzero_element(
    alg: &GradedContactAlgebra,
    degrees: &[i32],
    rng: &mut SampleRng,
) -> AlgebraElement {
    loop {
        let x = random_element(alg, degrees, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random grading-preserving group element: the Cayley transform
/// `(1 − A)⁻¹(1 + A)` of a random `A ∈ g₀`.
pub fn random_g0(alg: &GradedContactAlgebra, rng: &mut SampleRng) -> GroupElement {
    let n = alg.matrix_size();
    loop {
        let a = random_element(alg, &[0], rng);
        let id = CMatrix::identity(n);
        let Some(inv) = id.sub(a.matrix()).inverse() else {
            continue;
        };
        let m = inv.mul(&id.add(a.matrix()));
        if let Ok(g) = alg.group_element(m) {
            return g;
        }
    }
}

/// Random element of `P`: `g₀·exp Z₁·exp Z₂` with random parts.
pub fn random_parabolic(alg: &GradedContactAlgebra, rng: &mut SampleRng) -> GroupElement {
    let g0 = random_g0(alg, rng);
    let z1 = random_element(alg, &[1], rng);
    let z2 = random_element(alg, &[2], rng);
    alg.assemble(&g0, &z1, &z2)
        .expect("sampled parts have the right degrees")
}

/// Random element of `G` built as a product of exponentials of `g₋` and `p₊`
/// parts with a grading-preserving factor.
pub fn random_group_element(alg: &GradedContactAlgebra, rng: &mut SampleRng) -> GroupElement {
    let lower = random_element(alg, &[-2, -1], rng);
    let l = alg.exp_nilpotent(&lower).expect("g- element");
    random_parabolic(alg, rng).mul(&l)
}

/// Random tensor with the given slots whose components all share one homogeneity.
pub fn random_homogeneous_tensor(
    alg: &GradedContactAlgebra,
    slots: &[Slot],
    terms: usize,
    rng: &mut SampleRng,
) -> GradedTensor {
    let d = alg.dim();
    let mut t = GradedTensor::zero(slots.to_vec());
    let key: Vec<usize> = slots.iter().map(|_| rng.gen_range(0..d)).collect();
    let target = t.component_homogeneity(alg, &key);
    t.add_term(key, nonzero_small_rational(rng));
    let mut attempts = 0;
    while t.coeffs.len() < terms && attempts < 50 * terms {
        attempts += 1;
        let key: Vec<usize> = slots.iter().map(|_| rng.gen_range(0..d)).collect();
        if t.component_homogeneity(alg, &key) == target && !t.coeffs.contains_key(&key) {
            t.add_term(key, nonzero_small_rational(rng));
        }
    }
    t
}

/// Random slot pattern of length 1 to 3.
pub fn random_slots(rng: &mut SampleRng) -> Vec<Slot> {
    let len = rng.gen_range(1..=3);
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Slot::Vector
            } else {
                Slot::Covector
            }
        })
        .collect()
}
