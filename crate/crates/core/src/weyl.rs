//! Pointwise Weyl-structure calculus: soldering changes, the connection change
//! operator, the algebraic bullet action on tensors, grading-section identities
//! and the pairings that obstruct two distinct involutive symmetries.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Family, GradedContactAlgebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, QMatrix};
use crate::scalar::{frac, imag_unit, int, re, Gaussian, Rational};

/// Image `(ξ₋₂, ξ₋₁)` of a tangent vector: a `g₋₂` coefficient and a `g₋₁` element.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedVector {
    pub x2: Rational,
    pub x1: AlgebraElement,
}

impl GradedVector {
    pub fn new(alg: &GradedContactAlgebra, x2: Rational, x1: AlgebraElement) -> Result<Self> {
        alg.expect_degree(&x1, -1)?;
        Ok(Self { x2, x1 })
    }

    /// `ξ₋₂` as an algebra element.
    pub fn minus2_part(&self, alg: &GradedContactAlgebra) -> AlgebraElement {
        alg.basis_element(alg.degree_range(-2).start)
            .scale(&self.x2)
    }
}

/// The difference `(𝒰₁, 𝒰₂) ∈ g₁ × g₂` of two Weyl structures at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameChange {
    pub u1: AlgebraElement,
    pub u2: AlgebraElement,
}

impl FrameChange {
    pub fn new(alg: &GradedContactAlgebra, u1: AlgebraElement, u2: AlgebraElement) -> Result<Self> {
        alg.expect_degree(&u1, 1)?;
        alg.expect_degree(&u2, 2)?;
        Ok(Self { u1, u2 })
    }
}

/// `(ξ₋₂, ξ₋₁) ↦ (ξ₋₂, ξ₋₁ − [U₁, ξ₋₂])`.
pub fn soldering_change(
    alg: &GradedContactAlgebra,
    u1: &AlgebraElement,
    v: &GradedVector,
) -> Result<GradedVector> {
    alg.expect_degree(u1, 1)?;
    let shift = alg.bracket(u1, &v.minus2_part(alg))?;
    Ok(GradedVector {
        x2: v.x2.clone(),
        x1: v.x1.sub(&shift),
    })
}

/// `½[U₁,[U₁,ξ₋₂]] − [U₂,ξ₋₂] − [U₁,ξ₋₁]`.
pub fn connection_change_operator(
    alg: &GradedContactAlgebra,
    fc: &FrameChange,
    v: &GradedVector,
) -> Result<AlgebraElement> {
    let x2 = v.minus2_part(alg);
    let a = alg
        .bracket(&fc.u1, &alg.bracket(&fc.u1, &x2)?)?
        .scale(&frac(1, 2));
    let b = alg.bracket(&fc.u2, &x2)?;
    let c = alg.bracket(&fc.u1, &v.x1)?;
    Ok(a.sub(&b).sub(&c))
}

/// The frame correction `−½U₁` producing an almost invariant Weyl structure.
pub fn almost_invariant_correction(
    alg: &GradedContactAlgebra,
    u1: &AlgebraElement,
) -> Result<AlgebraElement> {
    alg.expect_degree(u1, 1)?;
    Ok(u1.scale(&frac(-1, 2)))
}

/// Checks `exp(U₁)·exp(U₂)·exp(−½U₁) = exp(½U₁)·exp(U₂)` as matrices.
pub fn almost_invariant_identity(
    alg: &GradedContactAlgebra,
    u1: &AlgebraElement,
    u2: &AlgebraElement,
) -> Result<bool> {
    alg.expect_degree(u2, 2)?;
    let c = almost_invariant_correction(alg, u1)?;
    let lhs = alg
        .exp_nilpotent(u1)?
        .mul(&alg.exp_nilpotent(u2)?)
        .mul(&alg.exp_nilpotent(&c)?);
    let rhs = alg
        .exp_nilpotent(&u1.scale(&frac(1, 2)))?
        .mul(&alg.exp_nilpotent(u2)?);
    Ok(lhs.matrix() == rhs.matrix())
}

/// `X ∈ g₋₂` with `[Z₂, X] = E`, and whether the bracket was confirmed.
pub fn grading_element_pairing(
    alg: &GradedContactAlgebra,
    z2: &AlgebraElement,
) -> Result<(AlgebraElement, bool)> {
    alg.expect_degree(z2, 2)?;
    if z2.is_zero() {
        return Err(Error::ZeroInput);
    }
    let x = alg.basis_element(alg.degree_range(-2).start);
    let br = alg.bracket(z2, &x)?;
    let e = alg.grading_element();
    let mu = (br.matrix()[(0, 0)].clone() / e.matrix()[(0, 0)].clone()).re;
    if mu.is_zero() {
        return Err(Error::ConstructionFailure(
            "[g2, g-2] does not reach E".into(),
        ));
    }
    let x = x.scale(&(Rational::one() / mu));
    let check = alg.bracket(z2, &x)? == e;
    Ok((x, check))
}

/// Whether a tensor slot is a copy of `g` or of `g*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    Vector,
    Covector,
}

/// An element of `⊗ (g or g*)`, coefficients keyed by basis indices per slot
/// (dual basis indices on covector slots).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedTensor {
    pub slots: Vec<Slot>,
    pub coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl GradedTensor {
    pub fn zero(slots: Vec<Slot>) -> Self {
        Self {
            slots,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: Rational) {
        assert_eq!(key.len(), self.slots.len());
        if c.is_zero() {
            return;
        }
        let sum = self
            .coeffs
            .get(&key)
            .cloned()
            .unwrap_or_else(Rational::zero)
            + c;
        if sum.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.slots.clone());
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.slots, other.slots);
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut slots = self.slots.clone();
        slots.extend(other.slots.iter().copied());
        let mut out = Self::zero(slots);
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                let mut k = k1.clone();
                k.extend(k2.iter().copied());
                out.add_term(k, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Homogeneity of one component: vector degrees minus covector degrees.
    pub fn component_homogeneity(&self, alg: &GradedContactAlgebra, key: &[usize]) -> i32 {
        key.iter()
            .zip(&self.slots)
            .map(|(&k, s)| match s {
                Slot::Vector => alg.degree_of(k),
                Slot::Covector => -alg.degree_of(k),
            })
            .sum()
    }

    /// The common homogeneity of all components, if there is one.
    pub fn homogeneity(&self, alg: &GradedContactAlgebra) -> Option<i32> {
        let mut it = self
            .coeffs
            .keys()
            .map(|k| self.component_homogeneity(alg, k));
        let first = it.next()?;
        it.all(|h| h == first).then_some(first)
    }
}

/// `A • t`: the bracket on vector slots and `−ad(A)ᵀ` on covector slots,
/// extended as a derivation.
pub fn bullet_action(
    alg: &GradedContactAlgebra,
    a: &AlgebraElement,
    t: &GradedTensor,
) -> Result<GradedTensor> {
    let ad = ad_matrix(alg, a)?;
    let d = alg.dim();
    let mut out = GradedTensor::zero(t.slots.clone());
    for (key, c) in &t.coeffs {
        for (pos, slot) in t.slots.iter().enumerate() {
            let i = key[pos];
            match slot {
                Slot::Vector => {
                    for k in 0..d {
                        if !ad[(k, i)].is_zero() {
                            let mut nk = key.clone();
                            nk[pos] = k;
                            out.add_term(nk, c.clone() * ad[(k, i)].clone());
                        }
                    }
                }
                Slot::Covector => {
                    for j in 0..d {
                        if !ad[(i, j)].is_zero() {
                            let mut nk = key.clone();
                            nk[pos] = j;
                            out.add_term(nk, -(c.clone() * ad[(i, j)].clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Matrix of `ad(A)` in the basis.
pub fn ad_matrix(alg: &GradedContactAlgebra, a: &AlgebraElement) -> Result<QMatrix> {
    let ca = alg.coords(a)?;
    let d = alg.dim();
    let sc = alg.structure_constants();
    let mut m = QMatrix::zeros(d, d);
    for (x, cx) in ca.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        for i in 0..d {
            for (k, c) in &sc[x][i] {
                m[(*k, i)] += cx.clone() * c.clone();
            }
        }
    }
    Ok(m)
}

/// Tensors of the shapes `W ∈ Λ²g₋₁* ⊗ g₀` (homogeneity 2) and
/// `Y ∈ g₋₂* ∧ g₋₁* ⊗ g₁` (homogeneity 4), alternating in the covector slots.
pub fn curvature_shaped_tensor(
    alg: &GradedContactAlgebra,
    first_arg: i32,
    second_arg: i32,
    value: i32,
    mut coeff: impl FnMut() -> Rational,
) -> GradedTensor {
    let slots = vec![Slot::Covector, Slot::Covector, Slot::Vector];
    let mut t = GradedTensor::zero(slots);
    for a in alg.degree_range(first_arg) {
        for b in alg.degree_range(second_arg) {
            if first_arg == second_arg && b <= a {
                continue;
            }
            for v in alg.degree_range(value) {
                let c = coeff();
                t.add_term(vec![a, b, v], c.clone());
                t.add_term(vec![b, a, v], -c);
            }
        }
    }
    t
}

/// Matrix of the `J` operator on `g₋₁` in the basis: `+1` on `L`, `−1` on `R`
/// for SL, multiplication by `i` for SU.
pub fn j_operator(alg: &GradedContactAlgebra) -> Result<QMatrix> {
    let m1 = alg.degree_range(-1);
    let mut out = QMatrix::zeros(m1.len(), m1.len());
    match alg.spec().family() {
        Family::Sl => {
            for (j, k) in m1.clone().enumerate() {
                out[(j, j)] = match alg.basis()[k].side {
                    Some(Side::L) => int(1),
                    _ => int(-1),
                };
            }
        }
        Family::Su => {
            for (j, k) in m1.clone().enumerate() {
                let x = &alg.basis()[k].matrix;
                let n = x.rows();
                let image = j_matrix_su(x, n);
                let c = alg.try_coords(&image)?;
                for (i, kk) in m1.clone().enumerate() {
                    out[(i, j)] = c[kk].clone();
                }
            }
        }
        f => return Err(Error::UnsupportedFamily(f.to_string())),
    }
    Ok(out)
}

/// `i` on the column block, `−i` on the row block of a `g₋₁` matrix.
fn j_matrix_su(x: &CMatrix, n: usize) -> CMatrix {
    let mut y = x.clone();
    for k in 1..n - 1 {
        y[(k, 0)] = x[(k, 0)].clone() * imag_unit();
        y[(n - 1, k)] = x[(n - 1, k)].clone() * -imag_unit();
    }
    y
}

/// Gram matrix of `g(ξ, η)` = `g₋₂` coefficient of `[Jξ, η]` on the `g₋₁` basis.
pub fn pseudometric_gram(alg: &GradedContactAlgebra) -> Result<QMatrix> {
    let j = j_operator(alg)?;
    let levi = alg.g_minus1_gram();
    Ok(j.transpose().mul(&levi))
}

/// `g(ξ, η)`: the `g₋₂` coefficient of `[Jξ, η]`.
pub fn levi_pseudometric(
    alg: &GradedContactAlgebra,
    xi: &AlgebraElement,
    eta: &AlgebraElement,
) -> Result<Rational> {
    alg.expect_degree(xi, -1)?;
    alg.expect_degree(eta, -1)?;
    let g = pseudometric_gram(alg)?;
    let m1 = alg.degree_range(-1);
    let (cx, cy) = (alg.coords(xi)?, alg.coords(eta)?);
    let (x, y) = (&cx[m1.clone()], &cy[m1]);
    let mut acc = Rational::zero();
    for i in 0..x.len() {
        for k in 0..y.len() {
            if !x[i].is_zero() && !y[k].is_zero() {
                acc += x[i].clone() * g[(i, k)].clone() * y[k].clone();
            }
        }
    }
    Ok(acc)
}

/// Numbers of positive and negative eigenvalues of a symmetric rational matrix,
/// by exact symmetric Gaussian elimination.
pub fn signature(m: &QMatrix) -> (usize, usize) {
    let mut a = m.clone();
    let n = a.rows();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if let Some(&p) = active.iter().find(|&&i| !a[(i, i)].is_zero()) {
            let piv = a[(p, p)].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                let f = a[(i, p)].clone() / piv.clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(p, j)].clone();
                }
            }
        } else {
            // zero diagonal: combine with an off-diagonal partner to create a pivot
            let pair = active.iter().find_map(|&i| {
                active
                    .iter()
                    .find(|&&j| !a[(i, j)].is_zero())
                    .map(|&j| (i, j))
            });
            let Some((i, j)) = pair else {
                break;
            };
            for &k in &active {
                a[(i, k)] = a[(i, k)].clone() + a[(j, k)].clone();
            }
            for &k in &active {
                a[(k, i)] = a[(k, i)].clone() + a[(k, j)].clone();
            }
        }
    }
    (pos, neg)
}

/// The companion `X ∈ g₋₁` of `U₁` and the scalar `c` with `[X, U₁] = c·E`.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionPairing {
    pub x: AlgebraElement,
    pub coefficient: Rational,
    /// Whether `[X, U₁]` equals `coefficient·E` exactly.
    pub bracket_matches: bool,
}

/// SL: for `U₁ = (0,S,0; 0,0,T; 0,0,0)`, `X = (0,0,0; T,0,0; 0,S,0)` and `c = −S·T`.
/// SU: for `U₁ = (0,R,0; 0,0,−𝕀R*; 0,0,0)`, `X = (0,0,0; 𝕀R*,0,0; 0,−R,0)` and `c = −R𝕀R*`.
pub fn obstruction_pairing(
    alg: &GradedContactAlgebra,
    u1: &AlgebraElement,
) -> Result<ObstructionPairing> {
    alg.expect_degree(u1, 1)?;
    let n = alg.matrix_size();
    let z = u1.matrix();
    let mut x = CMatrix::zeros(n, n);
    let coefficient = match alg.spec().family() {
        Family::Sl => {
            let mut st = Rational::zero();
            for k in 1..n - 1 {
                let (s, t) = (z[(0, k)].clone(), z[(k, n - 1)].clone());
                x[(k, 0)] = t.clone();
                x[(n - 1, k)] = s.clone();
                st += s.re * t.re;
            }
            -st
        }
        Family::Su => {
            let sig = alg.spec().signature();
            let mut norm = Gaussian::zero();
            for k in 1..n - 1 {
                let r = z[(0, k)].clone();
                let s = re(int(sig[k - 1]));
                x[(k, 0)] = s.clone() * r.conj();
                x[(n - 1, k)] = -r.clone();
                norm += r.clone() * s * r.conj();
            }
            -norm.re
        }
        f => return Err(Error::UnsupportedFamily(f.to_string())),
    };
    let x = alg.element(x)?;
    let br = alg.bracket(&x, u1)?;
    let bracket_matches = br == alg.grading_element().scale(&coefficient);
    Ok(ObstructionPairing {
        x,
        coefficient,
        bracket_matches,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Obstructed,
    Undecided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniquenessVerdict {
    pub verdict: Verdict,
    pub coefficient: Rational,
    /// SL: `g(U₁ᴿ, U₁ᴸ)`; SU: `g(U₁, U₁)`, with `U₁` transported to `g₋₁` by the
    /// trace pairing and the pseudometric.
    pub pseudometric_value: Rational,
    pub criteria_agree: bool,
}

/// `g₋₁` vector `ξ` with `g(ξ, η) = tr(ω η)` for all `η ∈ g₋₁`.
fn metric_sharp(
    alg: &GradedContactAlgebra,
    omega: &AlgebraElement,
    gram: &QMatrix,
) -> Result<Vec<Rational>> {
    let m1 = alg.degree_range(-1);
    let rhs: Vec<Rational> = m1
        .clone()
        .map(|k| alg.trace_pairing(omega, &alg.basis_element(k)))
        .collect::<Result<_>>()?;
    // g(ξ, η) = ξᵀ G η, so Gᵀ ξ = rhs
    let inv = gram
        .transpose()
        .inverse()
        .ok_or_else(|| Error::ConstructionFailure("degenerate pseudometric".into()))?;
    Ok(inv.mul_vec(&rhs))
}

fn quadratic(g: &QMatrix, x: &[Rational], y: &[Rational]) -> Rational {
    let gy = g.mul_vec(y);
    crate::linalg::dot(x, &gy)
}

/// OBSTRUCTED iff the obstruction coefficient is nonzero; cross-checked against
/// the pseudometric criterion.
pub fn uniqueness_verdict(
    alg: &GradedContactAlgebra,
    u1: &AlgebraElement,
) -> Result<UniquenessVerdict> {
    let pairing = obstruction_pairing(alg, u1)?;
    let gram = pseudometric_gram(alg)?;
    let pseudometric_value = match alg.spec().family() {
        Family::Sl => {
            let g1 = alg.degree_range(1);
            let c = alg.coords(u1)?;
            let part = |side: Side| {
                let mut cc = vec![Rational::zero(); alg.dim()];
                for k in g1.clone() {
                    if alg.basis()[k].side == Some(side) {
                        cc[k] = c[k].clone();
                    }
                }
                alg.from_coords(&cc)
            };
            let r = metric_sharp(alg, &part(Side::R), &gram)?;
            let l = metric_sharp(alg, &part(Side::L), &gram)?;
            quadratic(&gram, &r, &l)
        }
        _ => {
            let s = metric_sharp(alg, u1, &gram)?;
            quadratic(&gram, &s, &s)
        }
    };
    let verdict = if pairing.coefficient.is_zero() {
        Verdict::Undecided
    } else {
        Verdict::Obstructed
    };
    let criteria_agree =
        pairing.bracket_matches && pairing.coefficient.is_zero() == pseudometric_value.is_zero();
    Ok(UniquenessVerdict {
        verdict,
        coefficient: pairing.coefficient,
        pseudometric_value,
        criteria_agree,
    })
}
