//! The `p₊`-homology complex `Λᵏp₊ ⊗ g`, its harmonic part, and alternating
//! 2-cochains on `g/p` with their `P`-action.
//!
//! Chains of degree `k` are spanned by `x_{a₁}∧…∧x_{a_k} ⊗ v` with `x_a` running
//! over the basis of `p₊ = g₁ ⊕ g₂` and `v` over the basis of `g`. Via the trace
//! pairing `p₊ ≅ (g/p)*`, so a 2-chain `x_a∧x_b⊗v` with `x_a ∈ g_i`, `x_b ∈ g_j`,
//! `v ∈ g_k` corresponds to a cochain `g₋ᵢ × g₋ⱼ → g_k` of homogeneity `i+j+k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::GradedContactAlgebra;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{Matrix, QMatrix};
use crate::scalar::{int, Rational};

/// Degrees of a tri-graded component: arguments in `g₋ᵢ × g₋ⱼ` (`i ≥ j`) and
/// values in `g_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentType {
    pub args: (i32, i32),
    pub value: i32,
}

impl ComponentType {
    pub fn new(i: i32, j: i32, value: i32) -> Self {
        Self {
            args: (i.max(j), i.min(j)),
            value,
        }
    }

    pub fn homogeneity(&self) -> i32 {
        self.args.0 + self.args.1 + self.value
    }

    /// `g₋₁ × g₋₁ → g₋₁`, homogeneity 1.
    pub const TORSION_MINUS1: ComponentType = ComponentType {
        args: (1, 1),
        value: -1,
    };
    /// `g₋₁ × g₋₁ → g₀`, homogeneity 2.
    pub const CURVATURE_G0: ComponentType = ComponentType {
        args: (1, 1),
        value: 0,
    };
    /// `g₋₂ × g₋₁ → g₁`, homogeneity 4.
    pub const CURVATURE_G1: ComponentType = ComponentType {
        args: (2, 1),
        value: 1,
    };
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g-{} x g-{} -> g{}",
            self.args.0, self.args.1, self.value
        )
    }
}

/// Overall sign of the boundary operator. Kernels and images do not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BoundarySign {
    #[default]
    Standard,
    Negated,
}

/// A chain `Σ c · x_{a₁}∧…∧x_{a_k} ⊗ v` keyed by (sorted local `p₊` indices, basis index of `v`).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: BTreeMap<(Vec<usize>, usize), Rational>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis chain; the wedge factors may be given in any order.
    pub fn basis(degree: usize, wedge: &[usize], value: usize) -> Self {
        let mut c = Self::zero(degree);
        if let Some((sign, sorted)) = sort_wedge(wedge.to_vec()) {
            c.add_term(sorted, value, int(sign));
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, wedge: Vec<usize>, value: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (wedge, value);
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
}

/// Sorts wedge factors, returning the permutation sign, or `None` if a factor repeats.
fn sort_wedge(mut w: Vec<usize>) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            } else if w[j] == w[j + 1] {
                return None;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((sign, w))
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// The chain complex `Λᵏp₊ ⊗ g` of an algebra.
pub struct ChainComplex<'a> {
    alg: &'a GradedContactAlgebra,
    pplus: Vec<usize>,
    local: BTreeMap<usize, usize>,
    sign: BoundarySign,
}

impl<'a> ChainComplex<'a> {
    pub fn new(alg: &'a GradedContactAlgebra) -> Self {
        Self::with_sign(alg, BoundarySign::Standard)
    }

    pub fn with_sign(alg: &'a GradedContactAlgebra, sign: BoundarySign) -> Self {
        let pplus: Vec<usize> = alg.degree_range(1).chain(alg.degree_range(2)).collect();
        let local = pplus.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        Self {
            alg,
            pplus,
            local,
            sign,
        }
    }

    /// Global basis indices of the `p₊` basis, in local order.
    pub fn pplus(&self) -> &[usize] {
        &self.pplus
    }

    /// Basis of the degree-`k` chains.
    pub fn chain_basis(&self, k: usize) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        for s in subsets(self.pplus.len(), k) {
            for v in 0..self.alg.dim() {
                out.push((s.clone(), v));
            }
        }
        out
    }

    /// Homogeneity of a basis chain: sum of all degrees.
    pub fn homogeneity(&self, wedge: &[usize], value: usize) -> i32 {
        wedge
            .iter()
            .map(|&l| self.alg.degree_of(self.pplus[l]))
            .sum::<i32>()
            + self.alg.degree_of(value)
    }

    /// Component type of a basis 2-chain.
    pub fn type_of(&self, wedge: &[usize], value: usize) -> ComponentType {
        let d = |l: usize| self.alg.degree_of(self.pplus[l]);
        ComponentType::new(d(wedge[0]), d(wedge[1]), self.alg.degree_of(value))
    }

    /// `∂(x₁∧…∧x_k⊗m) = Σᵢ (−1)ⁱ x₁∧…x̂ᵢ…∧x_k ⊗ [xᵢ,m] + Σ_{i<j} (−1)^{i+j} [xᵢ,xⱼ]∧x₁∧…x̂ᵢ…x̂ⱼ…∧x_k ⊗ m`
    /// with 1-based `i, j`.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        if !(1..=3).contains(&c.degree) {
            return Err(Error::DegreeMismatch(format!(
                "boundary is defined on chains of degree 1..3, got {}",
                c.degree
            )));
        }
        let mut out = Chain::zero(c.degree - 1);
        for ((wedge, v), coeff) in &c.coeffs {
            for (key, val) in self.boundary_of_basis(wedge, *v) {
                out.add_term(key.0, key.1, val * coeff.clone());
            }
        }
        Ok(out)
    }

    fn boundary_of_basis(&self, wedge: &[usize], v: usize) -> Vec<((Vec<usize>, usize), Rational)> {
        let sc = self.alg.structure_constants();
        let overall = match self.sign {
            BoundarySign::Standard => int(1),
            BoundarySign::Negated => int(-1),
        };
        let k = wedge.len();
        let mut terms = Vec::new();
        for i in 0..k {
            // 1-based index i+1
            let sign = if (i + 1) % 2 == 0 { int(1) } else { int(-1) };
            let rest: Vec<usize> = wedge
                .iter()
                .enumerate()
                .filter(|(t, _)| *t != i)
                .map(|(_, &x)| x)
                .collect();
            for (w, c) in &sc[self.pplus[wedge[i]]][v] {
                terms.push((
                    (rest.clone(), *w),
                    sign.clone() * c.clone() * overall.clone(),
                ));
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let sign = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
                let rest: Vec<usize> = wedge
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != i && *t != j)
                    .map(|(_, &x)| x)
                    .collect();
                for (w, c) in &sc[self.pplus[wedge[i]]][self.pplus[wedge[j]]] {
                    let lw = *self.local.get(w).expect("bracket of p+ stays in p+");
                    let mut new = vec![lw];
                    new.extend(rest.iter().copied());
                    if let Some((s, sorted)) = sort_wedge(new) {
                        terms.push((
                            (sorted, v),
                            sign.clone() * c.clone() * int(s) * overall.clone(),
                        ));
                    }
                }
            }
        }
        terms
    }

    /// Matrix of `∂: C_k → C_{k−1}` between the given bases.
    fn boundary_matrix(
        &self,
        cols: &[(Vec<usize>, usize)],
        rows: &[(Vec<usize>, usize)],
    ) -> QMatrix {
        let index: BTreeMap<&(Vec<usize>, usize), usize> =
            rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut m = QMatrix::zeros(rows.len(), cols.len());
        for (j, (wedge, v)) in cols.iter().enumerate() {
            for (key, val) in self.boundary_of_basis(wedge, *v) {
                let i = *index.get(&key).expect("boundary preserves homogeneity");
                m[(i, j)] += val;
            }
        }
        m
    }

    /// Inner product of two basis 2-chains induced by the Frobenius form.
    fn gram2(&self, a: &(Vec<usize>, usize), b: &(Vec<usize>, usize)) -> Rational {
        let f = self.alg.frobenius_form();
        let p = |x: usize, y: usize| f[(self.pplus[x], self.pplus[y])].clone();
        let (w1, v1) = a;
        let (w2, v2) = b;
        let fv = f[(*v1, *v2)].clone();
        if fv.is_zero() {
            return Rational::zero();
        }
        (p(w1[0], w2[0]) * p(w1[1], w2[1]) - p(w1[0], w2[1]) * p(w1[1], w2[0])) * fv
    }

    fn blocks(&self, k: usize) -> BTreeMap<i32, Vec<(Vec<usize>, usize)>> {
        let mut out: BTreeMap<i32, Vec<_>> = BTreeMap::new();
        for b in self.chain_basis(k) {
            out.entry(self.homogeneity(&b.0, b.1)).or_default().push(b);
        }
        out
    }

    /// Checks `∂∘∂ = 0` on every basis 3-chain.
    pub fn boundary_squared_vanishes(&self) -> bool {
        let c3 = self.blocks(3);
        let c2 = self.blocks(2);
        let c1 = self.blocks(1);
        c3.par_iter().all(|(l, cols)| {
            let empty = Vec::new();
            let mid = c2.get(l).unwrap_or(&empty);
            let low = c1.get(l).unwrap_or(&empty);
            let d3 = self.boundary_matrix(cols, mid);
            let d2 = self.boundary_matrix(mid, low);
            d2.mul(&d3).is_zero()
        })
    }

    /// Harmonic part of the second homology, split by homogeneity and type.
    pub fn harmonic_space(&self) -> HarmonicReport {
        let c1 = self.blocks(1);
        let c2 = self.blocks(2);
        let c3 = self.blocks(3);
        let empty = Vec::new();
        let per_block: Vec<BlockResult> = c2
            .par_iter()
            .map(|(&l, mid)| {
                let low = c1.get(&l).unwrap_or(&empty);
                let high = c3.get(&l).unwrap_or(&empty);
                self.harmonic_block(l, low, mid, high)
            })
            .collect();
        let mut components = Vec::new();
        let mut by_homogeneity = BTreeMap::new();
        let mut type_split_exact = true;
        for b in per_block {
            if b.homology_dim > 0 {
                by_homogeneity.insert(b.homogeneity, b.homology_dim);
            }
            let split: usize = b.types.iter().map(|(_, d)| d).sum();
            type_split_exact &= split == b.homology_dim && b.harmonic_dim == b.homology_dim;
            for (t, d) in b.types {
                if d > 0 {
                    components.push(HarmonicComponent {
                        homogeneity: b.homogeneity,
                        component: t,
                        label: t.to_string(),
                        dimension: d,
                    });
                }
            }
        }
        HarmonicReport {
            algebra: self.alg.spec().to_string(),
            chain_dims: [1, 2, 3].map(|k| self.chain_basis(k).len()),
            by_homogeneity,
            components,
            type_split_exact,
        }
    }

    fn harmonic_block(
        &self,
        l: i32,
        low: &[(Vec<usize>, usize)],
        mid: &[(Vec<usize>, usize)],
        high: &[(Vec<usize>, usize)],
    ) -> BlockResult {
        let d2 = self.boundary_matrix(mid, low);
        let d3 = self.boundary_matrix(high, mid);
        let kernel_dim = mid.len() - d2.rank();
        let image_dim = d3.rank();
        let homology_dim = kernel_dim - image_dim;
        if homology_dim == 0 {
            return BlockResult {
                homogeneity: l,
                homology_dim,
                harmonic_dim: 0,
                types: Vec::new(),
            };
        }
        // harmonic representatives: ker ∂₂ ∩ (im ∂₃)^⊥ = ker [∂₂; ∂₃ᵀ G]
        let g = Matrix::from_fn(mid.len(), mid.len(), |i, j| self.gram2(&mid[i], &mid[j]));
        let adj = d3.transpose().mul(&g);
        let stacked = d2.vstack(&adj);
        let harmonic_dim = mid.len() - stacked.rank();
        let mut by_type: BTreeMap<ComponentType, Vec<usize>> = BTreeMap::new();
        for (j, (w, v)) in mid.iter().enumerate() {
            by_type.entry(self.type_of(w, *v)).or_default().push(j);
        }
        let types = by_type
            .into_iter()
            .map(|(t, cols)| {
                let sub = Matrix::from_fn(stacked.rows(), cols.len(), |i, j| {
                    stacked[(i, cols[j])].clone()
                });
                (t, cols.len() - sub.rank())
            })
            .collect();
        BlockResult {
            homogeneity: l,
            homology_dim,
            harmonic_dim,
            types,
        }
    }
}

struct BlockResult {
    homogeneity: i32,
    homology_dim: usize,
    harmonic_dim: usize,
    types: Vec<(ComponentType, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicComponent {
    pub homogeneity: i32,
    pub component: ComponentType,
    pub label: String,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicReport {
    pub algebra: String,
    pub chain_dims: [usize; 3],
    /// Dimension of `ker ∂₂ / im ∂₃` per homogeneity (nonzero entries only).
    pub by_homogeneity: BTreeMap<i32, usize>,
    /// Harmonic dimension per type (nonzero entries only).
    pub components: Vec<HarmonicComponent>,
    /// True iff the per-type dimensions add up to the homology dimension in every homogeneity.
    pub type_split_exact: bool,
}

impl HarmonicReport {
    pub fn types(&self) -> Vec<ComponentType> {
        self.components.iter().map(|c| c.component).collect()
    }
}

pub fn harmonic_space(alg: &GradedContactAlgebra) -> HarmonicReport {
    ChainComplex::new(alg).harmonic_space()
}

/// An alternating map `g/p × g/p → g`, keyed by `(a, b, v)` with `a < b` basis
/// indices of `g₋` and `v` a basis index of `g`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Cochain2 {
    coeffs: BTreeMap<(usize, usize, usize), Rational>,
}

impl Cochain2 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sets `c(X_a, X_b)` to have coefficient `value` on `X_v`, keeping `c(X_b, X_a) = −c(X_a, X_b)`.
    pub fn set(&mut self, a: usize, b: usize, v: usize, value: Rational) {
        assert_ne!(a, b, "alternating cochain has no diagonal entries");
        let (key, val) = if a < b {
            ((a, b, v), value)
        } else {
            ((b, a, v), -value)
        };
        if val.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, val);
        }
    }

    pub fn get(&self, a: usize, b: usize, v: usize) -> Rational {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self
                .coeffs
                .get(&(a, b, v))
                .cloned()
                .unwrap_or_else(Rational::zero),
            std::cmp::Ordering::Greater => -self
                .coeffs
                .get(&(b, a, v))
                .cloned()
                .unwrap_or_else(Rational::zero),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b, v), c) in &self.coeffs {
            out.set(a, b, v, c.clone() * s.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn type_of(alg: &GradedContactAlgebra, a: usize, b: usize, v: usize) -> ComponentType {
        ComponentType::new(-alg.degree_of(a), -alg.degree_of(b), alg.degree_of(v))
    }

    /// The part of the given homogeneity.
    pub fn homogeneous_part(&self, alg: &GradedContactAlgebra, l: i32) -> Self {
        let mut out = Self::zero();
        for (&(a, b, v), c) in &self.coeffs {
            if Self::type_of(alg, a, b, v).homogeneity() == l {
                out.set(a, b, v, c.clone());
            }
        }
        out
    }

    pub fn homogeneities(&self, alg: &GradedContactAlgebra) -> Vec<i32> {
        let mut h: Vec<i32> = self
            .coeffs
            .keys()
            .map(|&(a, b, v)| Self::type_of(alg, a, b, v).homogeneity())
            .collect();
        h.sort_unstable();
        h.dedup();
        h
    }

    /// All basis cochains `X_a ∧ X_b ↦ X_v` of the given type.
    pub fn basis_of_type(alg: &GradedContactAlgebra, t: ComponentType) -> Vec<Self> {
        let minus: Vec<usize> = alg.degree_range(-2).chain(alg.degree_range(-1)).collect();
        let mut out = Vec::new();
        for (x, &a) in minus.iter().enumerate() {
            for &b in &minus[x + 1..] {
                for v in alg.degree_range(t.value) {
                    if Self::type_of(alg, a, b, v) == t {
                        let mut c = Self::zero();
                        c.set(a, b, v, int(1));
                        out.push(c);
                    }
                }
            }
        }
        out
    }
}

/// `(h·c)(X, Y) = Ad_h c(Ad̲_{h⁻¹}X, Ad̲_{h⁻¹}Y)` for `h ∈ P`.
pub fn act_on_cochain(
    alg: &GradedContactAlgebra,
    h: &GroupElement,
    c: &Cochain2,
) -> Result<Cochain2> {
    let ad = alg.adjoint_matrix(h)?;
    let ad_inv = alg.adjoint_matrix(&h.inverse())?;
    let minus: Vec<usize> = alg.degree_range(-2).chain(alg.degree_range(-1)).collect();
    let d = alg.dim();
    let mut out = Cochain2::zero();
    for (x, &a) in minus.iter().enumerate() {
        for &b in &minus[x + 1..] {
            // c(Ad̲_{h⁻¹}X_a, Ad̲_{h⁻¹}X_b) expanded bilinearly over g₋ coordinates
            let mut value = vec![Rational::zero(); d];
            for &s in &minus {
                let ca = &ad_inv[(s, a)];
                if ca.is_zero() {
                    continue;
                }
                for &t in &minus {
                    let cb = &ad_inv[(t, b)];
                    if cb.is_zero() || s == t {
                        continue;
                    }
                    let f = ca.clone() * cb.clone();
                    for v in 0..d {
                        let cv = c.get(s, t, v);
                        if !cv.is_zero() {
                            value[v] += f.clone() * cv;
                        }
                    }
                }
            }
            for w in 0..d {
                let mut acc = Rational::zero();
                for (v, x) in value.iter().enumerate() {
                    if !x.is_zero() && !ad[(w, v)].is_zero() {
                        acc += x.clone() * ad[(w, v)].clone();
                    }
                }
                out.set(a, b, w, acc);
            }
        }
    }
    Ok(out)
}

/// The action of a grading-preserving element, read as `g₀⁻¹ · c`:
/// `(g₀⁻¹·c)(X,Y) = Ad_{g₀⁻¹} c(Ad_{g₀}X, Ad_{g₀}Y)`.
pub fn g0_action(alg: &GradedContactAlgebra, g0: &GroupElement, c: &Cochain2) -> Result<Cochain2> {
    if !alg.preserves_grading(g0)? {
        return Err(Error::DegreeMismatch("g0 must preserve the grading".into()));
    }
    act_on_cochain(alg, &g0.inverse(), c)
}

/// Whether `exp(Z)` fixes the lowest-homogeneity part of `c`, changing only
/// components of strictly higher homogeneity.
pub fn p_plus_action_triviality(
    alg: &GradedContactAlgebra,
    z: &crate::algebra::AlgebraElement,
    c: &Cochain2,
) -> Result<bool> {
    let parts = alg.grade_decompose(z)?;
    if parts.keys().any(|&d| d <= 0) {
        return Err(Error::DegreeMismatch("Z must lie in p+".into()));
    }
    let Some(&lowest) = c.homogeneities(alg).first() else {
        return Ok(true);
    };
    let h = alg.exp_nilpotent(z)?;
    let moved = act_on_cochain(alg, &h, c)?;
    let below_fixed = moved.homogeneities(alg).iter().all(|&l| l >= lowest);
    Ok(below_fixed && moved.homogeneous_part(alg, lowest) == c.homogeneous_part(alg, lowest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn build(s: &str) -> GradedContactAlgebra {
        GradedContactAlgebra::build(s.parse::<AlgebraSpec>().unwrap()).unwrap()
    }

    #[test]
    fn wedge_sorting_sign() {
        assert_eq!(sort_wedge(vec![2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(sort_wedge(vec![1, 0]), Some((-1, vec![0, 1])));
        assert_eq!(sort_wedge(vec![1, 1]), None);
    }

    #[test]
    fn boundary_squared_is_zero_sl3() {
        let alg = build("sl:n=1");
        let cx = ChainComplex::new(&alg);
        assert!(cx.boundary_squared_vanishes());
        for (w, v) in cx.chain_basis(3) {
            let c = Chain::basis(3, &w, v);
            let d = cx.boundary(&cx.boundary(&c).unwrap()).unwrap();
            assert!(d.is_zero());
        }
    }

    #[test]
    fn boundary_of_zero_and_bad_degree() {
        let alg = build("sl:n=1");
        let cx = ChainComplex::new(&alg);
        assert!(cx.boundary(&Chain::zero(2)).unwrap().is_zero());
        assert!(matches!(
            cx.boundary(&Chain::zero(4)),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn boundary_of_decomposable_two_chain() {
        // ∂(Z∧W⊗v) = −W⊗[Z,v] + Z⊗[W,v] − [Z,W]⊗v
        let alg = build("sl:n=1");
        let cx = ChainComplex::new(&alg);
        let sc = alg.structure_constants();
        for (w, v) in cx.chain_basis(2) {
            let (z, ww) = (cx.pplus()[w[0]], cx.pplus()[w[1]]);
            let mut expected = Chain::zero(1);
            for (k, c) in &sc[z][v] {
                expected.add_term(vec![w[1]], *k, -c.clone());
            }
            for (k, c) in &sc[ww][v] {
                expected.add_term(vec![w[0]], *k, c.clone());
            }
            for (k, c) in &sc[z][ww] {
                let lk = cx.pplus().iter().position(|x| x == k).unwrap();
                expected.add_term(vec![lk], v, -c.clone());
            }
            assert_eq!(cx.boundary(&Chain::basis(2, &w, v)).unwrap(), expected);
        }
    }

    #[test]
    fn sl3_harmonic_is_homogeneity_four() {
        let alg = build("sl:n=1");
        let report = harmonic_space(&alg);
        assert!(report.type_split_exact);
        assert_eq!(report.types(), vec![ComponentType::CURVATURE_G1]);
        assert_eq!(
            report.by_homogeneity.keys().copied().collect::<Vec<_>>(),
            vec![4]
        );
    }

    #[test]
    fn cochain_antisymmetry() {
        let mut c = Cochain2::zero();
        c.set(2, 1, 5, int(3));
        assert_eq!(c.get(1, 2, 5), int(-3));
        assert_eq!(c.get(2, 1, 5), int(3));
        assert_eq!(c.get(1, 1, 5), int(0));
    }
}
