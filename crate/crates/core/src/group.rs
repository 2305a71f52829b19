//! Group-level arithmetic: exponentials of nilpotent parts, adjoint actions,
//! the induced action on `g/p` and the factorization `g = g₀·exp Z₁·exp Z₂`
//! of parabolic elements.

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, AlgebraSpec, GradedContactAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix, QMatrix};
use crate::scalar::{int, re, Rational, ScalarField};

/// An invertible matrix whose conjugation action preserves the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    spec: AlgebraSpec,
    matrix: CMatrix,
    inverse: CMatrix,
}

impl GroupElement {
    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &CMatrix {
        &self.inverse
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.spec, rhs.spec,
            "multiplying elements of different groups"
        );
        Self {
            spec: self.spec,
            matrix: self.matrix.mul(&rhs.matrix),
            inverse: rhs.inverse.mul(&self.inverse),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            spec: self.spec,
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == CMatrix::identity(self.matrix.rows())
    }
}

/// A group element modulo the center. Two representatives are equal iff their
/// adjoint actions on the algebra agree.
#[derive(Clone, Debug)]
pub struct ProjectiveGroupElement {
    representative: GroupElement,
    adjoint: QMatrix,
}

impl ProjectiveGroupElement {
    pub fn new(alg: &GradedContactAlgebra, g: GroupElement) -> Result<Self> {
        let adjoint = alg.adjoint_matrix(&g)?;
        Ok(Self {
            representative: g,
            adjoint,
        })
    }

    pub fn representative(&self) -> &GroupElement {
        &self.representative
    }

    /// Matrix of `Ad_g` in the algebra basis (columns are images of basis vectors).
    pub fn adjoint_matrix(&self) -> &QMatrix {
        &self.adjoint
    }

    pub fn is_identity(&self) -> bool {
        self.adjoint == QMatrix::identity(self.adjoint.rows())
    }
}

impl PartialEq for ProjectiveGroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.representative.spec == other.representative.spec && self.adjoint == other.adjoint
    }
}

/// A class in `g/p`, stored as its `g₋₂` coefficient and `g₋₁` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientVector {
    pub x2: Rational,
    pub x1: Vec<Rational>,
}

impl QuotientVector {
    pub fn is_zero(&self) -> bool {
        self.x2.is_zero() && self.x1.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        Self {
            x2: -self.x2.clone(),
            x1: self.x1.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl GradedContactAlgebra {
    pub fn identity(&self) -> GroupElement {
        let n = self.matrix_size();
        GroupElement {
            spec: self.spec(),
            matrix: CMatrix::identity(n),
            inverse: CMatrix::identity(n),
        }
    }

    /// Accepts a matrix as a group element if it is invertible (and real for the
    /// real families) and conjugation by it preserves the algebra. For the form
    /// families the latter is tested as `g†Fg = cF` with `c` real and nonzero.
    pub fn group_element(&self, matrix: CMatrix) -> Result<GroupElement> {
        let n = self.matrix_size();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::NotInGroup(format!("expected {n}x{n} matrix")));
        }
        if self.spec().scalar_field() == ScalarField::Rational && !matrix.is_real() {
            return Err(Error::NotInGroup(
                "real family requires a real matrix".into(),
            ));
        }
        let inverse = matrix
            .inverse()
            .ok_or_else(|| Error::NotInGroup("matrix is singular".into()))?;
        if let Some(f) = self.spec().form() {
            let b = matrix.conj_transpose().mul(&f).mul(&matrix);
            let c = b[(0, n - 1)].clone() / f[(0, n - 1)].clone();
            if !c.im.is_zero() || c.re.is_zero() || b != f.scale(&c) {
                return Err(Error::NotInGroup(format!(
                    "conjugation does not preserve {}",
                    self.spec()
                )));
            }
        }
        Ok(GroupElement {
            spec: self.spec(),
            matrix,
            inverse,
        })
    }

    /// Whether conjugation by `g` maps every basis vector into the algebra.
    pub fn conjugation_preserves_algebra(&self, matrix: &CMatrix) -> bool {
        let Some(inverse) = matrix.inverse() else {
            return false;
        };
        self.basis().iter().all(|b| {
            self.spec()
                .satisfies_constraints(&matrix.mul(&b.matrix).mul(&inverse))
        })
    }

    /// `exp Z` for `Z` in `p₊` or `g₋`, summed exactly.
    pub fn exp_nilpotent(&self, z: &AlgebraElement) -> Result<GroupElement> {
        let parts = self.grade_decompose(z)?;
        let positive = parts.keys().all(|&d| d > 0);
        let negative = parts.keys().all(|&d| d < 0);
        if !(positive || negative) {
            let degrees: Vec<String> = parts.keys().map(i32::to_string).collect();
            return Err(Error::NotNilpotentPart(format!(
                "components in degrees {}",
                degrees.join(",")
            )));
        }
        let matrix = exp_series(z.matrix());
        let inverse = exp_series(&z.matrix().neg());
        Ok(GroupElement {
            spec: self.spec(),
            matrix,
            inverse,
        })
    }

    /// `g X g⁻¹`.
    pub fn adjoint(&self, g: &GroupElement, x: &AlgebraElement) -> Result<AlgebraElement> {
        if g.spec != self.spec() || x.spec() != self.spec() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement::from_matrix_unchecked(
            self.spec(),
            g.matrix.mul(x.matrix()).mul(&g.inverse),
        ))
    }

    /// Matrix of `Ad_g` in the basis.
    pub fn adjoint_matrix(&self, g: &GroupElement) -> Result<QMatrix> {
        if g.spec != self.spec() {
            return Err(Error::AlgebraMismatch);
        }
        let d = self.dim();
        let mut out = QMatrix::zeros(d, d);
        for k in 0..d {
            let img = g.matrix.mul(&self.basis()[k].matrix).mul(&g.inverse);
            let c = self.try_coords(&img)?;
            for (i, v) in c.into_iter().enumerate() {
                out[(i, k)] = v;
            }
        }
        Ok(out)
    }

    pub fn projective(&self, g: GroupElement) -> Result<ProjectiveGroupElement> {
        ProjectiveGroupElement::new(self, g)
    }

    /// Class of `x` in `g/p`.
    pub fn project(&self, x: &AlgebraElement) -> Result<QuotientVector> {
        let c = self.coords(x)?;
        Ok(self.project_coords(&c))
    }

    pub(crate) fn project_coords(&self, c: &[Rational]) -> QuotientVector {
        let m2 = self.degree_range(-2);
        let m1 = self.degree_range(-1);
        QuotientVector {
            x2: c[m2.start].clone(),
            x1: c[m1].to_vec(),
        }
    }

    /// The representative of a class in `g₋₂ ⊕ g₋₁`.
    pub fn lift(&self, v: &QuotientVector) -> Result<AlgebraElement> {
        let m1 = self.degree_range(-1);
        if v.x1.len() != m1.len() {
            return Err(Error::DegreeMismatch(format!(
                "expected {} g-1 coordinates",
                m1.len()
            )));
        }
        let mut c = vec![Rational::zero(); self.dim()];
        c[self.degree_range(-2).start] = v.x2.clone();
        for (k, x) in m1.zip(&v.x1) {
            c[k] = x.clone();
        }
        Ok(self.from_coords(&c))
    }

    /// The action induced by `Ad_g` on `g/p`, for `g ∈ P`.
    pub fn underline_adjoint(
        &self,
        g: &GroupElement,
        v: &QuotientVector,
    ) -> Result<QuotientVector> {
        let x = self.lift(v)?;
        let y = self.adjoint(g, &x)?;
        self.project(&y)
    }

    /// True iff `Ad_g` maps each filtration step `gⁱ = ⊕_{j≥i} g_j` into itself.
    pub fn preserves_filtration(&self, g: &GroupElement) -> Result<bool> {
        let ad = self.adjoint_matrix(g)?;
        let d = self.dim();
        Ok((0..d).all(|k| {
            (0..d).all(|i| ad[(i, k)].is_zero() || self.degree_of(i) >= self.degree_of(k))
        }))
    }

    /// True iff `Ad_g` preserves every `g_i`.
    pub fn preserves_grading(&self, g: &GroupElement) -> Result<bool> {
        let ad = self.adjoint_matrix(g)?;
        let d = self.dim();
        Ok((0..d).all(|k| {
            (0..d).all(|i| ad[(i, k)].is_zero() || self.degree_of(i) == self.degree_of(k))
        }))
    }

    /// `g₀·exp Z₁·exp Z₂`.
    pub fn assemble(
        &self,
        g0: &GroupElement,
        z1: &AlgebraElement,
        z2: &AlgebraElement,
    ) -> Result<GroupElement> {
        self.expect_degree(z1, 1)?;
        self.expect_degree(z2, 2)?;
        Ok(g0
            .mul(&self.exp_nilpotent(z1)?)
            .mul(&self.exp_nilpotent(z2)?))
    }

    /// Writes a parabolic element as `g₀·exp Z₁·exp Z₂`.
    pub fn factorize_parabolic(
        &self,
        g: &GroupElement,
    ) -> Result<(GroupElement, AlgebraElement, AlgebraElement)> {
        if !self.preserves_filtration(g)? {
            return Err(Error::NotInParabolic);
        }
        let m = g.matrix();
        let w = self.weights();
        let n = m.rows();
        if (0..n).any(|a| (0..n).any(|b| w[a] < w[b] && !m[(a, b)].is_zero())) {
            return Err(Error::NotInParabolic);
        }
        let g0m = self.degree_part(m, 0);
        let g0 = self.group_element(g0m)?;
        let u = g0.inverse.mul(m);
        let log = log_unipotent(&u);
        let z1 = self.element(self.degree_part(&log, 1))?;
        let z2 = self.element(self.degree_part(&log, 2))?;
        if z1.matrix().add(z2.matrix()) != log {
            return Err(Error::NotInParabolic);
        }
        Ok((g0, z1, z2))
    }

    pub(crate) fn expect_degree(&self, x: &AlgebraElement, degree: i32) -> Result<()> {
        if x.spec() != self.spec() {
            return Err(Error::AlgebraMismatch);
        }
        if self.degree_part(x.matrix(), degree) != *x.matrix() {
            return Err(Error::DegreeMismatch(format!(
                "expected an element of g{degree}"
            )));
        }
        Ok(())
    }
}

/// `Σ Z^k / k!` for nilpotent `Z`.
pub fn exp_series(z: &CMatrix) -> CMatrix {
    let n = z.rows();
    let mut out = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=n {
        term = term.mul(z).scale(&re(Rational::one() / int(k as i64)));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// `log u = Σ (−1)^{k+1} (u − 1)^k / k` for unipotent `u`.
pub fn log_unipotent(u: &CMatrix) -> CMatrix {
    let n = u.rows();
    let x = u.sub(&CMatrix::identity(n));
    let mut out = CMatrix::zeros(n, n);
    let mut power = CMatrix::identity(n);
    for k in 1..=n {
        power = power.mul(&x);
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        out = out.add(&power.scale(&re(sign / int(k as i64))));
    }
    out
}

/// Matrix of `Ad_g` restricted to rows and columns of the given degrees.
pub fn adjoint_block(alg: &GradedContactAlgebra, ad: &QMatrix, rows: i32, cols: i32) -> QMatrix {
    let (r, c) = (alg.degree_range(rows), alg.degree_range(cols));
    Matrix::from_fn(r.len(), c.len(), |i, j| {
        ad[(r.start + i, c.start + j)].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn form_test_matches_conjugation_test() {
        use crate::sample::{random_group_element, rng};
        use rand::Rng;
        let mut r = rng(7);
        for spec in ["sl:n=1", "su:p=1,q=1", "sp:n=1", "so:p=1,q=1"] {
            let alg = GradedContactAlgebra::build(spec.parse().unwrap()).unwrap();
            let n = alg.matrix_size();
            for _ in 0..10 {
                let g = random_group_element(&alg, &mut r);
                assert!(alg.conjugation_preserves_algebra(g.matrix()));
                let scaled = g.matrix().scale(&crate::scalar::re(int(-3)));
                assert!(alg.group_element(scaled).is_ok());
                let mut bumped = g.matrix().clone();
                bumped[(r.gen_range(0..n), r.gen_range(0..n))] += crate::scalar::re(int(1));
                let fast = alg.group_element(bumped.clone()).is_ok();
                assert_eq!(fast, alg.conjugation_preserves_algebra(&bumped), "{spec}");
            }
        }
    }

    fn sl3() -> GradedContactAlgebra {
        GradedContactAlgebra::build("sl:n=1".parse().unwrap()).unwrap()
    }

    fn g1_element(alg: &GradedContactAlgebra, s: i64, t: i64) -> AlgebraElement {
        let mut c = vec![Rational::zero(); alg.dim()];
        let r = alg.degree_range(1);
        c[r.start] = int(s);
        c[r.start + 1] = int(t);
        alg.from_coords(&c)
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let alg = sl3();
        assert!(alg.exp_nilpotent(&alg.zero()).unwrap().is_identity());
    }

    #[test]
    fn exp_of_g1_element_has_half_product_corner() {
        let alg = sl3();
        let g = alg.exp_nilpotent(&g1_element(&alg, 2, 3)).unwrap();
        assert_eq!(g.matrix()[(0, 2)], re(int(3)));
        assert_eq!(g.matrix()[(0, 1)], re(int(2)));
        assert_eq!(g.matrix()[(1, 2)], re(int(3)));
        assert!((0..3).all(|i| g.matrix()[(i, i)] == re(int(1))));
        assert!(g.mul(&g.inverse()).is_identity());
    }

    #[test]
    fn exp_rejects_mixed_degrees() {
        let alg = sl3();
        let x = alg
            .basis_element(alg.degree_range(-1).start)
            .add(&alg.basis_element(alg.degree_range(1).start));
        assert!(matches!(
            alg.exp_nilpotent(&x),
            Err(Error::NotNilpotentPart(_))
        ));
        assert!(alg.exp_nilpotent(&alg.grading_element()).is_err());
    }

    #[test]
    fn p_plus_acts_trivially_on_g_minus1_classes() {
        let alg = sl3();
        let g = alg.exp_nilpotent(&g1_element(&alg, 1, -2)).unwrap();
        let v = QuotientVector {
            x2: Rational::zero(),
            x1: vec![int(3), frac(1, 2)],
        };
        assert_eq!(alg.underline_adjoint(&g, &v).unwrap(), v);
        assert_eq!(alg.underline_adjoint(&alg.identity(), &v).unwrap(), v);
    }

    #[test]
    fn factorization_of_block_diagonal_element() {
        let alg = sl3();
        let mut m = CMatrix::identity(3);
        m[(0, 0)] = re(int(2));
        m[(1, 1)] = re(int(-1));
        let g = alg.group_element(m).unwrap();
        let (g0, z1, z2) = alg.factorize_parabolic(&g).unwrap();
        assert_eq!(g0, g);
        assert!(z1.is_zero() && z2.is_zero());
    }

    #[test]
    fn lower_triangular_element_is_not_parabolic() {
        let alg = sl3();
        let x = alg.basis_element(alg.degree_range(-1).start);
        let g = alg.exp_nilpotent(&x).unwrap();
        assert_eq!(
            alg.factorize_parabolic(&g).unwrap_err(),
            Error::NotInParabolic
        );
    }
}
