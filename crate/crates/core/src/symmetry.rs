//! Symmetries of the homogeneous model at the origin.
//!
//! A symmetry at the origin is left multiplication by `g = g₀·exp Z₁·exp Z₂ ∈ P`
//! such that the induced action of `g` on `g⁻¹/p ≅ g₋₁` is `−id`. The element
//! `g₀` is determined up to the center by this condition; `Z₁` and `Z₂` are
//! arbitrary, and the symmetry is involutive iff `Z₂ = 0`.

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, Family, GradedContactAlgebra};
use crate::error::{Error, Result};
use crate::group::{GroupElement, ProjectiveGroupElement, QuotientVector};
use crate::linalg::{CMatrix, Matrix, QMatrix};
use crate::scalar::{frac, imag_unit, int, re, Gaussian, Rational, ScalarField};

/// Candidate `(g₀, Z₁, Z₂)` for a symmetry at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryCandidate {
    g0: ProjectiveGroupElement,
    z1: AlgebraElement,
    z2: AlgebraElement,
}

impl SymmetryCandidate {
    pub fn new(
        alg: &GradedContactAlgebra,
        g0: ProjectiveGroupElement,
        z1: AlgebraElement,
        z2: AlgebraElement,
    ) -> Result<Self> {
        alg.expect_degree(&z1, 1)?;
        alg.expect_degree(&z2, 2)?;
        if !alg.preserves_grading(g0.representative())? {
            return Err(Error::DegreeMismatch("g0 must preserve the grading".into()));
        }
        Ok(Self { g0, z1, z2 })
    }

    pub fn g0(&self) -> &ProjectiveGroupElement {
        &self.g0
    }

    pub fn z1(&self) -> &AlgebraElement {
        &self.z1
    }

    pub fn z2(&self) -> &AlgebraElement {
        &self.z2
    }

    /// The representative matrix `g₀·exp Z₁·exp Z₂`.
    pub fn group_element(&self, alg: &GradedContactAlgebra) -> Result<GroupElement> {
        alg.assemble(self.g0.representative(), &self.z1, &self.z2)
    }
}

/// Result of solving for the grading-preserving `g₀` acting as `−id` on `g₋₁`.
#[derive(Clone, Debug)]
pub struct MinusIdentitySolution {
    pub g0: ProjectiveGroupElement,
    /// Real dimension of the solution space of `M X + X M = 0` over block-diagonal `M`.
    pub real_solution_dimension: usize,
    /// Whether every solution is a scalar multiple of `g0` (over the algebra's field).
    pub unique_up_to_scalars: bool,
}

/// Solves the linear conjugation constraints for `g₀` and checks the solution
/// is unique up to scalars.
pub fn solve_minus_identity(alg: &GradedContactAlgebra) -> Result<MinusIdentitySolution> {
    let n = alg.matrix_size();
    let w = alg.weights();
    let complex = alg.spec().scalar_field() == ScalarField::Gaussian;
    let mut unknowns = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if w[a] == w[b] {
                unknowns.push(unit(n, a, b, re(int(1))));
                if complex {
                    unknowns.push(unit(n, a, b, imag_unit()));
                }
            }
        }
    }
    let xs: Vec<&CMatrix> = alg
        .degree_range(-1)
        .map(|k| &alg.basis()[k].matrix)
        .collect();
    let columns: Vec<Vec<Rational>> = unknowns
        .iter()
        .map(|u| {
            let mut col = Vec::new();
            for x in &xs {
                let r = u.mul(x).add(&x.mul(u));
                col.extend(r.entries().iter().map(|z| z.re.clone()));
                col.extend(r.entries().iter().map(|z| z.im.clone()));
            }
            col
        })
        .collect();
    let kernel = Matrix::from_rows(columns).transpose().kernel();
    let solutions: Vec<CMatrix> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .zip(&unknowns)
                .filter(|(c, _)| !c.is_zero())
                .fold(CMatrix::zeros(n, n), |acc, (c, u)| {
                    acc.add(&u.scale(&re(c.clone())))
                })
        })
        .collect();
    let Some(first) = solutions.iter().find(|m| m.inverse().is_some()) else {
        return Err(Error::NotFound(format!(
            "no invertible grading-preserving solution for {}",
            alg.spec()
        )));
    };
    let pivot = first[(0, 0)].clone();
    if pivot.is_zero() {
        return Err(Error::NotFound(
            "solution vanishes in the corner entry".into(),
        ));
    }
    let normalized = first.scale(&(-Gaussian::one() / pivot));
    let unique = solutions
        .iter()
        .all(|s| s == &normalized.scale(&-s[(0, 0)].clone()));
    let g = alg.group_element(normalized)?;
    let g0 = alg.projective(g)?;
    Ok(MinusIdentitySolution {
        g0,
        real_solution_dimension: solutions.len(),
        unique_up_to_scalars: unique,
    })
}

/// The unique (mod center) `g₀ ∈ G₀` with `Ad_{g₀} = −id` on `g₋₁`.
pub fn find_minus_identity(alg: &GradedContactAlgebra) -> Result<ProjectiveGroupElement> {
    let sol = solve_minus_identity(alg)?;
    if !sol.unique_up_to_scalars {
        return Err(Error::NotFound(format!(
            "solution space of dimension {} is not a single line",
            sol.real_solution_dimension
        )));
    }
    let ad = sol.g0.adjoint_matrix();
    for k in alg.degree_range(-1).chain(alg.degree_range(-2)) {
        let sign = if alg.degree_of(k) == -1 {
            int(-1)
        } else {
            int(1)
        };
        let expected: Vec<Rational> = (0..alg.dim())
            .map(|i| {
                if i == k {
                    sign.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        if ad.col(k) != expected {
            return Err(Error::NotFound(
                "solution does not act as -id on g-1".into(),
            ));
        }
    }
    Ok(sol.g0)
}

/// Matrix of the induced action of `g` on `g/p` in the basis (g₋₂, g₋₁).
pub fn quotient_action(alg: &GradedContactAlgebra, g: &GroupElement) -> Result<QMatrix> {
    let m = 1 + alg.degree_range(-1).len();
    let mut out = QMatrix::zeros(m, m);
    for j in 0..m {
        let mut v = QuotientVector {
            x2: Rational::zero(),
            x1: vec![Rational::zero(); m - 1],
        };
        if j == 0 {
            v.x2 = Rational::one();
        } else {
            v.x1[j - 1] = Rational::one();
        }
        let img = alg.underline_adjoint(g, &v)?;
        out[(0, j)] = img.x2;
        for (i, x) in img.x1.into_iter().enumerate() {
            out[(i + 1, j)] = x;
        }
    }
    Ok(out)
}

/// Dimensions of the `−1` and `+1` eigenspaces of the action on `g/p`, provided
/// the action is diagonalizable with only these eigenvalues.
pub fn quotient_eigenspaces(
    alg: &GradedContactAlgebra,
    g: &GroupElement,
) -> Result<Option<(usize, usize)>> {
    let a = quotient_action(alg, g)?;
    let id = QMatrix::identity(a.rows());
    let plus = a.add(&id);
    let minus = a.sub(&id);
    if !plus.mul(&minus).is_zero() {
        return Ok(None);
    }
    Ok(Some((a.rows() - plus.rank(), a.rows() - minus.rank())))
}

/// True iff the induced action of `(g₀·exp Z₁·exp Z₂)⁻¹` is `−id` on `g⁻¹/p`.
pub fn is_symmetry(alg: &GradedContactAlgebra, cand: &SymmetryCandidate) -> bool {
    let Ok(g) = cand.group_element(alg) else {
        return false;
    };
    let inv = g.inverse();
    let m1 = alg.degree_range(-1);
    m1.clone().enumerate().all(|(j, _)| {
        let mut v = QuotientVector {
            x2: Rational::zero(),
            x1: vec![Rational::zero(); m1.len()],
        };
        v.x1[j] = Rational::one();
        alg.underline_adjoint(&inv, &v)
            .is_ok_and(|img| img == v.neg())
    })
}

/// The square of the symmetry.
pub fn symmetry_square(
    alg: &GradedContactAlgebra,
    cand: &SymmetryCandidate,
) -> Result<GroupElement> {
    if !is_symmetry(alg, cand) {
        return Err(Error::NotASymmetry);
    }
    let g = cand.group_element(alg)?;
    Ok(g.mul(&g))
}

/// True iff the square of the symmetry is the identity modulo the center.
pub fn is_involutive(alg: &GradedContactAlgebra, cand: &SymmetryCandidate) -> Result<bool> {
    let sq = symmetry_square(alg, cand)?;
    Ok(alg.projective(sq)?.is_identity())
}

/// `h·g·h⁻¹`, a symmetry at the point `hP`.
pub fn transport_symmetry(
    alg: &GradedContactAlgebra,
    cand: &SymmetryCandidate,
    h: &GroupElement,
) -> Result<GroupElement> {
    let g = cand.group_element(alg)?;
    Ok(h.mul(&g).mul(&h.inverse()))
}

/// The matrix `(−1, −V, γ; 0, 1, W; 0, 0, −1)` for `sl(n+2, R)`.
pub fn lagrangean_symmetry(
    alg: &GradedContactAlgebra,
    v: &[Rational],
    w: &[Rational],
    gamma: &Rational,
) -> Result<GroupElement> {
    let n = alg.matrix_size();
    if alg.spec().family() != Family::Sl {
        return Err(Error::UnsupportedFamily(alg.spec().family().to_string()));
    }
    if v.len() != n - 2 || w.len() != n - 2 {
        return Err(Error::DegreeMismatch(format!(
            "expected vectors of length {}",
            n - 2
        )));
    }
    let mut m = corner_frame(n);
    for i in 1..n - 1 {
        m[(0, i)] = re(-v[i - 1].clone());
        m[(i, n - 1)] = re(w[i - 1].clone());
    }
    m[(0, n - 1)] = re(gamma.clone());
    alg.group_element(m)
}

/// The matrix `(−1, −Z, w; 0, 1, −𝕀Z*; 0, 0, −1)` for `su(p+1, q+1)`.
pub fn cr_symmetry(
    alg: &GradedContactAlgebra,
    z: &[Gaussian],
    w: &Gaussian,
) -> Result<GroupElement> {
    let n = alg.matrix_size();
    if alg.spec().family() != Family::Su {
        return Err(Error::UnsupportedFamily(alg.spec().family().to_string()));
    }
    if z.len() != n - 2 {
        return Err(Error::DegreeMismatch(format!(
            "expected a vector of length {}",
            n - 2
        )));
    }
    let sig = alg.spec().signature();
    let mut m = corner_frame(n);
    for i in 1..n - 1 {
        m[(0, i)] = -z[i - 1].clone();
        m[(i, n - 1)] = -(z[i - 1].conj() * re(int(sig[i - 1])));
    }
    m[(0, n - 1)] = w.clone();
    alg.group_element(m)
}

/// Evaluates the explicit involutivity condition on a symmetry matrix in the
/// form produced by [`lagrangean_symmetry`] or [`cr_symmetry`]:
/// `γ = −½ V·W` for SL and `w = ½ Z𝕀Z*` for SU.
pub fn involutive_closed_form(alg: &GradedContactAlgebra, raw: &GroupElement) -> Result<bool> {
    let n = alg.matrix_size();
    let m = raw.matrix();
    let frame = corner_frame(n);
    let shape_ok = (0..n).all(|i| {
        (0..n).all(|j| {
            let free = (i == 0 && j > 0) || (j == n - 1 && i < n - 1);
            free || m[(i, j)] == frame[(i, j)]
        })
    });
    if !shape_ok {
        return Err(Error::NotASymmetry);
    }
    let half = frac(1, 2);
    match alg.spec().family() {
        Family::Sl => {
            let vw = (1..n - 1).fold(Rational::zero(), |acc, i| {
                acc + (-m[(0, i)].re.clone()) * m[(i, n - 1)].re.clone()
            });
            Ok(m[(0, n - 1)].re == -half * vw)
        }
        Family::Su => {
            let sig = alg.spec().signature();
            let mut norm = Gaussian::zero();
            for i in 1..n - 1 {
                let zi = -m[(0, i)].clone();
                let s = re(int(sig[i - 1]));
                if m[(i, n - 1)] != -(zi.conj() * s.clone()) {
                    return Err(Error::NotASymmetry);
                }
                norm += zi.clone() * s * zi.conj();
            }
            Ok(m[(0, n - 1)] == norm * re(half))
        }
        f => Err(Error::UnsupportedFamily(f.to_string())),
    }
}

/// The candidate read off a parabolic group element.
pub fn candidate_from_group_element(
    alg: &GradedContactAlgebra,
    g: &GroupElement,
) -> Result<SymmetryCandidate> {
    let (g0, z1, z2) = alg.factorize_parabolic(g)?;
    SymmetryCandidate::new(alg, alg.projective(g0)?, z1, z2)
}

/// The element `diag(−1, 1, …, 1, −1)`.
pub fn corner_frame(n: usize) -> CMatrix {
    let mut m = CMatrix::identity(n);
    m[(0, 0)] = re(int(-1));
    m[(n - 1, n - 1)] = re(int(-1));
    m
}

fn unit(n: usize, i: usize, j: usize, v: Gaussian) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m[(i, j)] = v;
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::scalar::gi;

    fn build(s: &str) -> GradedContactAlgebra {
        GradedContactAlgebra::build(s.parse::<AlgebraSpec>().unwrap()).unwrap()
    }

    #[test]
    fn sl_minus_identity_is_corner_matrix() {
        for n in 1..=3 {
            let alg = build(&format!("sl:n={n}"));
            let g0 = find_minus_identity(&alg).unwrap();
            assert_eq!(*g0.representative().matrix(), corner_frame(n + 2));
        }
    }

    #[test]
    fn su_minus_identity_is_the_same_matrix() {
        let alg = build("su:p=1,q=1");
        let sol = solve_minus_identity(&alg).unwrap();
        assert_eq!(*sol.g0.representative().matrix(), corner_frame(4));
        assert_eq!(sol.real_solution_dimension, 2);
        assert!(sol.unique_up_to_scalars);
    }

    #[test]
    fn identity_is_not_a_symmetry() {
        let alg = build("sl:n=1");
        let cand = SymmetryCandidate::new(
            &alg,
            alg.projective(alg.identity()).unwrap(),
            alg.zero(),
            alg.zero(),
        )
        .unwrap();
        assert!(!is_symmetry(&alg, &cand));
        assert_eq!(
            symmetry_square(&alg, &cand).unwrap_err(),
            Error::NotASymmetry
        );
    }

    #[test]
    fn lagrangean_closed_form_examples() {
        let alg = build("sl:n=1");
        let g = lagrangean_symmetry(&alg, &[int(2)], &[int(3)], &int(-3)).unwrap();
        assert!(involutive_closed_form(&alg, &g).unwrap());
        let g = lagrangean_symmetry(&alg, &[int(0)], &[int(0)], &int(1)).unwrap();
        assert!(!involutive_closed_form(&alg, &g).unwrap());
        let cand = candidate_from_group_element(&alg, &g).unwrap();
        assert!(!is_involutive(&alg, &cand).unwrap());
    }

    #[test]
    fn cr_closed_form_examples() {
        let alg = build("su:p=1,q=0");
        let z = [gi(1, 1)];
        let g = cr_symmetry(&alg, &z, &gi(1, 0)).unwrap();
        assert!(involutive_closed_form(&alg, &g).unwrap());
        let cand = candidate_from_group_element(&alg, &g).unwrap();
        assert!(is_involutive(&alg, &cand).unwrap());
        let g = cr_symmetry(&alg, &z, &gi(1, 2)).unwrap();
        assert!(!involutive_closed_form(&alg, &g).unwrap());
        // the real part of the corner entry is forced by the group
        assert!(matches!(
            cr_symmetry(&alg, &z, &gi(0, 2)),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn closed_form_unsupported_for_symplectic() {
        let alg = build("sp:n=1");
        let g = alg.group_element(corner_frame(4)).unwrap();
        assert!(matches!(
            involutive_closed_form(&alg, &g),
            Err(Error::UnsupportedFamily(_))
        ));
    }
}
