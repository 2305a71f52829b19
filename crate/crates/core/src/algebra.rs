//! Matrix realizations of contact-graded real simple Lie algebras.
//!
//! Every algebra is a real Lie algebra of `N×N` matrices graded by the
//! eigenvalues of `ad(E)` for a diagonal grading element `E = diag(e_0, …)`.
//! The matrix unit `E_ab` has degree `e_a − e_b`, so the degree-`i` part of a
//! matrix is obtained by masking entries. Basis vectors are stored in degree
//! order −2, −1, 0, 1, 2.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix, QMatrix};
use crate::scalar::{frac, gauss, imag_unit, int, re, Gaussian, Rational, ScalarField};

pub const DEGREES: [i32; 5] = [-2, -1, 0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "SU")]
    Su,
    #[serde(rename = "SP")]
    Sp,
    #[serde(rename = "SO")]
    So,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl => "SL",
            Family::Su => "SU",
            Family::Sp => "SP",
            Family::So => "SO",
        })
    }
}

/// Which algebra to build.
///
/// * `Sl { n }` is `sl(n+2, R)`, `n ≥ 1`;
/// * `Su { p, q }` is `su(p+1, q+1)`, `p+q ≥ 1`;
/// * `Sp { n }` is `sp(2n+2, R)`, `n ≥ 1`;
/// * `So { p, q }` is `so(p+2, q+2)`, `p+q ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraSpec {
    Sl { n: usize },
    Su { p: usize, q: usize },
    Sp { n: usize },
    So { p: usize, q: usize },
}

impl AlgebraSpec {
    pub fn family(&self) -> Family {
        match self {
            AlgebraSpec::Sl { .. } => Family::Sl,
            AlgebraSpec::Su { .. } => Family::Su,
            AlgebraSpec::Sp { .. } => Family::Sp,
            AlgebraSpec::So { .. } => Family::So,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            AlgebraSpec::Sl { n } | AlgebraSpec::Sp { n } => n >= 1,
            AlgebraSpec::Su { p, q } | AlgebraSpec::So { p, q } => p + q >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "{self}: parameters out of range"
            )))
        }
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        match *self {
            AlgebraSpec::Sl { n } => n + 2,
            AlgebraSpec::Su { p, q } => p + q + 2,
            AlgebraSpec::Sp { n } => 2 * n + 2,
            AlgebraSpec::So { p, q } => p + q + 4,
        }
    }

    pub fn scalar_field(&self) -> ScalarField {
        match self {
            AlgebraSpec::Su { .. } => ScalarField::Gaussian,
            _ => ScalarField::Rational,
        }
    }

    /// Diagonal entries of the grading element.
    pub fn grading_weights(&self) -> Vec<i32> {
        let n = self.matrix_size();
        let mut w = vec![0; n];
        match self {
            AlgebraSpec::So { .. } => {
                w[0] = 1;
                w[1] = 1;
                w[n - 2] = -1;
                w[n - 1] = -1;
            }
            _ => {
                w[0] = 1;
                w[n - 1] = -1;
            }
        }
        w
    }

    /// Signature matrix entries `𝕀` of the middle block (SU and SO).
    pub fn signature(&self) -> Vec<i64> {
        match *self {
            AlgebraSpec::Su { p, q } | AlgebraSpec::So { p, q } => std::iter::repeat_n(1, p)
                .chain(std::iter::repeat_n(-1, q))
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Matrix of the invariant form for SU (Hermitian), SP (symplectic) and SO
    /// (symmetric). `None` for SL.
    pub fn form(&self) -> Option<CMatrix> {
        let n = self.matrix_size();
        let one = Gaussian::one;
        match *self {
            AlgebraSpec::Sl { .. } => None,
            AlgebraSpec::Su { .. } => {
                let mut h = CMatrix::zeros(n, n);
                h[(0, n - 1)] = one();
                h[(n - 1, 0)] = one();
                for (k, s) in self.signature().into_iter().enumerate() {
                    h[(k + 1, k + 1)] = re(int(s));
                }
                Some(h)
            }
            AlgebraSpec::Sp { n: m } => {
                let mut j = CMatrix::zeros(n, n);
                j[(0, n - 1)] = one();
                j[(n - 1, 0)] = -one();
                for k in 0..m {
                    j[(1 + k, 1 + m + k)] = one();
                    j[(1 + m + k, 1 + k)] = -one();
                }
                Some(j)
            }
            AlgebraSpec::So { .. } => {
                let mut s = CMatrix::zeros(n, n);
                s[(0, n - 1)] = one();
                s[(n - 1, 0)] = one();
                s[(1, n - 2)] = one();
                s[(n - 2, 1)] = one();
                for (k, sg) in self.signature().into_iter().enumerate() {
                    s[(k + 2, k + 2)] = re(int(sg));
                }
                Some(s)
            }
        }
    }

    /// Residual of the defining linear constraints; zero iff `x` satisfies them.
    /// Reality of real families is checked separately.
    pub fn constraint_residual(&self, x: &CMatrix) -> Vec<Gaussian> {
        let mut out = vec![x.trace()];
        match self {
            AlgebraSpec::Sl { .. } => {}
            AlgebraSpec::Su { .. } => {
                let h = self.form().expect("SU has a form");
                out.extend(
                    x.conj_transpose()
                        .mul(&h)
                        .add(&h.mul(x))
                        .entries()
                        .iter()
                        .cloned(),
                );
            }
            AlgebraSpec::Sp { .. } | AlgebraSpec::So { .. } => {
                let j = self.form().expect("family has a form");
                out.extend(
                    x.transpose()
                        .mul(&j)
                        .add(&j.mul(x))
                        .entries()
                        .iter()
                        .cloned(),
                );
            }
        }
        out
    }

    pub fn satisfies_constraints(&self, x: &CMatrix) -> bool {
        if self.scalar_field() == ScalarField::Rational && !x.is_real() {
            return false;
        }
        self.constraint_residual(x).iter().all(Zero::is_zero)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Sl { n } => write!(f, "sl:n={n}"),
            AlgebraSpec::Su { p, q } => write!(f, "su:p={p},q={q}"),
            AlgebraSpec::Sp { n } => write!(f, "sp:n={n}"),
            AlgebraSpec::So { p, q } => write!(f, "so:p={p},q={q}"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    /// Parses `sl:n=2`, `su:p=1,q=1`, `sp:n=1`, `so:p=1,q=1` and validates the ranges.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidSpec(format!("{s:?}: {why}"));
        let (fam, params) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected family:params"))?;
        let mut kv = BTreeMap::new();
        for part in params.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| bad("parameter is not a non-negative integer"))?;
            if kv.insert(k.trim().to_string(), v).is_some() {
                return Err(bad("repeated parameter"));
            }
        }
        let take = |kv: &mut BTreeMap<String, usize>, key: &str| {
            kv.remove(key)
                .ok_or_else(|| bad(&format!("missing parameter {key}")))
        };
        let spec = match fam.trim().to_ascii_lowercase().as_str() {
            "sl" => AlgebraSpec::Sl {
                n: take(&mut kv, "n")?,
            },
            "sp" => AlgebraSpec::Sp {
                n: take(&mut kv, "n")?,
            },
            "su" => AlgebraSpec::Su {
                p: take(&mut kv, "p")?,
                q: take(&mut kv, "q")?,
            },
            "so" => AlgebraSpec::So {
                p: take(&mut kv, "p")?,
                q: take(&mut kv, "q")?,
            },
            _ => return Err(bad("unknown family")),
        };
        if !kv.is_empty() {
            return Err(bad("unexpected parameters"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The two isotropic halves of `g_{±1}` for `sl(n+2, R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

#[derive(Clone, Debug)]
pub struct BasisVector {
    pub matrix: CMatrix,
    pub degree: i32,
    pub label: String,
    pub side: Option<Side>,
}

/// A matrix in a particular algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    spec: AlgebraSpec,
    matrix: CMatrix,
}

impl AlgebraElement {
    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.spec, other.spec,
            "adding elements of different algebras"
        );
        Self {
            spec: self.spec,
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            self.spec, other.spec,
            "subtracting elements of different algebras"
        );
        Self {
            spec: self.spec,
            matrix: self.matrix.sub(&other.matrix),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            spec: self.spec,
            matrix: self.matrix.scale(&re(s.clone())),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            spec: self.spec,
            matrix: self.matrix.neg(),
        }
    }

    /// Wraps a matrix without checking membership. Callers in this crate use it
    /// only for results of operations that preserve the algebra.
    pub(crate) fn from_matrix_unchecked(spec: AlgebraSpec, matrix: CMatrix) -> Self {
        Self { spec, matrix }
    }
}

/// Pass/fail per contact-grading axiom with offending basis indices on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub algebra: AlgebraSpec,
    pub dims: [usize; 5],
    pub defining_constraints: bool,
    pub g_minus2_one_dimensional: bool,
    pub g_plus_minus1_dims_match: bool,
    pub grading_element: bool,
    pub grading_compatible: bool,
    pub g_minus1_pairing_nondegenerate: bool,
    pub g_minus2_g2_spans_e: bool,
    pub jacobi: bool,
    pub trace_pairing_graded: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lr_isotropic: Option<bool>,
    pub counterexamples: BTreeMap<String, Vec<usize>>,
}

impl VerificationReport {
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut v = vec![
            ("defining_constraints", self.defining_constraints),
            ("g_minus2_one_dimensional", self.g_minus2_one_dimensional),
            ("g_plus_minus1_dims_match", self.g_plus_minus1_dims_match),
            ("grading_element", self.grading_element),
            ("grading_compatible", self.grading_compatible),
            (
                "g_minus1_pairing_nondegenerate",
                self.g_minus1_pairing_nondegenerate,
            ),
            ("g_minus2_g2_spans_e", self.g_minus2_g2_spans_e),
            ("jacobi", self.jacobi),
            ("trace_pairing_graded", self.trace_pairing_graded),
        ];
        if let Some(b) = self.lr_isotropic {
            v.push(("lr_isotropic", b));
        }
        v
    }

    pub fn all_passed(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

/// Sparse structure constants: `[X_a, X_b] = Σ c · X_k` for `(k, c)` in `sc[a][b]`.
pub type StructureConstants = Vec<Vec<Vec<(usize, Rational)>>>;

#[derive(Clone, Debug)]
pub struct GradedContactAlgebra {
    spec: AlgebraSpec,
    weights: Vec<i32>,
    basis: Vec<BasisVector>,
    offsets: [usize; 6],
    grading_element: CMatrix,
    pivots: Vec<usize>,
    pivot_inverse: QMatrix,
    structure: StructureConstants,
    trace_form: QMatrix,
    frobenius_form: QMatrix,
}

impl GradedContactAlgebra {
    /// Builds the algebra and checks every contact-grading axiom.
    pub fn build(spec: AlgebraSpec) -> Result<Self> {
        spec.validate()?;
        let basis = match spec {
            AlgebraSpec::Sl { n } => sl_basis(n),
            AlgebraSpec::Su { .. } => su_basis(&spec),
            AlgebraSpec::Sp { .. } | AlgebraSpec::So { .. } => kernel_basis(&spec),
        };
        let alg = Self::from_basis(spec, basis)?;
        let report = alg.verify_contact_grading();
        if !report.all_passed() {
            let failed: Vec<&str> = report
                .checks()
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(n, _)| n)
                .collect();
            return Err(Error::ConstructionFailure(format!(
                "{spec}: failed {}",
                failed.join(", ")
            )));
        }
        Ok(alg)
    }

    fn from_basis(spec: AlgebraSpec, basis: Vec<BasisVector>) -> Result<Self> {
        let weights = spec.grading_weights();
        let n = spec.matrix_size();
        let grading_element = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                re(int(weights[i] as i64))
            } else {
                Gaussian::zero()
            }
        });
        let mut offsets = [0usize; 6];
        for (slot, d) in DEGREES.iter().enumerate() {
            offsets[slot + 1] = offsets[slot] + basis.iter().filter(|b| b.degree == *d).count();
        }
        if basis.windows(2).any(|w| w[0].degree > w[1].degree) {
            return Err(Error::ConstructionFailure(
                "basis not sorted by degree".into(),
            ));
        }
        let rows: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(&b.matrix)).collect();
        let m = Matrix::from_rows(rows);
        // pivot columns of the flattened basis give a square invertible block
        let (_, cols) = m.rref();
        if cols.len() != basis.len() {
            return Err(Error::ConstructionFailure(format!(
                "{spec}: basis is linearly dependent"
            )));
        }
        let sub = Matrix::from_fn(basis.len(), basis.len(), |i, j| m[(i, cols[j])].clone());
        let pivot_inverse = sub
            .inverse()
            .ok_or_else(|| Error::ConstructionFailure("singular pivot block".into()))?;
        let mut alg = Self {
            spec,
            weights,
            basis,
            offsets,
            grading_element,
            pivots: cols,
            pivot_inverse,
            structure: Vec::new(),
            trace_form: QMatrix::zeros(0, 0),
            frobenius_form: QMatrix::zeros(0, 0),
        };
        alg.structure = alg.compute_structure_constants()?;
        let d = alg.dim();
        alg.trace_form = Matrix::from_fn(d, d, |a, b| {
            alg.basis[a].matrix.mul(&alg.basis[b].matrix).trace().re
        });
        alg.frobenius_form = Matrix::from_fn(d, d, |a, b| {
            alg.basis[a]
                .matrix
                .mul(&alg.basis[b].matrix.conj_transpose())
                .trace()
                .re
        });
        Ok(alg)
    }

    fn compute_structure_constants(&self) -> Result<StructureConstants> {
        let d = self.dim();
        let mut sc = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in (a + 1)..d {
                let br = self.basis[a].matrix.commutator(&self.basis[b].matrix);
                let c = self.try_coords(&br)?;
                let sparse: Vec<(usize, Rational)> = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                sc[b][a] = sparse.iter().map(|(k, v)| (*k, -v.clone())).collect();
                sc[a][b] = sparse;
            }
        }
        Ok(sc)
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.spec.matrix_size()
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    pub fn dims(&self) -> [usize; 5] {
        let mut d = [0; 5];
        for (slot, dd) in d.iter_mut().enumerate() {
            *dd = self.offsets[slot + 1] - self.offsets[slot];
        }
        d
    }

    /// Indices of the basis vectors of degree `i`.
    pub fn degree_range(&self, i: i32) -> Range<usize> {
        if !(-2..=2).contains(&i) {
            return 0..0;
        }
        let slot = (i + 2) as usize;
        self.offsets[slot]..self.offsets[slot + 1]
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn basis_element(&self, k: usize) -> AlgebraElement {
        AlgebraElement {
            spec: self.spec,
            matrix: self.basis[k].matrix.clone(),
        }
    }

    pub fn degree_of(&self, k: usize) -> i32 {
        self.basis[k].degree
    }

    pub fn grading_element(&self) -> AlgebraElement {
        AlgebraElement {
            spec: self.spec,
            matrix: self.grading_element.clone(),
        }
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.structure
    }

    /// Gram matrix of `Re tr(XY)` on the basis.
    pub fn trace_form(&self) -> &QMatrix {
        &self.trace_form
    }

    /// Gram matrix of `Re tr(XY†)` on the basis, a positive definite inner product.
    pub fn frobenius_form(&self) -> &QMatrix {
        &self.frobenius_form
    }

    /// Accepts a matrix if it lies in the algebra.
    pub fn element(&self, matrix: CMatrix) -> Result<AlgebraElement> {
        let n = self.matrix_size();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::NotInAlgebra(format!("expected {n}x{n} matrix")));
        }
        if !self.spec.satisfies_constraints(&matrix) {
            return Err(Error::NotInAlgebra(format!(
                "defining constraints of {} violated",
                self.spec
            )));
        }
        Ok(AlgebraElement {
            spec: self.spec,
            matrix,
        })
    }

    pub fn zero(&self) -> AlgebraElement {
        let n = self.matrix_size();
        AlgebraElement {
            spec: self.spec,
            matrix: CMatrix::zeros(n, n),
        }
    }

    pub fn from_coords(&self, coords: &[Rational]) -> AlgebraElement {
        assert_eq!(coords.len(), self.dim());
        AlgebraElement {
            spec: self.spec,
            matrix: self.matrix_from_coords(coords),
        }
    }

    pub(crate) fn matrix_from_coords(&self, coords: &[Rational]) -> CMatrix {
        let n = self.matrix_size();
        let mut m = CMatrix::zeros(n, n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let e = &b.matrix[(i, j)];
                    if !e.is_zero() {
                        m[(i, j)] = m[(i, j)].clone() + e.clone() * re(c.clone());
                    }
                }
            }
        }
        m
    }

    /// Coordinates of an element in the basis.
    pub fn coords(&self, x: &AlgebraElement) -> Result<Vec<Rational>> {
        self.check(x)?;
        self.try_coords(&x.matrix)
    }

    /// Coordinates of an arbitrary matrix, failing if it is not in the span.
    pub fn try_coords(&self, m: &CMatrix) -> Result<Vec<Rational>> {
        let flat = flatten(m);
        let v: Vec<Rational> = self.pivots.iter().map(|&p| flat[p].clone()).collect();
        let coords = row_times(&v, &self.pivot_inverse);
        if self.matrix_from_coords(&coords) != *m {
            return Err(Error::NotInAlgebra(format!(
                "matrix is not in the span of the {} basis",
                self.spec
            )));
        }
        Ok(coords)
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.spec == self.spec {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(AlgebraElement {
            spec: self.spec,
            matrix: x.matrix.commutator(&y.matrix),
        })
    }

    /// Bracket of two coordinate vectors through the structure constants.
    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa.clone() * yb.clone();
                for (k, c) in &self.structure[a][b] {
                    out[*k] += f.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Degree-`i` part of a matrix by masking entries.
    pub fn degree_part(&self, m: &CMatrix, i: i32) -> CMatrix {
        let w = &self.weights;
        Matrix::from_fn(m.rows(), m.cols(), |a, b| {
            if w[a] - w[b] == i {
                m[(a, b)].clone()
            } else {
                Gaussian::zero()
            }
        })
    }

    /// Nonzero homogeneous components of `x`.
    pub fn grade_decompose(&self, x: &AlgebraElement) -> Result<BTreeMap<i32, AlgebraElement>> {
        self.check(x)?;
        Ok(DEGREES
            .iter()
            .map(|&i| (i, self.degree_part(&x.matrix, i)))
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| {
                (
                    i,
                    AlgebraElement {
                        spec: self.spec,
                        matrix: m,
                    },
                )
            })
            .collect())
    }

    /// `Re tr(XY)`.
    pub fn trace_pairing(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.matrix.mul(&y.matrix).trace().re)
    }

    /// Coefficient of the `g₋₂` component of `m` relative to the `g₋₂` basis vector.
    pub fn g_minus2_coefficient(&self, m: &CMatrix) -> Rational {
        let k = self.degree_range(-2).start;
        let part = self.degree_part(m, -2);
        let b = &self.basis[k].matrix;
        let n = m.rows();
        for i in 0..n {
            for j in 0..n {
                if !b[(i, j)].is_zero() {
                    let c = part[(i, j)].clone() / b[(i, j)].clone();
                    return c.re;
                }
            }
        }
        Rational::zero()
    }

    /// Replaces one structure constant `c^k_{ab}` (and its antisymmetric partner).
    /// Exists so that verification can be exercised on deliberately broken data.
    #[doc(hidden)]
    pub fn with_structure_constant(&self, a: usize, b: usize, k: usize, value: Rational) -> Self {
        let mut out = self.clone();
        for (x, y, v) in [(a, b, value.clone()), (b, a, -value)] {
            let entry = &mut out.structure[x][y];
            entry.retain(|(kk, _)| *kk != k);
            if !v.is_zero() {
                entry.push((k, v));
                entry.sort_by_key(|(kk, _)| *kk);
            }
        }
        out
    }

    pub fn verify_contact_grading(&self) -> VerificationReport {
        let d = self.dim();
        let dims = self.dims();
        let mut cx: BTreeMap<String, Vec<usize>> = BTreeMap::new();

        let bad: Vec<usize> = (0..d)
            .filter(|&k| !self.spec.satisfies_constraints(&self.basis[k].matrix))
            .collect();
        let defining_constraints = bad.is_empty();
        if !defining_constraints {
            cx.insert("defining_constraints".into(), bad);
        }

        let g_minus2_one_dimensional = dims[0] == 1 && dims[4] == 1;
        let g_plus_minus1_dims_match = dims[1] == dims[3] && dims[1] > 0;

        let mut grading_element = true;
        for k in 0..d {
            let br = self.grading_element.commutator(&self.basis[k].matrix);
            if br
                != self.basis[k]
                    .matrix
                    .scale(&re(int(self.basis[k].degree as i64)))
            {
                grading_element = false;
                cx.entry("grading_element".into()).or_default().push(k);
            }
        }
        if self.try_coords(&self.grading_element).map_or(true, |c| {
            c.iter()
                .enumerate()
                .any(|(k, v)| !v.is_zero() && self.degree_of(k) != 0)
        }) {
            grading_element = false;
        }

        // structure constants must reproduce the matrix bracket and respect degrees
        let mut grading_compatible = true;
        'outer: for a in 0..d {
            for b in 0..d {
                let br = self.basis[a].matrix.commutator(&self.basis[b].matrix);
                let mut coeffs = vec![Rational::zero(); d];
                for (k, c) in &self.structure[a][b] {
                    coeffs[*k] = c.clone();
                }
                let target = self.degree_of(a) + self.degree_of(b);
                let degrees_ok = self.structure[a][b]
                    .iter()
                    .all(|(k, _)| self.degree_of(*k) == target);
                if !degrees_ok || self.matrix_from_coords(&coeffs) != br {
                    grading_compatible = false;
                    cx.insert("grading_compatible".into(), vec![a, b]);
                    break 'outer;
                }
            }
        }

        let m1 = self.degree_range(-1);
        let m2 = self.degree_range(-2);
        let pairing = self.g_minus1_gram();
        let g_minus1_pairing_nondegenerate =
            m2.len() == 1 && !m1.is_empty() && !pairing.determinant().is_zero();

        let g_minus2_g2_spans_e = match (m2.clone().next(), self.degree_range(2).next()) {
            (Some(x), Some(z)) => {
                let br = self.basis[z].matrix.commutator(&self.basis[x].matrix);
                let e = &self.grading_element;
                // br must be a nonzero multiple of E
                let k = (0..e.rows()).find(|&i| !e[(i, i)].is_zero()).unwrap_or(0);
                let lambda = br[(k, k)].clone() / e[(k, k)].clone();
                !lambda.is_zero() && br == e.scale(&lambda)
            }
            _ => false,
        };

        let mut jacobi = true;
        'jac: for a in 0..d {
            for b in (a + 1)..d {
                for c in (b + 1)..d {
                    if !self.jacobi_holds(a, b, c) {
                        jacobi = false;
                        cx.insert("jacobi".into(), vec![a, b, c]);
                        break 'jac;
                    }
                }
            }
        }

        let mut trace_pairing_graded = true;
        for a in 0..d {
            for b in 0..d {
                if self.degree_of(a) + self.degree_of(b) != 0 && !self.trace_form[(a, b)].is_zero()
                {
                    trace_pairing_graded = false;
                    cx.entry("trace_pairing_graded".into())
                        .or_insert_with(|| vec![a, b]);
                }
            }
        }
        for i in [1, 2] {
            let (p, m) = (self.degree_range(i), self.degree_range(-i));
            if p.len() != m.len() {
                trace_pairing_graded = false;
                continue;
            }
            let g = Matrix::from_fn(p.len(), m.len(), |x, y| {
                self.trace_form[(p.start + x, m.start + y)].clone()
            });
            if p.is_empty() || g.determinant().is_zero() {
                trace_pairing_graded = false;
            }
        }

        let lr_isotropic = (self.spec.family() == Family::Sl).then(|| {
            m1.clone().all(|a| {
                m1.clone().all(|b| {
                    self.basis[a].side != self.basis[b].side
                        || pairing[(a - m1.start, b - m1.start)].is_zero()
                })
            })
        });

        VerificationReport {
            algebra: self.spec,
            dims,
            defining_constraints,
            g_minus2_one_dimensional,
            g_plus_minus1_dims_match,
            grading_element,
            grading_compatible,
            g_minus1_pairing_nondegenerate,
            g_minus2_g2_spans_e,
            jacobi,
            trace_pairing_graded,
            lr_isotropic,
            counterexamples: cx,
        }
    }

    /// Gram matrix of the `g₋₂`-valued bracket on the `g₋₁` basis, read off the
    /// structure constants.
    pub fn g_minus1_gram(&self) -> QMatrix {
        let m1 = self.degree_range(-1);
        let Some(x) = self.degree_range(-2).next() else {
            return QMatrix::zeros(m1.len(), m1.len());
        };
        Matrix::from_fn(m1.len(), m1.len(), |i, j| {
            self.structure[m1.start + i][m1.start + j]
                .iter()
                .find(|(k, _)| *k == x)
                .map_or_else(Rational::zero, |(_, c)| c.clone())
        })
    }

    fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let d = self.dim();
        let mut total = vec![Rational::zero(); d];
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (k, c1) in &self.structure[y][z] {
                for (m, c2) in &self.structure[x][*k] {
                    total[*m] += c1.clone() * c2.clone();
                }
            }
        }
        total.iter().all(Zero::is_zero)
    }
}

/// Real coordinates of a matrix: real parts followed by imaginary parts.
pub(crate) fn flatten(m: &CMatrix) -> Vec<Rational> {
    m.entries()
        .iter()
        .map(|z| z.re.clone())
        .chain(m.entries().iter().map(|z| z.im.clone()))
        .collect()
}

fn row_times(v: &[Rational], m: &QMatrix) -> Vec<Rational> {
    (0..m.cols())
        .map(|j| {
            v.iter().enumerate().fold(Rational::zero(), |acc, (i, x)| {
                if x.is_zero() || m[(i, j)].is_zero() {
                    acc
                } else {
                    acc + x.clone() * m[(i, j)].clone()
                }
            })
        })
        .collect()
}

fn unit(n: usize, i: usize, j: usize, v: Gaussian) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m[(i, j)] = v;
    m
}

fn bv(matrix: CMatrix, degree: i32, name: String, side: Option<Side>) -> BasisVector {
    BasisVector {
        matrix,
        degree,
        label: format!("g{degree}:{name}"),
        side,
    }
}

fn sl_basis(n: usize) -> Vec<BasisVector> {
    let size = n + 2;
    let last = size - 1;
    let one = || re(int(1));
    let mut b = vec![bv(unit(size, last, 0, one()), -2, "x".into(), None)];
    for i in 1..=n {
        b.push(bv(
            unit(size, i, 0, one()),
            -1,
            format!("L{i}"),
            Some(Side::L),
        ));
    }
    for i in 1..=n {
        b.push(bv(
            unit(size, last, i, one()),
            -1,
            format!("R{i}"),
            Some(Side::R),
        ));
    }
    let mut e = unit(size, 0, 0, one());
    e[(last, last)] = -one();
    b.push(bv(e, 0, "E".into(), None));
    for k in 1..=n {
        let mut h = unit(size, k, k, one());
        h[(last, last)] = -one();
        b.push(bv(h, 0, format!("H{k}"), None));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                b.push(bv(unit(size, i, j, one()), 0, format!("A{i}{j}"), None));
            }
        }
    }
    for i in 1..=n {
        b.push(bv(
            unit(size, 0, i, one()),
            1,
            format!("L{i}"),
            Some(Side::L),
        ));
    }
    for i in 1..=n {
        b.push(bv(
            unit(size, i, last, one()),
            1,
            format!("R{i}"),
            Some(Side::R),
        ));
    }
    b.push(bv(unit(size, 0, last, one()), 2, "z".into(), None));
    b
}

fn su_basis(spec: &AlgebraSpec) -> Vec<BasisVector> {
    let sig = spec.signature();
    let m = sig.len();
    let size = m + 2;
    let last = size - 1;
    let i = imag_unit;
    let one = || re(int(1));
    let s = |k: usize| re(int(sig[k - 1]));
    let mut b = vec![bv(unit(size, last, 0, i()), -2, "x".into(), None)];
    for k in 1..=m {
        let mut x = unit(size, k, 0, one());
        x[(last, k)] = -s(k);
        b.push(bv(x, -1, format!("X{k}"), None));
        let mut y = unit(size, k, 0, i());
        y[(last, k)] = i() * s(k);
        b.push(bv(y, -1, format!("iX{k}"), None));
    }
    let mut e = unit(size, 0, 0, one());
    e[(last, last)] = -one();
    b.push(bv(e, 0, "E".into(), None));
    for k in 1..=m {
        let half = gauss(Rational::zero(), frac(-1, 2));
        let mut d = unit(size, 0, 0, half.clone());
        d[(k, k)] = i();
        d[(last, last)] = half;
        b.push(bv(d, 0, format!("D{k}"), None));
    }
    for j in 1..=m {
        for k in (j + 1)..=m {
            let sg = s(j) * s(k);
            let mut a = unit(size, j, k, one());
            a[(k, j)] = -sg.clone();
            b.push(bv(a, 0, format!("A{j}{k}"), None));
            let mut c = unit(size, j, k, i());
            c[(k, j)] = sg * i();
            b.push(bv(c, 0, format!("iA{j}{k}"), None));
        }
    }
    for k in 1..=m {
        let mut z = unit(size, 0, k, one());
        z[(k, last)] = -s(k);
        b.push(bv(z, 1, format!("Z{k}"), None));
        let mut w = unit(size, 0, k, i());
        w[(k, last)] = i() * s(k);
        b.push(bv(w, 1, format!("iZ{k}"), None));
    }
    b.push(bv(unit(size, 0, last, i()), 2, "z".into(), None));
    b
}

/// Basis of the degree-`i` part of the algebra computed as the kernel of the
/// defining constraints restricted to matrices supported in degree `i`.
pub fn degree_kernel(spec: &AlgebraSpec, degree: i32) -> Vec<CMatrix> {
    let n = spec.matrix_size();
    let w = spec.grading_weights();
    let complex = spec.scalar_field() == ScalarField::Gaussian;
    let mut unknowns: Vec<CMatrix> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if w[a] - w[b] == degree {
                unknowns.push(unit(n, a, b, re(int(1))));
                if complex {
                    unknowns.push(unit(n, a, b, imag_unit()));
                }
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let columns: Vec<Vec<Rational>> = unknowns
        .iter()
        .map(|u| {
            let r = spec.constraint_residual(u);
            r.iter()
                .map(|z| z.re.clone())
                .chain(r.iter().map(|z| z.im.clone()))
                .collect()
        })
        .collect();
    let constraint = Matrix::from_rows(columns).transpose();
    constraint
        .kernel()
        .into_iter()
        .map(|v| {
            let mut m = CMatrix::zeros(n, n);
            for (c, u) in v.iter().zip(&unknowns) {
                if !c.is_zero() {
                    m = m.add(&u.scale(&re(c.clone())));
                }
            }
            normalize_sign(m)
        })
        .collect()
}

/// Scales so that the first nonzero real coordinate is positive.
fn normalize_sign(m: CMatrix) -> CMatrix {
    let first = flatten(&m).into_iter().find(|x| !x.is_zero());
    match first {
        Some(x) if x.is_negative() => m.neg(),
        _ => m,
    }
}

fn kernel_basis(spec: &AlgebraSpec) -> Vec<BasisVector> {
    let mut out = Vec::new();
    for d in DEGREES {
        let mut kernel = degree_kernel(spec, d);
        if d == 0 {
            // put the grading element first so that it is a basis vector
            let n = spec.matrix_size();
            let w = spec.grading_weights();
            let e = Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    re(int(w[i] as i64))
                } else {
                    Gaussian::zero()
                }
            });
            let mut rows: Vec<Vec<Rational>> = vec![flatten(&e)];
            let mut chosen = vec![e];
            for k in kernel.drain(..) {
                rows.push(flatten(&k));
                if crate::linalg::span_rank(&rows) == rows.len() {
                    chosen.push(k);
                } else {
                    rows.pop();
                }
            }
            kernel = chosen;
        }
        for (k, m) in kernel.into_iter().enumerate() {
            let name = if d == 0 && k == 0 {
                "E".to_string()
            } else {
                format!("b{k}")
            };
            out.push(bv(m, d, name, None));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> GradedContactAlgebra {
        GradedContactAlgebra::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parses_and_validates_specs() {
        assert_eq!(
            "sl:n=2".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::Sl { n: 2 }
        );
        assert_eq!(
            "su:p=1,q=1".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::Su { p: 1, q: 1 }
        );
        assert_eq!(
            "so:q=1,p=1".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::So { p: 1, q: 1 }
        );
        for bad in [
            "sl:n=0",
            "su:p=0,q=0",
            "sl",
            "xx:n=1",
            "sl:n=1,m=2",
            "sp:n=-1",
            "so:p=1",
        ] {
            assert!(
                matches!(bad.parse::<AlgebraSpec>(), Err(Error::InvalidSpec(_))),
                "{bad}"
            );
        }
        for s in ["sl:n=3", "su:p=2,q=0", "sp:n=1", "so:p=1,q=1"] {
            assert_eq!(s.parse::<AlgebraSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn sl3_dimensions() {
        let alg = build("sl:n=1");
        assert_eq!(alg.dims(), [1, 2, 2, 2, 1]);
        assert_eq!(alg.dim(), 8);
        assert_eq!(build("sl:n=2").dims(), [1, 4, 5, 4, 1]);
    }

    #[test]
    fn su_dimensions_and_g_minus2() {
        let alg = build("su:p=1,q=0");
        assert_eq!(alg.dim(), 8);
        let x = &alg.basis()[0].matrix;
        assert_eq!(x[(2, 0)], imag_unit());
        assert_eq!(x.entries().iter().filter(|z| !z.is_zero()).count(), 1);
    }

    #[test]
    fn explicit_bases_span_the_constraint_kernels() {
        for s in ["sl:n=1", "sl:n=2", "su:p=1,q=0", "su:p=1,q=1", "su:p=0,q=2"] {
            let alg = build(s);
            for d in DEGREES {
                assert_eq!(
                    degree_kernel(&alg.spec(), d).len(),
                    alg.degree_range(d).len(),
                    "{s} degree {d}"
                );
            }
        }
    }

    #[test]
    fn sl3_bracket_of_extreme_vectors_is_e() {
        let alg = build("sl:n=1");
        let z = alg.basis_element(alg.degree_range(2).start);
        let x = alg.basis_element(alg.degree_range(-2).start);
        assert_eq!(alg.bracket(&z, &x).unwrap(), alg.grading_element());
    }

    #[test]
    fn su_g_minus2_component_of_bracket() {
        let alg = build("su:p=1,q=1");
        let r = alg.degree_range(-1);
        for a in r.clone() {
            for b in r.clone() {
                let (xa, xb) = (alg.basis_element(a), alg.basis_element(b));
                let br = alg.bracket(&xa, &xb).unwrap();
                let col =
                    |m: &CMatrix| -> Vec<Gaussian> { (1..3).map(|k| m[(k, 0)].clone()).collect() };
                let (x, y) = (col(xa.matrix()), col(xb.matrix()));
                let herm = |u: &[Gaussian], v: &[Gaussian]| -> Gaussian {
                    let sig = [1, -1];
                    (0..2).fold(Gaussian::zero(), |acc, k| {
                        acc + u[k].conj() * re(int(sig[k])) * v[k].clone()
                    })
                };
                assert_eq!(br.matrix()[(3, 0)], herm(&y, &x) - herm(&x, &y));
            }
        }
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let alg = build("sp:n=1");
        for k in 0..alg.dim() {
            let x = alg.basis_element(k);
            assert!(alg.bracket(&x, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn grade_decompose_of_e_and_mixed_sum() {
        let alg = build("sl:n=1");
        let e = alg.grading_element();
        let parts = alg.grade_decompose(&e).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&0], e);
        let picks: Vec<usize> = DEGREES.iter().map(|&d| alg.degree_range(d).start).collect();
        let sum = picks
            .iter()
            .fold(alg.zero(), |acc, &k| acc.add(&alg.basis_element(k)));
        let parts = alg.grade_decompose(&sum).unwrap();
        assert_eq!(parts.len(), 5);
        for (&d, &k) in DEGREES.iter().zip(&picks) {
            assert_eq!(parts[&d], alg.basis_element(k));
        }
    }

    #[test]
    fn trace_pairing_examples() {
        let alg = build("sl:n=1");
        let g1 = alg.degree_range(1);
        for a in g1.clone() {
            for b in g1.clone() {
                assert!(alg
                    .trace_pairing(&alg.basis_element(a), &alg.basis_element(b))
                    .unwrap()
                    .is_zero());
            }
        }
        let gm1 = alg.degree_range(-1);
        let gram = Matrix::from_fn(2, 2, |i, j| {
            alg.trace_form()[(g1.start + i, gm1.start + j)].clone()
        });
        assert!(!gram.determinant().is_zero());
        let e = alg.grading_element();
        assert_eq!(alg.trace_pairing(&e, &e).unwrap(), int(2));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = build("sl:n=1");
        let b = build("sp:n=1");
        assert_eq!(
            a.bracket(&a.grading_element(), &b.grading_element()),
            Err(Error::AlgebraMismatch)
        );
        assert_eq!(
            a.trace_pairing(&a.grading_element(), &b.grading_element()),
            Err(Error::AlgebraMismatch)
        );
    }

    #[test]
    fn non_members_are_rejected() {
        let alg = build("sl:n=1");
        assert!(alg.element(CMatrix::identity(3)).is_err());
        let mut m = CMatrix::zeros(3, 3);
        m[(0, 1)] = imag_unit();
        assert!(alg.element(m).is_err());
    }

    #[test]
    fn corrupted_structure_constant_fails_grading_check() {
        let alg = build("sl:n=1");
        let (a, b) = (alg.degree_range(2).start, alg.degree_range(-2).start);
        let (k, _) = alg.structure_constants()[a][b][0].clone();
        let broken = alg.with_structure_constant(a, b, k, Rational::zero());
        let report = broken.verify_contact_grading();
        assert!(!report.grading_compatible);
        assert!(report.counterexamples.contains_key("grading_compatible"));
        assert!(alg.verify_contact_grading().all_passed());
    }
}
