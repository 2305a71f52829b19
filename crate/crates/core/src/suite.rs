//! Verification suites: one runner per check family, each evaluated on a single
//! algebra with a seeded sample budget.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, AlgebraSpec, Family, GradedContactAlgebra};
use crate::error::Result;
use crate::group::GroupElement;
use crate::harmonic::{g0_action, harmonic_space, Cochain2, ComponentType};
use crate::linalg::CMatrix;
use crate::sample::{self, SampleRng};
use crate::scalar::{format_rational, gauss, int, re, Gaussian, Rational, ScalarField};
use crate::symmetry::{
    corner_frame, cr_symmetry, find_minus_identity, involutive_closed_form, is_involutive,
    is_symmetry, lagrangean_symmetry, solve_minus_identity, symmetry_square, SymmetryCandidate,
};
use crate::weyl::{
    almost_invariant_identity, bullet_action, connection_change_operator, curvature_shaped_tensor,
    grading_element_pairing, obstruction_pairing, uniqueness_verdict, FrameChange, GradedVector,
    Verdict,
};

/// The desk-scale algebras covered by the full report.
pub const DESK_ALGEBRAS: [&str; 9] = [
    "sl:n=1",
    "sl:n=2",
    "sl:n=3",
    "su:p=1,q=0",
    "su:p=1,q=1",
    "su:p=2,q=0",
    "sp:n=1",
    "sp:n=2",
    "so:p=1,q=1",
];

/// Integer range used by the exhaustive grids.
pub const GRID: std::ops::RangeInclusive<i64> = -2..=2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            samples: 100,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this family.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "n/a",
        })
    }
}

/// Check families, numbered in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    GradingAxioms,
    SymmetryClassification,
    Involutivity,
    CurvatureSignLaws,
    HarmonicTable,
    GradingSection,
    ObstructionPairing,
    WeylCalculus,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::GradingAxioms,
        Check::SymmetryClassification,
        Check::Involutivity,
        Check::CurvatureSignLaws,
        Check::HarmonicTable,
        Check::GradingSection,
        Check::ObstructionPairing,
        Check::WeylCalculus,
    ];

    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Check::GradingAxioms => "contact grading axioms",
            Check::SymmetryClassification => "symmetry classification",
            Check::Involutivity => "involutivity",
            Check::CurvatureSignLaws => "curvature sign laws",
            Check::HarmonicTable => "harmonic curvature types",
            Check::GradingSection => "grading section identities",
            Check::ObstructionPairing => "obstruction pairings",
            Check::WeylCalculus => "Weyl calculus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub check: Check,
    pub algebra: String,
    pub status: Status,
    pub detail: String,
}

impl Outcome {
    fn new(check: Check, alg: &AlgebraSpec, failures: Vec<String>, checked: String) -> Self {
        let (status, detail) = match failures.first() {
            None => (Status::Pass, checked),
            Some(f) => (
                Status::Fail,
                format!("{} failure(s); first: {f}", failures.len()),
            ),
        };
        Self {
            check,
            algebra: alg.to_string(),
            status,
            detail,
        }
    }

    fn skip(check: Check, alg: &AlgebraSpec, why: &str) -> Self {
        Self {
            check,
            algebra: alg.to_string(),
            status: Status::Skip,
            detail: why.into(),
        }
    }

    fn error(check: Check, alg: &AlgebraSpec, e: impl fmt::Display) -> Self {
        Self {
            check,
            algebra: alg.to_string(),
            status: Status::Fail,
            detail: format!("error: {e}"),
        }
    }
}

/// Sampler seeded by the run seed, the algebra and the check.
pub fn check_rng(seed: u64, spec: &AlgebraSpec, check: Check) -> SampleRng {
    // FNV-1a over the spec string keeps streams independent across algebras
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in spec.to_string().bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    sample::rng(seed ^ h ^ (check.number() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Runs one check on a spec; construction failures are reported as failures.
pub fn run_check(check: Check, spec: &AlgebraSpec, cfg: &SuiteConfig) -> Outcome {
    match GradedContactAlgebra::build(*spec) {
        Ok(alg) => run_on(check, &alg, cfg),
        Err(e) => Outcome::error(check, spec, e),
    }
}

pub fn run_on(check: Check, alg: &GradedContactAlgebra, cfg: &SuiteConfig) -> Outcome {
    let spec = alg.spec();
    let mut rng = check_rng(cfg.seed, &spec, check);
    let result = match check {
        Check::GradingAxioms => Ok(grading_axioms(alg)),
        Check::SymmetryClassification => symmetry_classification(alg, cfg.samples, &mut rng),
        Check::Involutivity => involutivity(alg, cfg.samples, &mut rng),
        Check::CurvatureSignLaws => curvature_sign_laws(alg),
        Check::HarmonicTable => Ok(harmonic_table(alg)),
        Check::GradingSection => grading_section(alg, cfg.samples, &mut rng),
        Check::ObstructionPairing => obstruction(alg, cfg.samples, &mut rng),
        Check::WeylCalculus => weyl_calculus(alg, cfg.samples, &mut rng),
    };
    result.unwrap_or_else(|e| Outcome::error(check, &spec, e))
}

/// All checks on one spec, in order.
pub fn run_all(spec: &AlgebraSpec, cfg: &SuiteConfig) -> Vec<Outcome> {
    match GradedContactAlgebra::build(*spec) {
        Ok(alg) => Check::ALL.iter().map(|&c| run_on(c, &alg, cfg)).collect(),
        Err(e) => Check::ALL
            .iter()
            .map(|&c| Outcome::error(c, spec, &e))
            .collect(),
    }
}

fn grading_axioms(alg: &GradedContactAlgebra) -> Outcome {
    let report = alg.verify_contact_grading();
    let failures = report
        .checks()
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.to_string())
        .collect();
    let detail = format!("{} axioms, dims {:?}", report.checks().len(), report.dims);
    Outcome::new(Check::GradingAxioms, &alg.spec(), failures, detail)
}

fn symmetry_classification(
    alg: &GradedContactAlgebra,
    samples: usize,
    rng: &mut SampleRng,
) -> Result<Outcome> {
    let check = Check::SymmetryClassification;
    let spec = alg.spec();
    let mut failures = Vec::new();
    let sol = solve_minus_identity(alg)?;
    if !sol.unique_up_to_scalars {
        failures.push(format!(
            "solution space of real dimension {} is not a line",
            sol.real_solution_dimension
        ));
    }
    let g0 = find_minus_identity(alg)?;
    if matches!(spec.family(), Family::Sl | Family::Su) {
        let expected = alg.projective(alg.group_element(corner_frame(alg.matrix_size()))?)?;
        if g0 != expected {
            failures.push("g0 is not diag(-1, 1, ..., 1, -1) modulo the center".into());
        }
    }
    for s in 0..samples {
        let z1 = sample::random_element(alg, &[1], rng);
        let z2 = sample::random_element(alg, &[2], rng);
        let cand = SymmetryCandidate::new(alg, g0.clone(), z1.clone(), z2.clone())?;
        if !is_symmetry(alg, &cand) {
            failures.push(format!("sample {s}: valid candidate rejected"));
        }
        // a random grading-preserving factor with a different g-1 action is never a symmetry
        let h0 = sample::random_g0(alg, rng);
        let h0p = alg.projective(h0.clone())?;
        let other = SymmetryCandidate::new(alg, h0p.clone(), z1, z2)?;
        let acts_as_minus_id = h0p == g0;
        if is_symmetry(alg, &other) != acts_as_minus_id {
            failures.push(format!("sample {s}: non-solution accepted"));
        }
    }
    let detail = format!(
        "g0 unique (real solution dimension {}), {samples} accepted and {samples} rejected samples",
        sol.real_solution_dimension
    );
    Ok(Outcome::new(check, &spec, failures, detail))
}

fn involutivity(
    alg: &GradedContactAlgebra,
    samples: usize,
    rng: &mut SampleRng,
) -> Result<Outcome> {
    let check = Check::Involutivity;
    let spec = alg.spec();
    let mut failures = Vec::new();
    let g0 = find_minus_identity(alg)?;
    for s in 0..samples {
        let z1 = sample::random_element(alg, &[1], rng);
        let z2 = sample::random_element(alg, &[2], rng);
        let cand = SymmetryCandidate::new(alg, g0.clone(), z1, z2.clone())?;
        let sq = alg.projective(symmetry_square(alg, &cand)?)?;
        let expected = alg.projective(alg.exp_nilpotent(&z2.scale(&int(2)))?)?;
        if sq != expected {
            failures.push(format!("sample {s}: square differs from exp(2 Z2)"));
        }
        if is_involutive(alg, &cand)? != z2.is_zero() {
            failures.push(format!("sample {s}: involutivity disagrees with Z2 = 0"));
        }
    }
    let grid = match spec.family() {
        Family::Sl => {
            let n = alg.matrix_size() - 2;
            let mut count = 0;
            for_each_tuple(2 * n + 1, |t| {
                count += 1;
                let v: Vec<Rational> = t[..n].iter().map(|&x| int(x)).collect();
                let w: Vec<Rational> = t[n..2 * n].iter().map(|&x| int(x)).collect();
                let gamma = int(t[2 * n]);
                if let Err(e) = closed_form_agrees(alg, lagrangean_symmetry(alg, &v, &w, &gamma)) {
                    failures.push(format!("V={v:?} W={w:?} gamma={gamma}: {e}"));
                }
            });
            format!(", {count} closed-form grid points")
        }
        Family::Su => {
            let n = alg.matrix_size() - 2;
            let sig = spec.signature();
            let mut count = 0;
            for_each_tuple(2 * n + 1, |t| {
                count += 1;
                let z: Vec<Gaussian> = (0..n)
                    .map(|i| gauss(int(t[2 * i]), int(t[2 * i + 1])))
                    .collect();
                let half_norm = z.iter().zip(&sig).fold(Rational::zero(), |acc, (zi, s)| {
                    acc + (zi.re.clone() * zi.re.clone() + zi.im.clone() * zi.im.clone()) * int(*s)
                }) / int(2);
                let w = gauss(half_norm, int(t[2 * n]));
                if let Err(e) = closed_form_agrees(alg, cr_symmetry(alg, &z, &w)) {
                    failures.push(format!("Z={z:?} w={w}: {e}"));
                }
            });
            format!(", {count} closed-form grid points")
        }
        _ => String::new(),
    };
    Ok(Outcome::new(
        check,
        &spec,
        failures,
        format!("{samples} squares{grid}"),
    ))
}

/// Compares the closed-form involutivity test with a direct one: the square is
/// central iff it is a scalar matrix.
fn closed_form_agrees(
    alg: &GradedContactAlgebra,
    raw: Result<GroupElement>,
) -> std::result::Result<(), String> {
    let raw = raw.map_err(|e| e.to_string())?;
    let closed = involutive_closed_form(alg, &raw).map_err(|e| e.to_string())?;
    let sq = raw.matrix().mul(raw.matrix());
    let direct = sq == CMatrix::identity(sq.rows()).scale(&sq[(0, 0)]);
    if closed != direct {
        return Err(format!(
            "closed form says {closed}, the square says {direct}"
        ));
    }
    Ok(())
}

/// Calls `f` on every tuple of the given length with entries in [`GRID`].
pub fn for_each_tuple(len: usize, mut f: impl FnMut(&[i64])) {
    let lo = *GRID.start();
    let hi = *GRID.end();
    let mut t = vec![lo; len];
    loop {
        f(&t);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            if t[i] < hi {
                t[i] += 1;
                break;
            }
            t[i] = lo;
            i += 1;
        }
    }
}

/// The expected sign of the `g₀` action on a component type.
pub fn sign_law(t: ComponentType) -> Rational {
    if t.homogeneity() % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn curvature_sign_laws(alg: &GradedContactAlgebra) -> Result<Outcome> {
    let check = Check::CurvatureSignLaws;
    let g0 = find_minus_identity(alg)?;
    let mut failures = Vec::new();
    let mut count = 0;
    for t in [
        ComponentType::TORSION_MINUS1,
        ComponentType::CURVATURE_G0,
        ComponentType::CURVATURE_G1,
    ] {
        let sign = sign_law(t);
        for c in Cochain2::basis_of_type(alg, t) {
            count += 1;
            if g0_action(alg, g0.representative(), &c)? != c.scale(&sign) {
                failures.push(format!("{t}: sign law violated"));
            }
        }
    }
    Ok(Outcome::new(
        check,
        &alg.spec(),
        failures,
        format!("{count} basis cochains"),
    ))
}

/// The nonzero harmonic component types listed for each family.
pub fn expected_harmonic_types(spec: &AlgebraSpec) -> Vec<ComponentType> {
    use ComponentType as T;
    match *spec {
        AlgebraSpec::Sl { n: 1 } => vec![T::CURVATURE_G1],
        AlgebraSpec::Sl { .. } => vec![T::TORSION_MINUS1, T::CURVATURE_G0],
        AlgebraSpec::Su { p, q } if p + q == 1 => vec![T::CURVATURE_G1],
        AlgebraSpec::Su { .. } => vec![T::TORSION_MINUS1, T::CURVATURE_G0],
        AlgebraSpec::Sp { .. } => vec![T::CURVATURE_G0],
        AlgebraSpec::So { .. } => vec![T::TORSION_MINUS1],
    }
}

fn harmonic_table(alg: &GradedContactAlgebra) -> Outcome {
    let check = Check::HarmonicTable;
    let spec = alg.spec();
    let report = harmonic_space(alg);
    let got = report.types();
    let expected = expected_harmonic_types(&spec);
    let describe = |ts: &[ComponentType]| {
        ts.iter()
            .map(|t| format!("{t} (l={})", t.homogeneity()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let found = report
        .components
        .iter()
        .map(|c| format!("{} (l={}, dim {})", c.component, c.homogeneity, c.dimension))
        .collect::<Vec<_>>()
        .join(", ");
    let mut failures = Vec::new();
    if !report.type_split_exact {
        failures.push("harmonic space does not split along component types".into());
    }
    if got != expected {
        failures.push(format!(
            "expected {}, computed {found}",
            describe(&expected)
        ));
    }
    Outcome::new(check, &spec, failures, found)
}

fn grading_section(
    alg: &GradedContactAlgebra,
    samples: usize,
    rng: &mut SampleRng,
) -> Result<Outcome> {
    let check = Check::GradingSection;
    let e = alg.grading_element();
    let mut failures = Vec::new();
    let types = [
        ComponentType::TORSION_MINUS1,
        ComponentType::CURVATURE_G0,
        ComponentType::CURVATURE_G1,
    ];
    for t in types {
        for s in 0..samples {
            let tensor = curvature_shaped_tensor(alg, -t.args.0, -t.args.1, t.value, || {
                sample::small_rational(rng)
            });
            let l = int(t.homogeneity() as i64);
            if bullet_action(alg, &e, &tensor)? != tensor.scale(&l) {
                failures.push(format!("{t}, sample {s}: E acts by a different scalar"));
            }
        }
    }
    for s in 0..samples {
        let slots = sample::random_slots(rng);
        let tensor = sample::random_homogeneous_tensor(alg, &slots, 4, rng);
        let Some(l) = tensor.homogeneity(alg) else {
            failures.push(format!("random tensor {s} is not homogeneous"));
            continue;
        };
        if bullet_action(alg, &e, &tensor)? != tensor.scale(&int(l as i64)) {
            failures.push(format!("random tensor {s}: E acts by a different scalar"));
        }
    }
    for s in 0..samples {
        let z2 = sample::random_nonzero_element(alg, &[2], rng);
        let (x, ok) = grading_element_pairing(alg, &z2)?;
        let a = alg.bracket(&z2, &x)?;
        if !ok || a != e {
            failures.push(format!("sample {s}: [Z2, X] != E"));
            continue;
        }
        let w = curvature_shaped_tensor(alg, -1, -1, 0, || sample::small_rational(rng));
        let y = curvature_shaped_tensor(alg, -2, -1, 1, || sample::small_rational(rng));
        if bullet_action(alg, &a, &w)? != w.scale(&int(2)) {
            failures.push(format!("sample {s}: [Z2, X] does not act as 2 on W"));
        }
        if bullet_action(alg, &a, &y)? != y.scale(&int(4)) {
            failures.push(format!("sample {s}: [Z2, X] does not act as 4 on Y"));
        }
    }
    let detail = format!(
        "{} typed and {samples} random tensors, {samples} Z2 pairings",
        3 * samples
    );
    Ok(Outcome::new(check, &alg.spec(), failures, detail))
}

fn g1_from_matrix(alg: &GradedContactAlgebra, m: CMatrix) -> Result<AlgebraElement> {
    let x = alg.element(m)?;
    alg.expect_degree(&x, 1)?;
    Ok(x)
}

fn obstruction(alg: &GradedContactAlgebra, samples: usize, rng: &mut SampleRng) -> Result<Outcome> {
    let check = Check::ObstructionPairing;
    let spec = alg.spec();
    let size = alg.matrix_size();
    let n = size - 2;
    let mut failures = Vec::new();
    let mut count = 0;
    let mut verify =
        |u1: AlgebraElement, expected: Rational, label: String, definite: bool| -> Result<()> {
            count += 1;
            let p = obstruction_pairing(alg, &u1)?;
            if !p.bracket_matches || p.coefficient != expected {
                failures.push(format!(
                    "{label}: coefficient {} expected {}",
                    p.coefficient, expected
                ));
            }
            let v = uniqueness_verdict(alg, &u1)?;
            if !v.criteria_agree {
                failures.push(format!(
                    "{label}: verdict disagrees with the pseudometric criterion"
                ));
            }
            if definite && !u1.is_zero() && v.verdict != Verdict::Obstructed {
                failures.push(format!("{label}: definite case not obstructed"));
            }
            Ok(())
        };
    match spec.family() {
        Family::Sl => {
            let mut grid_err = None;
            for_each_tuple(2 * n, |t| {
                let mut m = CMatrix::zeros(size, size);
                let mut st = Rational::zero();
                for k in 0..n {
                    m[(0, k + 1)] = re(int(t[k]));
                    m[(k + 1, size - 1)] = re(int(t[n + k]));
                    st += int(t[k] * t[n + k]);
                }
                let r = g1_from_matrix(alg, m)
                    .and_then(|u1| verify(u1, -st, format!("S,T={t:?}"), false));
                if let Err(e) = r {
                    grid_err.get_or_insert(e);
                }
            });
            if let Some(e) = grid_err {
                return Err(e);
            }
        }
        Family::Su => {
            let sig = spec.signature();
            let definite = sig.iter().all(|&s| s == 1);
            let mut grid_err = None;
            for_each_tuple(2 * n, |t| {
                let mut m = CMatrix::zeros(size, size);
                let mut norm = Rational::zero();
                for k in 0..n {
                    let r = gauss(int(t[2 * k]), int(t[2 * k + 1]));
                    m[(0, k + 1)] = r.clone();
                    m[(k + 1, size - 1)] = -(r.conj() * re(int(sig[k])));
                    norm += int((t[2 * k] * t[2 * k] + t[2 * k + 1] * t[2 * k + 1]) * sig[k]);
                }
                let r = g1_from_matrix(alg, m)
                    .and_then(|u1| verify(u1, -norm, format!("R={t:?}"), definite));
                if let Err(e) = r {
                    grid_err.get_or_insert(e);
                }
            });
            if let Some(e) = grid_err {
                return Err(e);
            }
            if definite {
                for _ in 0..samples {
                    let u1 = sample::random_nonzero_element(alg, &[1], rng);
                    if uniqueness_verdict(alg, &u1)?.verdict != Verdict::Obstructed {
                        failures
                            .push("random nonzero U1 in the definite case not obstructed".into());
                    }
                }
            }
        }
        f => {
            return Ok(Outcome::skip(
                check,
                &spec,
                &format!("no obstruction pairing for {f}"),
            ))
        }
    }
    Ok(Outcome::new(
        check,
        &spec,
        failures,
        format!("{count} grid points"),
    ))
}

fn weyl_calculus(
    alg: &GradedContactAlgebra,
    samples: usize,
    rng: &mut SampleRng,
) -> Result<Outcome> {
    let check = Check::WeylCalculus;
    let mut failures = Vec::new();
    for s in 0..samples {
        let u1 = sample::random_element(alg, &[1], rng);
        let u2 = sample::random_element(alg, &[2], rng);
        if !almost_invariant_identity(alg, &u1, &u2)? {
            failures.push(format!("sample {s}: almost-invariant identity fails"));
        }
        let u1b = sample::random_element(alg, &[1], rng);
        let u2b = sample::random_element(alg, &[2], rng);
        let x1 = sample::random_element(alg, &[-1], rng);
        let x2 = sample::small_rational(rng);
        let flat = GradedVector::new(alg, Rational::zero(), x1.clone())?;
        let d = |a: &AlgebraElement, b: &AlgebraElement, v: &GradedVector| {
            connection_change_operator(alg, &FrameChange::new(alg, a.clone(), b.clone())?, v)
        };
        let base = d(&u1, &u2, &flat)?;
        if base != alg.bracket(&u1, &x1)?.neg() || base != d(&u1, &u2b, &flat)? {
            failures.push(format!("sample {s}: xi_-2 = 0 limit wrong"));
        }
        if d(&u1.add(&u1b), &u2, &flat)? != base.add(&d(&u1b, &u2, &flat)?) {
            failures.push(format!("sample {s}: not linear in U1 at xi_-2 = 0"));
        }
        let v = GradedVector::new(alg, x2, alg.zero())?;
        let zero1 = alg.zero();
        if d(&zero1, &u2, &v)? != alg.bracket(&u2, &v.minus2_part(alg))?.neg() {
            failures.push(format!("sample {s}: U1 = 0 limit wrong"));
        }
    }
    Ok(Outcome::new(
        check,
        &alg.spec(),
        failures,
        format!("{samples} samples"),
    ))
}

/// JSON encoding of a matrix: a nested array of `"num/den"` strings for real
/// algebras, `{"re": …, "im": …}` for complex ones.
pub fn matrix_json(m: &CMatrix, field: ScalarField) -> Value {
    let part = |f: &dyn Fn(&Gaussian) -> &Rational| -> Value {
        Value::Array(
            m.to_rows()
                .iter()
                .map(|row| {
                    Value::Array(
                        row.iter()
                            .map(|z| Value::String(format_rational(f(z))))
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    match field {
        ScalarField::Rational => part(&|z| &z.re),
        ScalarField::Gaussian => json!({ "re": part(&|z| &z.re), "im": part(&|z| &z.im) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_cover_grid() {
        let mut n = 0;
        for_each_tuple(2, |_| n += 1);
        assert_eq!(n, 25);
    }

    #[test]
    fn sl3_suite_passes() {
        let spec: AlgebraSpec = "sl:n=1".parse().unwrap();
        let cfg = SuiteConfig {
            samples: 5,
            seed: 1,
        };
        for o in run_all(&spec, &cfg) {
            assert_eq!(o.status, Status::Pass, "{o:?}");
        }
    }

    #[test]
    fn unsupported_family_skips_obstruction() {
        let spec: AlgebraSpec = "sp:n=2".parse().unwrap();
        let o = run_check(Check::ObstructionPairing, &spec, &SuiteConfig::default());
        assert_eq!(o.status, Status::Skip);
    }
}
