//! Front end for the verification suites: a parsed [`RunConfig`] goes in, an
//! exit code and a text or JSON report come out.

use std::fmt::Write as _;
use std::io::Write;

use contact_symmetry::harmonic::harmonic_space;
use contact_symmetry::sample::{self, random_element};
use contact_symmetry::scalar::{format_gaussian, format_rational, int, parse_rational, Rational};
use contact_symmetry::suite::{self, Check, Outcome, Status, SuiteConfig, DESK_ALGEBRAS};
use contact_symmetry::symmetry::{find_minus_identity, is_involutive, is_symmetry};
use contact_symmetry::weyl::uniqueness_verdict;
use contact_symmetry::{AlgebraSpec, Error, GradedContactAlgebra, SymmetryCandidate};
use serde_json::{json, Value};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// JSON schema version emitted in every report.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    Symmetries,
    Harmonic,
    Obstruction,
    Report,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Symmetries => "symmetries",
            Command::Harmonic => "harmonic",
            Command::Obstruction => "obstruction",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// One run. The seed determines every sampled value.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Required by every command except `report`, where it narrows the list.
    pub algebra: Option<String>,
    pub samples: usize,
    pub format: Format,
    pub seed: u64,
    pub print_basis: bool,
    pub involutive_only: bool,
    /// Comma-separated `g₁` coordinates for `obstruction`.
    pub u1: Option<String>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            algebra: None,
            samples: 100,
            format: Format::Text,
            seed: 0,
            print_basis: false,
            involutive_only: false,
            u1: None,
        }
    }

    fn suite(&self) -> SuiteConfig {
        SuiteConfig {
            samples: self.samples,
            seed: self.seed,
        }
    }
}

/// A finished run: the report body and its exit code.
struct Run {
    text: String,
    json: Value,
    passed: bool,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::Parse(_) | Error::UnsupportedFamily(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

/// Runs `config`, writing the report to `out` and errors to `err`.
pub fn run(config: &RunConfig, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let result = match config.command {
        Command::Verify => verify(config),
        Command::Symmetries => symmetries(config),
        Command::Harmonic => harmonic(config),
        Command::Obstruction => obstruction(config),
        Command::Report => report(config),
    };
    match result {
        Ok(run) => {
            let written = match config.format {
                Format::Text => out.write_all(run.text.as_bytes()),
                Format::Json => {
                    let mut body = json!({
                        "schema": SCHEMA,
                        "command": config.command.name(),
                        "seed": config.seed,
                        "samples": config.samples,
                        "passed": run.passed,
                    });
                    if let (Value::Object(b), Value::Object(extra)) = (&mut body, run.json) {
                        b.extend(extra);
                    }
                    let s = serde_json::to_string_pretty(&body).expect("JSON values serialize");
                    writeln!(out, "{s}")
                }
            };
            if written.is_err() {
                return EXIT_FAIL;
            }
            if run.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_FAIL
        }
    }
}

fn parse_spec(config: &RunConfig) -> Result<AlgebraSpec, Failure> {
    let s = config
        .algebra
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("{} requires --alg", config.command.name())))?;
    Ok(s.parse()?)
}

fn build(config: &RunConfig) -> Result<GradedContactAlgebra, Failure> {
    Ok(GradedContactAlgebra::build(parse_spec(config)?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// `format_gaussian` without the `/1` denominators, for text tables.
fn compact(z: &contact_symmetry::scalar::Gaussian) -> String {
    format_gaussian(z)
        .replace("/1i", "i")
        .replace("/1+", "+")
        .replace("/1-", "-")
        .trim_end_matches("/1")
        .to_string()
}

fn basis_text(alg: &GradedContactAlgebra) -> String {
    let mut s = String::from("basis (index, degree, label, matrix rows):\n");
    for (k, b) in alg.basis().iter().enumerate() {
        let rows: Vec<String> = b
            .matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(compact).collect::<Vec<_>>().join(" "))
            .collect();
        let _ = writeln!(
            s,
            "  {k:>3} {:>3} {:<12} [{}]",
            b.degree,
            b.label,
            rows.join("; ")
        );
    }
    s
}

fn basis_json(alg: &GradedContactAlgebra) -> Value {
    let field = alg.spec().scalar_field();
    Value::Array(
        alg.basis()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                json!({
                    "index": k,
                    "degree": b.degree,
                    "label": b.label,
                    "matrix": suite::matrix_json(&b.matrix, field),
                })
            })
            .collect(),
    )
}

/// Adds the basis listing when `--print-basis` is set.
fn with_basis(config: &RunConfig, alg: &GradedContactAlgebra, mut run: Run) -> Run {
    if config.print_basis {
        run.text = format!("{}{}", basis_text(alg), run.text);
        if let Value::Object(m) = &mut run.json {
            m.insert("basis".into(), basis_json(alg));
        }
    }
    run
}

fn verify(config: &RunConfig) -> Result<Run, Failure> {
    let alg = build(config)?;
    let report = alg.verify_contact_grading();
    let d = report.dims;
    let mut text = format!(
        "{} (dim {}, graded dims {} {} {} {} {})\n",
        report.algebra,
        alg.dim(),
        d[0],
        d[1],
        d[2],
        d[3],
        d[4]
    );
    for (name, ok) in report.checks() {
        let _ = writeln!(text, "  {name:<32} {}", pass_fail(ok));
    }
    let passed = report.all_passed();
    let _ = writeln!(text, "{}", pass_fail(passed));
    let json = json!({ "algebra": report.algebra, "report": report });
    Ok(with_basis(config, &alg, Run { text, json, passed }))
}

fn symmetries(config: &RunConfig) -> Result<Run, Failure> {
    let alg = build(config)?;
    let field = alg.spec().scalar_field();
    let g0 = find_minus_identity(&alg)?;
    let mut rng = sample::rng(config.seed);
    let mut list = Vec::with_capacity(config.samples);
    let (mut bad, mut symmetric, mut involutive_count) = (0, 0, 0);
    for i in 0..config.samples {
        let z1 = random_element(&alg, &[1], &mut rng);
        // alternate between involutive and general candidates
        let z2 = if config.involutive_only || i % 2 == 0 {
            alg.zero()
        } else {
            random_element(&alg, &[2], &mut rng)
        };
        let cand = SymmetryCandidate::new(&alg, g0.clone(), z1, z2)?;
        let symmetry = is_symmetry(&alg, &cand);
        let involutive = is_involutive(&alg, &cand)?;
        if !symmetry || involutive != cand.z2().is_zero() {
            bad += 1;
        }
        symmetric += symmetry as usize;
        involutive_count += involutive as usize;
        list.push(json!({
            "z1": rationals(&alg.coords(cand.z1())?[alg.degree_range(1)]),
            "z2": rationals(&alg.coords(cand.z2())?[alg.degree_range(2)]),
            "matrix": suite::matrix_json(cand.group_element(&alg)?.matrix(), field),
            "symmetry": symmetry,
            "involutive": involutive,
        }));
    }
    let passed = bad == 0;
    let text = format!(
        "{}: {} candidates g0 exp(Z1) exp(Z2) with g0 = -id on g-1\n  symmetries: {}\n  involutive: {}\n  inconsistent: {bad}\n{}\n",
        alg.spec(),
        config.samples,
        symmetric,
        involutive_count,
        pass_fail(passed)
    );
    let json = json!({
        "algebra": alg.spec(),
        "g0": suite::matrix_json(g0.representative().matrix(), field),
        "candidates": list,
    });
    Ok(with_basis(config, &alg, Run { text, json, passed }))
}

fn harmonic(config: &RunConfig) -> Result<Run, Failure> {
    let alg = build(config)?;
    let report = harmonic_space(&alg);
    let expected = suite::expected_harmonic_types(&alg.spec());
    let passed = report.types() == expected;
    let c = report.chain_dims;
    let mut text = format!(
        "{} harmonic curvature (chain dims {} {} {})\n  homogeneity  type                 dimension\n",
        report.algebra, c[0], c[1], c[2]
    );
    for comp in &report.components {
        let _ = writeln!(
            text,
            "  {:>11}  {:<20} {}",
            comp.homogeneity, comp.label, comp.dimension
        );
    }
    let listed: Vec<String> = expected.iter().map(|t| t.to_string()).collect();
    let _ = writeln!(
        text,
        "  expected types: {}\n{}",
        listed.join(", "),
        if passed {
            "PASS"
        } else {
            "FAIL (type mismatch)"
        }
    );
    let json = json!({
        "algebra": report.algebra,
        "report": report,
        "expected_types": listed,
    });
    Ok(with_basis(config, &alg, Run { text, json, passed }))
}

fn obstruction(config: &RunConfig) -> Result<Run, Failure> {
    let alg = build(config)?;
    let raw = config
        .u1
        .as_deref()
        .ok_or_else(|| Failure::Usage("obstruction requires --u1".into()))?;
    let values: Vec<Rational> = raw
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    let g1 = alg.degree_range(1);
    if values.len() != g1.len() {
        return Err(Failure::Usage(format!(
            "--u1 needs {} coordinates in the g1 basis order, got {}",
            g1.len(),
            values.len()
        )));
    }
    let mut coords = vec![int(0); alg.dim()];
    for (k, v) in g1.zip(values) {
        coords[k] = v;
    }
    let u1 = alg.from_coords(&coords);
    let v = uniqueness_verdict(&alg, &u1)?;
    let verdict = serde_json::to_value(v.verdict).expect("verdict serializes");
    let verdict_name = verdict.as_str().unwrap_or_default().to_string();
    let text = format!(
        "{}\n  obstruction coefficient: {}\n  pseudometric value:      {}\n  verdict:                 {verdict_name}\n  criteria agree:          {}\n",
        alg.spec(),
        format_rational(&v.coefficient),
        format_rational(&v.pseudometric_value),
        yes_no(v.criteria_agree)
    );
    let json = json!({
        "algebra": alg.spec(),
        "u1": rationals(&coords[alg.degree_range(1)]),
        "coefficient": format_rational(&v.coefficient),
        "pseudometric_value": format_rational(&v.pseudometric_value),
        "verdict": verdict,
        "criteria_agree": v.criteria_agree,
    });
    Ok(with_basis(
        config,
        &alg,
        Run {
            text,
            json,
            passed: v.criteria_agree,
        },
    ))
}

fn report(config: &RunConfig) -> Result<Run, Failure> {
    let mut specs: Vec<AlgebraSpec> = match &config.algebra {
        Some(_) => vec![parse_spec(config)?],
        None => DESK_ALGEBRAS
            .iter()
            .map(|s| s.parse().expect("built-in specs parse"))
            .collect(),
    };
    specs.sort_by_key(|s| s.to_string());
    let cfg = config.suite();
    // one worker per algebra; results are collected in list order
    let results: Vec<Vec<Outcome>> = std::thread::scope(|scope| {
        let handles: Vec<_> = specs
            .iter()
            .map(|spec| scope.spawn(move || suite::run_all(spec, &cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });

    let mut text = String::from("algebra      ");
    for c in Check::ALL {
        let _ = write!(text, " {:>4}", c.number());
    }
    text.push('\n');
    for (spec, outcomes) in specs.iter().zip(&results) {
        let _ = write!(text, "{:<13}", spec.to_string());
        for o in outcomes {
            let _ = write!(text, " {:>4}", o.status.to_string());
        }
        text.push('\n');
    }
    text.push('\n');
    for c in Check::ALL {
        let _ = writeln!(text, "{:>2}  {}", c.number(), c.title());
    }
    let failures: Vec<&Outcome> = results
        .iter()
        .flatten()
        .filter(|o| o.status == Status::Fail)
        .collect();
    for o in &failures {
        let _ = writeln!(
            text,
            "FAIL {} {}: {}",
            o.algebra,
            o.check.number(),
            o.detail
        );
    }
    let passed = failures.is_empty();
    let _ = writeln!(text, "{}", pass_fail(passed));
    let json = json!({
        "algebras": specs
            .iter()
            .zip(&results)
            .map(|(s, o)| json!({ "algebra": s, "outcomes": o }))
            .collect::<Vec<_>>(),
    });
    Ok(Run { text, json, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(config: &RunConfig) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(config, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn config(command: Command, alg: &str) -> RunConfig {
        RunConfig {
            algebra: Some(alg.into()),
            ..RunConfig::new(command)
        }
    }

    #[test]
    fn missing_algebra_is_a_usage_error() {
        let (code, out, err) = run_to_strings(&RunConfig::new(Command::Verify));
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("--alg"));
    }

    #[test]
    fn wrong_u1_length_is_a_usage_error() {
        let mut c = config(Command::Obstruction, "sl:n=1");
        c.u1 = Some("1,2,3".into());
        assert_eq!(run_to_strings(&c).0, EXIT_USAGE);
        c.u1 = Some("1,x".into());
        assert_eq!(run_to_strings(&c).0, EXIT_USAGE);
    }

    #[test]
    fn obstruction_on_unsupported_family_is_a_usage_error() {
        let mut c = config(Command::Obstruction, "sp:n=1");
        c.u1 = Some("1,0,0,0".into());
        let (code, _, err) = run_to_strings(&c);
        assert_eq!(code, EXIT_USAGE, "{err}");
    }

    #[test]
    fn json_carries_the_schema_version() {
        let mut c = config(Command::Verify, "su:p=1,q=0");
        c.format = Format::Json;
        let (code, out, _) = run_to_strings(&c);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], json!(1));
        assert_eq!(v["algebra"], json!("su:p=1,q=0"));
        assert_eq!(v["passed"], json!(true));
    }

    #[test]
    fn involutive_only_candidates_are_involutive() {
        let mut c = config(Command::Symmetries, "sl:n=1");
        c.samples = 6;
        c.involutive_only = true;
        c.format = Format::Json;
        let (code, out, _) = run_to_strings(&c);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        let list = v["candidates"].as_array().unwrap();
        assert_eq!(list.len(), 6);
        assert!(list.iter().all(|x| x["involutive"] == json!(true)));
    }
}
