use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use tropgen_core::generic::{
    classify_orbit, dimension_checks, generic_groebner_complex, generic_tropical_variety, hilbert_invariance,
    sample_transform, validate_diagonal_invariance, with_thread_limit, Family, GenericReport, SampleCheck,
    SamplingPolicy,
};
use tropgen_core::groebner::krull_dimension;
use tropgen_core::polyhedra::{complex_to_json, validate_complex_json};
use tropgen_core::text::VarLayout;
use tropgen_core::tropical::{
    default_d_max, groebner_complex, sample_admissible_projections, transform_ideal, tropical_basis_of_components,
    tropical_basis_with, tropical_hypersurface, tropical_variety, BasisOptions, TropicalBasis,
};
use tropgen_core::{Coefficient, Error, Ideal, LinearTransform, PolyhedralComplex, Rational};

use crate::args::{self, Cli, Command, OutputFormat};
use crate::input::{read_input, AnyInput, Input};
use crate::CliError;

/// Attempts at a fresh coordinate change when a projection ideal is not
/// principal.
pub const BASIS_RESAMPLES: usize = 5;

/// Result of a command that ran to completion. `passed` is false when a
/// check found counterexamples.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub passed: bool,
    pub summary: String,
}

impl Outcome {
    fn complex(c: &PolyhedralComplex, what: &str) -> Self {
        Outcome {
            json: complex_to_json(c),
            text: complex_text(c),
            passed: true,
            summary: format!("{what}: {} maximal cells, f-vector {:?}", c.cells().len(), c.f_vector()),
        }
    }
}

fn linear_form(a: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if mag != BigInt::from(1) {
            let _ = write!(s, "{mag}*");
        }
        let _ = write!(s, "w{}", i + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// f-vector, cells per dimension and one line per maximal cell.
pub fn complex_text(c: &PolyhedralComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ambient {}", c.ambient_dim());
    if c.is_empty() {
        let _ = writeln!(out, "empty");
        return out;
    }
    let _ = writeln!(
        out,
        "dim {} ({})",
        c.dim().unwrap(),
        if c.is_pure() { "pure" } else { "not pure" }
    );
    let _ = writeln!(out, "f-vector {:?}", c.f_vector());
    let mut per_dim = vec![0usize; c.ambient_dim() + 1];
    for p in c.cells() {
        per_dim[p.dim().unwrap()] += 1;
    }
    let parts: Vec<String> = per_dim
        .iter()
        .enumerate()
        .filter(|(_, k)| **k > 0)
        .map(|(d, k)| format!("{k} of dim {d}"))
        .collect();
    let _ = writeln!(out, "maximal cells: {}", parts.join(", "));
    for (i, p) in c.cells().iter().enumerate() {
        let n = c.ambient_dim();
        let mut conds: Vec<String> = p
            .equations()
            .iter()
            .map(|r| format!("{} = {}", linear_form(&r[..n]), r[n]))
            .collect();
        conds.extend(
            p.inequalities()
                .iter()
                .map(|r| format!("{} <= {}", linear_form(&r[..n]), r[n])),
        );
        if conds.is_empty() {
            conds.push("everything".into());
        }
        let _ = writeln!(out, "cell {i} (dim {}): {}", p.dim().unwrap(), conds.join(", "));
    }
    out
}

fn policy(s: &args::Sampling) -> SamplingPolicy {
    SamplingPolicy::new(Family::from(s.family), s.bound, s.samples as usize, s.seed)
}

fn d_max<C: Coefficient>(ideal: &Ideal<C>, given: Option<u32>) -> u32 {
    given.unwrap_or_else(|| default_d_max(ideal))
}

fn rational_rows(m: &[Vec<Rational>]) -> Value {
    json!(m
        .iter()
        .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn generic_outcome(r: &GenericReport, what: &str) -> Outcome {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} samples, family {}, seed {}: {}",
        r.samples(),
        r.family,
        r.seed,
        if r.agreement() { "agreement" } else { "disagreement" }
    );
    for (i, b) in r.buckets.iter().enumerate() {
        let _ = writeln!(text, "bucket {i}: {} samples {:?}", b.count, b.sample_indices);
        text.push_str(&complex_text(&b.complex));
    }
    Outcome {
        json: r.to_json(),
        text,
        passed: true,
        summary: format!("{what}: {} buckets over {} samples", r.buckets.len(), r.samples()),
    }
}

fn check_dim_flag<C: Coefficient>(input: &Input<C>) -> Result<(), CliError> {
    if let Some(m) = input.dim {
        let actual = krull_dimension(&input.ideal).unwrap_or(0);
        if actual != m {
            return Err(Error::PreconditionFailed(format!("declared dim {m} but dim S/I = {actual}")).into());
        }
    }
    Ok(())
}

fn basis_json<C: Coefficient>(b: &TropicalBasis<C>, g: &LinearTransform, n: usize, extra: Value) -> Value {
    let layout = VarLayout::new(n, 0);
    json!({
        "transform": rational_rows(g.matrix()),
        "elements": b.elements.iter().map(|(f, p)| json!({
            "polynomial": f.display_with(&layout),
            "provenance": p.tag(),
        })).collect::<Vec<_>>(),
        "tropical_variety": complex_to_json(&b.tropical),
        "report": b.report.to_json(),
        "sampling": extra,
    })
}

fn run_basis<C: Coefficient>(input: &Input<C>, a: &args::Basis) -> Result<Outcome, CliError> {
    check_dim_flag(input)?;
    let n = input.n;
    let pol = policy(&a.sampling);
    let d = d_max(&input.ideal, a.common.dmax);
    let opts = BasisOptions {
        d_max: d,
        grid: a.grid as usize,
        seed: a.sampling.seed,
    };
    let k = a.projections as usize;
    if !input.prime {
        if input.components.is_empty() {
            return Err(Error::PreconditionFailed(
                "basis needs the `prime` flag or `component` lines for the minimal primes".into(),
            )
            .into());
        }
        let g = sample_transform(&pol, n, 0)?;
        let b = tropical_basis_of_components(&input.ideal, &input.components, &g, k, a.kernel_bound, &opts)?;
        let json = basis_json(
            &b,
            &g,
            n,
            json!({ "seed": pol.seed, "family": pol.family.name(), "components": input.components.len() }),
        );
        return Ok(Outcome {
            text: basis_text(&b, n),
            summary: format!("basis of {} elements certified", b.elements.len()),
            json,
            passed: b.report.passed,
        });
    }
    let mut resampled = Vec::new();
    for attempt in 0..BASIS_RESAMPLES {
        let g = sample_transform(&pol, n, attempt)?;
        let transformed = transform_ideal(&input.ideal, &g)?;
        let t = tropical_variety(&transformed, d)?;
        let projections = if transformed.generators().len() > 1 {
            sample_admissible_projections(&t, k, a.kernel_bound, a.sampling.seed.wrapping_add(attempt as u64))?
        } else {
            vec![]
        };
        match tropical_basis_with(&input.ideal, &g, t, &projections, &opts) {
            Err(Error::NotPrincipal { .. }) => {
                resampled.push(attempt);
                continue;
            }
            Err(e) => return Err(e.into()),
            Ok(b) => {
                let extra = json!({
                    "seed": pol.seed,
                    "family": pol.family.name(),
                    "transform_index": attempt,
                    "resampled": resampled,
                    "projections": projections.iter().map(|p| json!({
                        "matrix": p.matrix(),
                        "kernel": p.kernel(),
                    })).collect::<Vec<_>>(),
                });
                return Ok(Outcome {
                    text: basis_text(&b, n),
                    summary: format!("basis of {} elements certified", b.elements.len()),
                    json: basis_json(&b, &g, n, extra),
                    passed: b.report.passed,
                });
            }
        }
    }
    Err(Error::PreconditionFailed(format!(
        "projection ideals were not principal for {BASIS_RESAMPLES} sampled coordinate changes"
    ))
    .into())
}

fn basis_text<C: Coefficient>(b: &TropicalBasis<C>, n: usize) -> String {
    let layout = VarLayout::new(n, 0);
    let mut out = String::new();
    for (f, p) in &b.elements {
        let _ = writeln!(out, "[{}] {}", p.tag(), f.display_with(&layout));
    }
    let _ = writeln!(
        out,
        "certified on {} grid points and {} cell witnesses",
        b.report.grid_size, b.report.cells_checked
    );
    out
}

fn checks_outcome(checks: Vec<SampleCheck>) -> Outcome {
    let passed = checks.iter().all(|c| c.passed());
    let mut text = String::new();
    for c in &checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} {} ({}) failed samples {:?}",
            c.check, c.detail, c.failed_samples
        );
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    Outcome {
        json: Value::Array(checks.iter().map(SampleCheck::to_json).collect()),
        text,
        passed,
        summary: format!("{} checks, {failed} failed", checks.len()),
    }
}

fn run_validate<C: Coefficient>(input: &Input<C>, a: &args::Validate) -> Result<Outcome, CliError> {
    let d = d_max(&input.ideal, a.dmax);
    let gl = policy(&a.sampling);
    let diag = SamplingPolicy {
        family: Family::Diagonal,
        ..gl.clone()
    };
    let checks = vec![
        hilbert_invariance(&input.ideal, &gl, d)?,
        dimension_checks(&input.ideal, &gl, d)?,
        validate_diagonal_invariance(&input.ideal, &diag, d)?,
    ];
    Ok(checks_outcome(checks))
}

fn validate_complex_file(path: &Path) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))?;
    let (passed, message) = match validate_complex_json(&v) {
        Ok(()) => (true, "valid".to_string()),
        Err(e) => (false, e.to_string()),
    };
    Ok(Outcome {
        json: json!({ "check": "complex_schema", "status": if passed { "pass" } else { "fail" }, "message": message }),
        text: format!("{message}\n"),
        passed,
        summary: format!("complex schema: {message}"),
    })
}

fn run_typed<C: Coefficient>(input: &Input<C>, cmd: &Command) -> Result<Outcome, CliError> {
    let ideal = &input.ideal;
    match cmd {
        Command::Hypersurface(_) => {
            let [f] = ideal.generators() else {
                return Err(CliError::Usage(format!(
                    "hypersurface needs exactly one generator, found {}",
                    ideal.generators().len()
                )));
            };
            Ok(Outcome::complex(&tropical_hypersurface(f)?, "tropical hypersurface"))
        }
        Command::Gc(c) => Ok(Outcome::complex(
            &groebner_complex(ideal, d_max(ideal, c.dmax))?,
            "Groebner complex",
        )),
        Command::Trop(c) => {
            check_dim_flag(input)?;
            Ok(Outcome::complex(
                &tropical_variety(ideal, d_max(ideal, c.dmax))?,
                "tropical variety",
            ))
        }
        Command::GenericTrop(a) => {
            let r = generic_tropical_variety(ideal, &policy(&a.sampling), d_max(ideal, a.common.dmax))?;
            Ok(generic_outcome(&r, "generic tropical variety"))
        }
        Command::GenericGc(a) => {
            let r = generic_groebner_complex(ideal, &policy(&a.sampling), d_max(ideal, a.common.dmax))?;
            Ok(generic_outcome(&r, "generic Groebner complex"))
        }
        Command::Classify(a) => {
            let r = classify_orbit(ideal, &policy(&a.sampling), d_max(ideal, a.common.dmax))?;
            let mut o = generic_outcome(&r, "orbit classification");
            o.json["sample_indices"] = json!(r.buckets.iter().map(|b| b.sample_indices.clone()).collect::<Vec<_>>());
            Ok(o)
        }
        Command::Basis(a) => run_basis(input, a),
        Command::Validate(a) => run_validate(input, a),
    }
}

/// Run the command and return its outcome without writing anything.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    with_thread_limit(|| {
        if let Command::Validate(a) = &cli.command {
            if let Some(p) = &a.complex {
                return validate_complex_file(p);
            }
        }
        let path = match &cli.command {
            Command::Hypersurface(c) | Command::Gc(c) | Command::Trop(c) => c.input.clone(),
            Command::GenericTrop(a) | Command::GenericGc(a) | Command::Classify(a) => a.common.input.clone(),
            Command::Basis(a) => a.common.input.clone(),
            Command::Validate(a) => a.input.clone().expect("clap requires an input without --complex"),
        };
        match read_input(&path)? {
            AnyInput::Rational(i) => run_typed(&i, &cli.command),
            AnyInput::Puiseux(i) => run_typed(&i, &cli.command),
        }
    })
}

fn destination(cli: &Cli) -> (OutputFormat, Option<&Path>) {
    match &cli.command {
        Command::Hypersurface(c) | Command::Gc(c) | Command::Trop(c) => (c.output, c.out.as_deref()),
        Command::GenericTrop(a) | Command::GenericGc(a) | Command::Classify(a) => {
            (a.common.output, a.common.out.as_deref())
        }
        Command::Basis(a) => (a.common.output, a.common.out.as_deref()),
        Command::Validate(a) => (a.output, a.out.as_deref()),
    }
}

/// Render an outcome in the requested format.
pub fn render(o: &Outcome, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&o.json).expect("JSON values serialize")),
        OutputFormat::Text => o.text.clone(),
    }
}

/// Execute, write the output and return the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(o) => {
            let (format, out) = destination(cli);
            let body = render(&o, format);
            let written = match out {
                Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(p.display().to_string(), e)),
                None => std::io::stdout()
                    .write_all(body.as_bytes())
                    .map_err(|e| CliError::Io("stdout".into(), e)),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            eprintln!("{}", o.summary);
            if o.passed {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
