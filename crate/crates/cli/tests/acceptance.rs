//! Acceptance suite. Runs every criterion in order, prints one line each
//! and exits non-zero if any fails. Pass criterion numbers as arguments to
//! run a subset.

use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;
use rand::Rng;
use serde_json::Value;
use tropgen_cli::{run, Cli};
use tropgen_core::generic::{dimension_checks, generic_groebner_complex, generic_tropical_variety, sample_transform};
use tropgen_core::groebner::{hilbert_function, initial_ideal};
use tropgen_core::poly::initial_form;
use tropgen_core::polyhedra::{complex_equal, generic_tropical_fan, w_skeleton};
use tropgen_core::text::{parse_polynomial, VarLayout};
use tropgen_core::tropical::{
    cell_witnesses, complex_partition, default_d_max, groebner_complex, groebner_complex_oracle, rational_grid,
    sample_admissible_projections, seeded_rng, transform_ideal, tropical_hypersurface, tropical_variety,
    verify_projection_hypersurface, DEFAULT_KERNEL_BOUND,
};
use tropgen_core::{
    Family, Ideal, Monomial, Polynomial, PuiseuxScalar, Rational, SamplingPolicy, Valuation, WeightVector,
};

type Outcome = Result<String, String>;

fn p(s: &str, n: usize) -> Polynomial<PuiseuxScalar> {
    parse_polynomial(s, &VarLayout::new(n, 0), 1).unwrap()
}

fn ideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
    Ideal::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

fn twisted_cubic() -> Ideal<PuiseuxScalar> {
    ideal(&["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"], 4)
}

fn linear() -> Ideal<PuiseuxScalar> {
    ideal(&["x1 + t*x2 + x3 + x4", "x2 + x3 + t^2*x4"], 4)
}

fn pool() -> Vec<(&'static str, Ideal<PuiseuxScalar>)> {
    vec![
        ("valued plane", ideal(&["x1 + t*x2 + x3"], 3)),
        ("quadric", ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3)),
        ("linear", linear()),
        ("twisted cubic", twisted_cubic()),
        ("conic and plane", ideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3)),
        ("mixed", ideal(&["x1*x2 - t*x3^2", "x1 + x2 + x3"], 3)),
    ]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// Minimum of the coordinates attained at least `k` times.
fn min_count_at_least(w: &[Rational], k: usize) -> bool {
    let min = w.iter().min().unwrap();
    w.iter().filter(|x| *x == min).count() >= k
}

fn hypersurfaces() -> Outcome {
    let f = ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3);
    let policy = SamplingPolicy::new(Family::GeneralLinear, 50, 5, 0);
    let gc = generic_groebner_complex(&f, &policy, default_d_max(&f)).map_err(e)?;
    let t = generic_tropical_variety(&f, &policy, default_d_max(&f)).map_err(e)?;
    let gc = gc
        .consensus()
        .ok_or_else(|| format!("gGC split into {} buckets", gc.buckets.len()))?;
    let t = t
        .consensus()
        .ok_or_else(|| format!("gT split into {} buckets", t.buckets.len()))?;
    ensure(complex_equal(gc, &generic_tropical_fan(3)), || {
        format!("gGC f-vector {:?}", gc.f_vector())
    })?;
    ensure(complex_equal(t, &w_skeleton(3, 2)), || {
        format!("gT f-vector {:?}", t.f_vector())
    })?;
    Ok(format!("gGC = W_3 {:?}, gT = W_3^2 {:?}", gc.f_vector(), t.f_vector()))
}

fn linear_ideals() -> Outcome {
    let i = linear();
    let policy = SamplingPolicy::new(Family::GeneralLinear, 50, 5, 0);
    let r = generic_tropical_variety(&i, &policy, default_d_max(&i)).map_err(e)?;
    let t = r
        .consensus()
        .ok_or_else(|| format!("gT split into {} buckets", r.buckets.len()))?;
    let mut rng = seeded_rng(0, 2);
    let mut pts = rational_grid(4, 300, &mut rng, 5);
    pts.extend(cell_witnesses(t));
    pts.extend(cell_witnesses(&w_skeleton(4, 2)));
    for w in &pts {
        ensure(t.support_contains(w) == min_count_at_least(w, 3), || {
            format!("support differs at {w:?}")
        })?;
    }
    ensure(complex_equal(t, &w_skeleton(4, 2)), || {
        format!("gT f-vector {:?}", t.f_vector())
    })?;
    Ok(format!(
        "gT = W_4^2 {:?}, support checked on {} points",
        t.f_vector(),
        pts.len()
    ))
}

fn diagonal_invariance() -> Outcome {
    let cases = [
        ("valued plane", ideal(&["x1 + t*x2 + x3"], 3)),
        ("linear", linear()),
        ("twisted cubic", twisted_cubic()),
    ];
    let policy = SamplingPolicy::new(Family::Diagonal, 100, 5, 0);
    for (name, i) in &cases {
        let d = default_d_max(i);
        let t = tropical_variety(i, d).map_err(e)?;
        for k in 0..policy.samples {
            let g = sample_transform(&policy, i.nvars(), k).map_err(e)?;
            let tg = tropical_variety(&transform_ideal(i, &g).map_err(e)?, d).map_err(e)?;
            ensure(complex_equal(&tg, &t), || format!("{name}: sample {k} differs"))?;
        }
    }
    Ok("3 ideals x 5 diagonal samples".into())
}

fn hilbert_of_initial_ideals() -> Outcome {
    let pool = pool();
    let mut rng = seeded_rng(0, 4);
    for _ in 0..10 {
        let (name, i) = &pool[rng.gen_range(0..pool.len())];
        let w = WeightVector::new(rational_grid(i.nvars(), 1, &mut rng, 4).remove(0));
        let init = initial_ideal(i, &w).map_err(e)?;
        for d in 0..=6 {
            let (a, b) = (hilbert_function(i, d), hilbert_function(&init, d));
            ensure(a == b, || {
                format!("{name} at {:?}, degree {d}: {a} vs {b}", w.entries())
            })?;
        }
    }
    Ok("10 pairs, d <= 6".into())
}

fn random_multiplier(n: usize, rng: &mut impl Rng) -> Polynomial<PuiseuxScalar> {
    let deg = rng.gen_range(0..=2);
    let mut f = Polynomial::zero(n);
    for m in Monomial::of_degree(n, deg) {
        let c = rng.gen_range(-3i64..=3);
        if c != 0 && rng.gen_bool(0.6) {
            let v = Rational::from_integer(rng.gen_range(0i64..=2).into());
            f = f.add(&Polynomial::term(
                m,
                PuiseuxScalar::from_int(c).mul(&PuiseuxScalar::t_pow(v)),
            ));
        }
    }
    f
}

fn initial_form_soundness() -> Outcome {
    let pool = pool();
    let mut rng = seeded_rng(0, 5);
    let mut done = 0;
    while done < 20 {
        let (name, i) = &pool[rng.gen_range(0..pool.len())];
        let n = i.nvars();
        let h = i.generators().iter().fold(Polynomial::zero(n), |acc, f| {
            acc.add(&random_multiplier(n, &mut rng).mul(f))
        });
        if h.is_zero() {
            continue;
        }
        let w = WeightVector::new(rational_grid(n, 1, &mut rng, 4).remove(0));
        let init = initial_ideal(i, &w).map_err(e)?;
        let r = init.grevlex_basis().normal_form(&initial_form(&h, &w).map_err(e)?);
        ensure(r.is_zero(), || format!("{name} at {:?}: remainder {r}", w.entries()))?;
        done += 1;
    }
    Ok("20 combinations reduce to zero".into())
}

fn pluecker_vs_oracle() -> Outcome {
    let i = ideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3);
    let gc = groebner_complex(&i, 3).map_err(e)?;
    let mut rng = seeded_rng(0, 6);
    let pts: Vec<WeightVector> = rational_grid(3, 200, &mut rng, 4)
        .into_iter()
        .map(WeightVector::new)
        .collect();
    let cells = complex_partition(&gc, &pts);
    let oracle = groebner_complex_oracle(&i, &pts).map_err(e)?;
    let cells: Vec<usize> = cells
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.ok_or_else(|| format!("{:?} outside the complex", pts[k].entries())))
        .collect::<Result<_, _>>()?;
    ensure(cells == oracle, || "partitions differ".into())?;
    Ok(format!(
        "{} classes on 200 points, f-vector {:?}",
        oracle.iter().max().unwrap() + 1,
        gc.f_vector()
    ))
}

fn projection_hypersurfaces() -> Outcome {
    let i = twisted_cubic();
    let g = sample_transform(&SamplingPolicy::default(), 4, 0).map_err(e)?;
    let gi = transform_ideal(&i, &g).map_err(e)?;
    let t = tropical_variety(&gi, 4).map_err(e)?;
    let gb = gi.grevlex_basis();
    let mut degrees = Vec::new();
    for pi in sample_admissible_projections(&t, 3, DEFAULT_KERNEL_BOUND, 0).map_err(e)? {
        let (report, jt) = verify_projection_hypersurface(&i, &g, &pi, 4, 200, 0).map_err(e)?;
        ensure(report.passed, || {
            format!(
                "kernel {:?}: {} counterexamples",
                pi.kernel(),
                report.counterexamples.len()
            )
        })?;
        let f = jt.generator().ok_or("projection ideal not principal")?;
        ensure(gb.normal_form(f).is_zero(), || "F(g) not in g(I)".into())?;
        degrees.push(f.total_degree().unwrap());
    }
    Ok(format!("3 principal projections, deg F = {degrees:?}"))
}

fn tropical_basis() -> Outcome {
    let input = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/twisted_cubic.txt");
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_basis.json");
    let cli = Cli::try_parse_from([
        "tropgen",
        "basis",
        input.to_str().unwrap(),
        "--projections",
        "5",
        "--grid",
        "500",
        "--out",
        out.to_str().unwrap(),
    ])
    .map_err(e)?;
    let code = run(&cli);
    ensure(code == 0, || format!("exit code {code}"))?;
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).map_err(e)?).map_err(e)?;
    ensure(v["report"]["status"] == "pass", || format!("report {}", v["report"]))?;
    Ok(format!(
        "{} elements, {} grid points, {} cell witnesses",
        v["elements"].as_array().map_or(0, |a| a.len()),
        v["report"]["grid_size"],
        v["report"]["cells_checked"]
    ))
}

fn purity() -> Outcome {
    let i = twisted_cubic();
    let g = sample_transform(&SamplingPolicy::default(), 4, 1).map_err(e)?;
    let t = tropical_variety(&transform_ideal(&i, &g).map_err(e)?, 4).map_err(e)?;
    ensure(t.cells().iter().all(|c| c.dim() == Some(2)), || {
        format!("f-vector {:?}", t.f_vector())
    })?;
    let policy = SamplingPolicy::new(Family::GeneralLinear, 50, 3, 0);
    for (name, i) in pool() {
        let c = dimension_checks(&i, &policy, default_d_max(&i)).map_err(e)?;
        ensure(c.passed(), || format!("{name}: failed samples {:?}", c.failed_samples))?;
    }
    Ok(format!(
        "pure of dim 2 {:?}; dimension checks pass for the pool",
        t.f_vector()
    ))
}

fn degenerate_cases() -> Outcome {
    let points = ideal(&["x1 + x2", "x2 + t*x3", "x3^2 - x1*x2"], 3);
    let r = generic_tropical_variety(&points, &SamplingPolicy::new(Family::GeneralLinear, 50, 3, 0), 4).map_err(e)?;
    ensure(r.consensus().is_some_and(|t| t.is_empty()), || {
        "gT of a zero-dimensional ideal is not empty".into()
    })?;
    let monomial = p("t*x1^2*x3", 3);
    ensure(tropical_hypersurface(&monomial).map_err(e)?.is_empty(), || {
        "T(monomial) not empty".into()
    })?;
    for gens in [
        &["x1^2 + x1*x2 + x2*x3"][..],
        &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"][..],
    ] {
        let n = if gens.len() == 1 { 3 } else { 4 };
        let i = ideal(gens, n);
        ensure(
            i.generators().iter().all(|f| {
                f.terms()
                    .all(|(_, c)| c.valuation() == Valuation::Finite(Rational::from_integer(0.into())))
            }),
            || "not constant".into(),
        )?;
        let gc = groebner_complex(&i, default_d_max(&i)).map_err(e)?;
        ensure(gc.is_fan(), || format!("GC of {gens:?} is not a fan"))?;
    }
    Ok("empty, empty, fans".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("generic hypersurface: gGC = W_3, gT = W_3^2", hypersurfaces),
        ("generic linear ideal: gT = W_4^2", linear_ideals),
        ("diagonal invariance", diagonal_invariance),
        ("Hilbert function of initial ideals", hilbert_of_initial_ideals),
        ("initial-form soundness", initial_form_soundness),
        ("Pluecker complex vs initial-ideal oracle", pluecker_vs_oracle),
        (
            "projection hypersurfaces of the twisted cubic",
            projection_hypersurfaces,
        ),
        ("tropical basis certification via the CLI", tropical_basis),
        ("purity and dimension", purity),
        ("degenerate cases", degenerate_cases),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let k = k + 1;
        if !only.is_empty() && !only.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {k:>2} {name} ({detail}) [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {k:>2} {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
