use tropgen_core::generic::{
    classify_orbit, dimension_checks, generic_groebner_complex, generic_tropical_variety, hilbert_invariance,
    sample_transform, validate_diagonal_invariance,
};
use tropgen_core::polyhedra::w_skeleton;
use tropgen_core::tropical::{cell_witnesses, rational_grid, seeded_rng, transform_ideal, tropical_hypersurface};
use tropgen_core::{Family, SamplingPolicy};

mod common;
use common::{ideal, min_attained_twice, pool};

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let i = ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3);
    let policy = SamplingPolicy::new(Family::GeneralLinear, 20, 4, 17);
    let a = serde_json::to_string(&generic_tropical_variety(&i, &policy, 2).unwrap().to_json()).unwrap();
    let b = serde_json::to_string(&generic_tropical_variety(&i, &policy, 2).unwrap().to_json()).unwrap();
    assert_eq!(a, b);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let c =
        pool.install(|| serde_json::to_string(&generic_tropical_variety(&i, &policy, 2).unwrap().to_json()).unwrap());
    assert_eq!(a, c);
    let other = SamplingPolicy { seed: 18, ..policy };
    assert_ne!(
        generic_tropical_variety(&i, &other, 2).unwrap().transforms,
        generic_tropical_variety(&i, &policy, 2).unwrap().transforms
    );
}

#[test]
fn sampled_hypersurfaces_match_brute_force() {
    let i = ideal(&["x1^2 + x1*x2 + t*x2*x3"], 3);
    let policy = SamplingPolicy::new(Family::GeneralLinear, 10, 3, 2);
    let report = generic_tropical_variety(&i, &policy, 2).unwrap();
    let mut rng = seeded_rng(2, 0);
    for (g, t) in report.transforms.iter().zip(&report.complexes) {
        let f = &transform_ideal(&i, g).unwrap().generators()[0].clone();
        assert_eq!(t, &tropical_hypersurface(f).unwrap());
        let mut pts = rational_grid(3, 50, &mut rng, 4);
        pts.extend(cell_witnesses(t));
        for w in &pts {
            assert_eq!(t.support_contains(w), min_attained_twice(f, w));
        }
    }
}

#[test]
fn diagonal_changes_keep_both_complexes() {
    for (name, i) in pool()
        .into_iter()
        .filter(|(n, _)| ["valued plane", "quadric", "mixed"].contains(n))
    {
        let policy = SamplingPolicy::new(Family::Diagonal, 50, 3, 1);
        let check = validate_diagonal_invariance(&i, &policy, 4).unwrap();
        assert!(check.passed(), "{name}: {:?}", check.failed_samples);
        let gc = generic_groebner_complex(&i, &policy, 4).unwrap();
        assert!(gc.agreement(), "{name}");
    }
    let gl = SamplingPolicy::new(Family::GeneralLinear, 5, 2, 0);
    assert!(validate_diagonal_invariance(&pool()[0].1, &gl, 2).is_err());
}

#[test]
fn a_coordinate_hyperplane_becomes_generic() {
    let i = ideal(&["x1"], 3);
    let gl = SamplingPolicy::new(Family::GeneralLinear, 100, 5, 0);
    let r = classify_orbit(&i, &gl, 2).unwrap();
    assert_eq!(r.buckets.len(), 1);
    assert_eq!(r.buckets[0].count, 5);
    assert_eq!(r.buckets[0].sample_indices, vec![0, 1, 2, 3, 4]);
    assert_eq!(r.consensus(), Some(&w_skeleton(3, 2)));
    let diag = SamplingPolicy::new(Family::Diagonal, 100, 3, 0);
    let r = classify_orbit(&i, &diag, 2).unwrap();
    assert!(r.agreement());
    assert!(r.consensus().unwrap().is_empty());
}

#[test]
fn small_bounds_can_split_the_orbit() {
    // with entries in [-1, 1] some samples keep x1 + x2 special
    let i = ideal(&["x1"], 3);
    let r = classify_orbit(&i, &SamplingPolicy::new(Family::GeneralLinear, 1, 30, 3), 2).unwrap();
    let total: usize = r.buckets.iter().map(|b| b.count).sum();
    assert_eq!(total, 30);
    let mut seen: Vec<usize> = r.buckets.iter().flat_map(|b| b.sample_indices.clone()).collect();
    seen.sort();
    assert_eq!(seen, (0..30).collect::<Vec<_>>());
    assert_eq!(r.buckets[0].sample_indices[0], 0);
    assert!(r.buckets.len() > 1);
}

#[test]
fn one_sample_is_one_bucket() {
    let i = common::twisted_cubic();
    let r = generic_tropical_variety(&i, &SamplingPolicy::new(Family::GeneralLinear, 100, 1, 0), 4).unwrap();
    assert!(r.agreement());
    assert_eq!(r.buckets[0].count, 1);
    let t = r.consensus().unwrap();
    assert_eq!(t.dim(), Some(2));
    assert!(t.is_pure());
}

#[test]
fn invariants_hold_for_the_pool() {
    for (name, i) in pool().into_iter().filter(|(n, _)| *n != "twisted cubic") {
        let policy = SamplingPolicy::new(Family::GeneralLinear, 20, 3, 5);
        let h = hilbert_invariance(&i, &policy, 5).unwrap();
        assert!(h.passed(), "{name}: {:?}", h.failed_samples);
        // dense slices after a general change: keep d_max small
        let d = dimension_checks(&i, &policy, i.max_degree() + 1).unwrap();
        assert!(d.passed(), "{name}: {:?}", d.failed_samples);
    }
    let g = sample_transform(&SamplingPolicy::new(Family::GeneralLinear, 3, 1, 0), 3, 0).unwrap();
    assert_ne!(g.det(), tropgen_core::Rational::from_integer(0.into()));
}
