use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tropgen_core::generic::{generic_tropical_variety, sample_transform};
use tropgen_core::groebner::initial_ideal;
use tropgen_core::text::{parse_polynomial, VarLayout};
use tropgen_core::tropical::{
    build_projection, eliminated_projection_ideal, groebner_complex, pluecker_lift, sample_admissible_projections,
    tropical_hypersurface, tropical_variety, DEFAULT_KERNEL_BOUND,
};
use tropgen_core::{Family, Ideal, PuiseuxScalar, SamplingPolicy, WeightVector};

fn ideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
    let lay = VarLayout::new(n, 0);
    Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &lay, 1).unwrap()).collect()).unwrap()
}

fn twisted_cubic() -> Ideal<PuiseuxScalar> {
    ideal(&["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"], 4)
}

fn groebner(c: &mut Criterion) {
    let i = ideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3);
    c.bench_function("grevlex basis, conic and plane", |b| {
        b.iter(|| {
            Ideal::new(3, black_box(i.generators().to_vec()))
                .unwrap()
                .grevlex_basis()
        })
    });
    let w = WeightVector::from_ints(&[0, 1, 3]);
    c.bench_function("initial ideal, conic and plane", |b| {
        b.iter(|| initial_ideal(black_box(&i), &w).unwrap())
    });
}

fn complexes(c: &mut Criterion) {
    let q = ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3);
    c.bench_function("tropical hypersurface, quadric", |b| {
        b.iter(|| tropical_hypersurface(black_box(&q.generators()[0])).unwrap())
    });
    c.bench_function("Pluecker lift, quadric degree 3", |b| {
        b.iter(|| pluecker_lift(black_box(&q), 3, 5000).unwrap())
    });
    c.bench_function("Groebner complex, quadric d=4", |b| {
        b.iter(|| groebner_complex(black_box(&q), 4).unwrap())
    });
    let tc = twisted_cubic();
    c.bench_function("tropical variety, twisted cubic", |b| {
        b.iter(|| tropical_variety(black_box(&tc), 4).unwrap())
    });
}

fn generic(c: &mut Criterion) {
    let mut g = c.benchmark_group("generic");
    g.sample_size(10);
    let q = ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3);
    let policy = SamplingPolicy::new(Family::GeneralLinear, 20, 2, 0);
    g.bench_function("generic tropical variety, quadric", |b| {
        b.iter(|| generic_tropical_variety(black_box(&q), &policy, 2).unwrap())
    });
    let tc = twisted_cubic();
    let gt = sample_transform(&SamplingPolicy::new(Family::GeneralLinear, 5, 1, 0), 4, 0).unwrap();
    let t = tropical_variety(&tropgen_core::tropical::transform_ideal(&tc, &gt).unwrap(), 4).unwrap();
    let pi = sample_admissible_projections(&t, 1, DEFAULT_KERNEL_BOUND, 0)
        .unwrap()
        .remove(0);
    g.bench_function("projection ideal, twisted cubic", |b| {
        b.iter(|| eliminated_projection_ideal(&build_projection(black_box(&tc), &gt, &pi).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, groebner, complexes, generic);
criterion_main!(benches);
