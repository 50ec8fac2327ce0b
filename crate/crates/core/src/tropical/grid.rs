use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::Rational;
use crate::polyhedra::PolyhedralComplex;

/// Seeded generator for one purpose, separated from others by `stream`.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let q: i64 = rng.gen_range(1..=3);
    let p: i64 = rng.gen_range(-bound * q..=bound * q);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `k` points with entries `p/q`, `q ≤ 3`, `|p/q| ≤ bound`.
pub fn rational_grid(n: usize, k: usize, rng: &mut ChaCha8Rng, bound: i64) -> Vec<Vec<Rational>> {
    (0..k).map(|_| (0..n).map(|_| rational(rng, bound)).collect()).collect()
}

/// `k` points on the support of `c`: a random cell, a random convex
/// combination of its vertices plus random nonnegative multiples of its
/// rays and random multiples of its lineality basis.
pub fn points_on_complex(c: &PolyhedralComplex, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    if c.is_empty() {
        return vec![];
    }
    let n = c.ambient_dim();
    let faces = c.all_faces();
    (0..k)
        .map(|_| {
            let f = &faces[rng.gen_range(0..faces.len())];
            let weights: Vec<i64> = f.vertices().iter().map(|_| rng.gen_range(1..=4)).collect();
            let total: i64 = weights.iter().sum();
            let mut p = vec![Rational::from_integer(0.into()); n];
            for (v, w) in f.vertices().iter().zip(&weights) {
                for (x, y) in p.iter_mut().zip(v) {
                    *x += y * Rational::new((*w).into(), total.into());
                }
            }
            for r in f.rays() {
                let s = Rational::new(rng.gen_range(0..=6).into(), rng.gen_range(1..=2).into());
                for (x, y) in p.iter_mut().zip(r) {
                    *x += &s * Rational::from_integer(y.clone());
                }
            }
            for l in f.lineality() {
                let s = Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=2).into());
                for (x, y) in p.iter_mut().zip(l) {
                    *x += &s * Rational::from_integer(y.clone());
                }
            }
            p
        })
        .collect()
}

/// One relative-interior point per cell, faces included.
pub fn cell_witnesses(c: &PolyhedralComplex) -> Vec<Vec<Rational>> {
    c.all_faces()
        .iter()
        .filter_map(|f| f.relative_interior_point())
        .collect()
}
