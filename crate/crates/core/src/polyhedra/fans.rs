use super::{PolyhedralComplex, Polyhedron};
use crate::coeffs::Rational;

fn unit_diff(n: usize, i: usize, j: usize) -> Vec<Rational> {
    let mut a = vec![Rational::from_integer(0.into()); n];
    a[i] += Rational::from_integer(1.into());
    a[j] -= Rational::from_integer(1.into());
    a
}

/// The cone `C_S` of ω whose minimal coordinates are exactly (at least)
/// those indexed by `s`: `ω_i = ω_j` for `i, j ∈ S`, `ω_i ≤ ω_k` for
/// `k ∉ S`. Indices are 0-based.
pub fn min_cone(n: usize, s: &[usize]) -> Polyhedron {
    assert!(!s.is_empty(), "empty index set");
    let zero = Rational::from_integer(0.into());
    let s0 = s[0];
    let eqs: Vec<(Vec<Rational>, Rational)> = s[1..].iter().map(|&j| (unit_diff(n, s0, j), zero.clone())).collect();
    let ineqs: Vec<(Vec<Rational>, Rational)> = (0..n)
        .filter(|k| !s.contains(k))
        .map(|k| (unit_diff(n, s0, k), zero.clone()))
        .collect();
    Polyhedron::from_h(n, &eqs, &ineqs)
}

/// All `2^n - 1` cones `C_S` with their index sets.
pub fn generic_fan_cones(n: usize) -> Vec<(Vec<usize>, Polyhedron)> {
    (1u32..1 << n)
        .map(|mask| {
            let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let c = min_cone(n, &s);
            (s, c)
        })
        .collect()
}

/// The generic tropical fan `W_n`, with maximal cones `C_{i}`.
pub fn generic_tropical_fan(n: usize) -> PolyhedralComplex {
    PolyhedralComplex::new(n, (0..n).map(|i| min_cone(n, &[i])).collect())
}

/// `W_n^m`: the cones `C_S` with `|S| = n - m + 1`, i.e. the ω whose
/// minimum is attained at least `n - m + 1` times.
pub fn w_skeleton(n: usize, m: usize) -> PolyhedralComplex {
    assert!(m <= n, "skeleton dimension exceeds ambient dimension");
    let k = n - m + 1;
    let cells = generic_fan_cones(n)
        .into_iter()
        .filter(|(s, _)| s.len() == k)
        .map(|(_, c)| c)
        .collect();
    PolyhedralComplex::new(n, cells)
}
