//! Double description for cones `{y : A·y ≥ 0, E·y = 0}` with integer
//! rows. The lineality space is split off first so the main loop runs on a
//! pointed cone, where adjacency is decided combinatorially.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::coeffs::Rational;
use crate::linalg::{nullspace, primitive, primitive_int, rank, to_rational};

#[derive(Clone, Debug, Default)]
pub(crate) struct ConeGenerators {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub(crate) fn cone_generators(ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>], k: usize) -> ConeGenerators {
    let mut all: Vec<Vec<Rational>> = ineqs.iter().map(|r| to_rational(r)).collect();
    all.extend(eqs.iter().map(|r| to_rational(r)));
    let lineality: Vec<Vec<BigInt>> = nullspace(&all, k).iter().map(|v| primitive(v)).collect();

    // Coordinates on a complement of the lineality space inside {E·y = 0}.
    let mut perp: Vec<Vec<Rational>> = eqs.iter().map(|r| to_rational(r)).collect();
    perp.extend(lineality.iter().map(|r| to_rational(r)));
    let basis: Vec<Vec<BigInt>> = nullspace(&perp, k).iter().map(|v| primitive(v)).collect();
    let r = basis.len();
    if r == 0 {
        return ConeGenerators {
            lineality,
            rays: vec![],
        };
    }

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for a in ineqs {
        let row = primitive_int(&basis.iter().map(|z| dot(a, z)).collect::<Vec<_>>());
        if row.iter().all(|x| x.is_zero()) || rows.contains(&row) {
            continue;
        }
        rows.push(row);
    }

    let reduced = pointed_rays(&rows, r);
    let rays = reduced
        .into_iter()
        .map(|c| {
            let mut y = vec![BigInt::zero(); k];
            for (cj, z) in c.iter().zip(&basis) {
                if cj.is_zero() {
                    continue;
                }
                for (yi, zi) in y.iter_mut().zip(z) {
                    *yi += cj * zi;
                }
            }
            primitive_int(&y)
        })
        .collect();
    ConeGenerators { lineality, rays }
}

/// Extreme rays of the pointed cone `{c ∈ Q^r : rows·c ≥ 0}`; `rows` has
/// rank `r`.
fn pointed_rays(rows: &[Vec<BigInt>], r: usize) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    // Greedy choice of r independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        acc.push(to_rational(row));
        if rank(&acc, r) > chosen.len() {
            chosen.push(i);
        } else {
            acc.pop();
        }
        if chosen.len() == r {
            break;
        }
    }
    assert_eq!(chosen.len(), r, "constraint rows do not span");
    let b0: Vec<Vec<Rational>> = chosen.iter().map(|&i| to_rational(&rows[i])).collect();
    let inv = crate::linalg::inverse(&b0).expect("independent rows");

    let mut order: Vec<usize> = chosen.clone();
    order.extend((0..m).filter(|i| !chosen.contains(i)));

    let mut rays: Vec<(Vec<BigInt>, Bits)> = (0..r)
        .map(|j| {
            let col: Vec<Rational> = (0..r).map(|i| inv[i][j].clone()).collect();
            let v = primitive(&col);
            let mut t = Bits::new(m);
            for (pos, &row) in chosen.iter().enumerate() {
                if pos != j {
                    t.set(row);
                }
            }
            (v, t)
        })
        .collect();

    for &ci in &order[r..] {
        let a = &rows[ci];
        let vals: Vec<BigInt> = rays.iter().map(|(v, _)| dot(a, v)).collect();
        if vals.iter().all(|x| !x.is_negative()) {
            for ((_, t), x) in rays.iter_mut().zip(&vals) {
                if x.is_zero() {
                    t.set(ci);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if common.count() + 2 < r {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, (_, t))| i != p && i != q && common.subset_of(t));
                if blocked {
                    continue;
                }
                let (vp, vq) = (&rays[p].0, &rays[q].0);
                let (sp, sq) = (&vals[p], -&vals[q]);
                let v: Vec<BigInt> = vp.iter().zip(vq).map(|(x, y)| x * &sq + y * sp).collect();
                let mut t = common;
                t.set(ci);
                fresh.push((primitive_int(&v), t));
            }
        }
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for (i, (v, mut t)) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                t.set(ci);
            }
            next.push((v, t));
        }
        next.extend(fresh);
        rays = next;
    }
    rays.into_iter().map(|(v, _)| v).collect()
}
