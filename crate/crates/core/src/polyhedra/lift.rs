use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{PolyhedralComplex, Polyhedron};
use crate::coeffs::{Coefficient, Rational, Valuation};
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Default cap on the number of index sets in a [`PlueckerLift`].
pub const DEFAULT_MINOR_CAP: usize = 5000;

/// Lifted point configuration of a Plücker vector: for each `D`-subset `J`
/// of the monomial columns, the point `M_J` (sum of exponents over `J`) and
/// the valuation of the minor `P_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerLift {
    ambient: usize,
    index_sets: Vec<Vec<usize>>,
    points: Vec<Vec<i64>>,
    lifts: Vec<Valuation>,
}

impl PlueckerLift {
    pub fn new(
        ambient: usize,
        index_sets: Vec<Vec<usize>>,
        points: Vec<Vec<i64>>,
        lifts: Vec<Valuation>,
    ) -> Result<Self> {
        if points.len() != lifts.len() || points.len() != index_sets.len() {
            return Err(Error::DimensionMismatch(
                "points, lifts and index sets differ in number".into(),
            ));
        }
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} in dimension {ambient}",
                p.len()
            )));
        }
        Ok(PlueckerLift {
            ambient,
            index_sets,
            points,
            lifts,
        })
    }

    /// Lift from bare points, one singleton index set per point.
    pub fn from_points(ambient: usize, points: Vec<Vec<i64>>, lifts: Vec<Valuation>) -> Result<Self> {
        let sets = (0..points.len()).map(|i| vec![i]).collect();
        Self::new(ambient, sets, points, lifts)
    }

    /// All maximal minors of `rows` (a `D×N` matrix whose columns are
    /// indexed by `monomials`).
    pub fn from_matrix<C: Coefficient>(rows: &[Vec<C>], monomials: &[Monomial], cap: usize) -> Result<Self> {
        let d = rows.len();
        let n_cols = monomials.len();
        let ambient = monomials.first().map(|m| m.nvars()).unwrap_or(0);
        let count = binomial(n_cols, d);
        if count > cap as u128 {
            return Err(Error::MinorExplosion {
                count: count.to_string(),
                cap,
            });
        }
        let sets = subsets(n_cols, d);
        let lifts: Vec<Valuation> = sets
            .par_iter()
            .map(|j| {
                let m: Vec<Vec<C>> = rows.iter().map(|r| j.iter().map(|&c| r[c].clone()).collect()).collect();
                determinant(m).valuation()
            })
            .collect();
        let points = sets
            .iter()
            .map(|j| {
                let mut p = vec![0i64; ambient];
                for &c in j {
                    for (x, &e) in p.iter_mut().zip(monomials[c].exponents()) {
                        *x += e as i64;
                    }
                }
                p
            })
            .collect();
        Self::new(ambient, sets, points, lifts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn index_sets(&self) -> &[Vec<usize>] {
        &self.index_sets
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn lifts(&self) -> &[Valuation] {
        &self.lifts
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc == u128::MAX {
            return acc;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Determinant by Gaussian elimination over `C`.
pub(crate) fn determinant<C: Coefficient>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    let mut d = C::one_elem();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero_elem()) else {
            return C::zero_elem();
        };
        if p != col {
            m.swap(p, col);
            d = d.neg();
        }
        d = d.mul(&m[col][col]);
        let inv = m[col][col].inv();
        for r in col + 1..n {
            if m[r][col].is_zero_elem() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let x = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&x);
            }
        }
    }
    d
}

/// Subdivision of `Q^n` by the argmin of `J ↦ v(P_J) + ω·M_J`; infinite
/// lifts impose no condition. Cells are the full-dimensional closures.
pub fn regular_subdivision_complex(lift: &PlueckerLift, n: usize) -> Result<PolyhedralComplex> {
    if lift.ambient != n {
        return Err(Error::DimensionMismatch(format!(
            "lift in dimension {} used in dimension {n}",
            lift.ambient
        )));
    }
    let mut best: BTreeMap<&Vec<i64>, &Rational> = BTreeMap::new();
    for (p, v) in lift.points.iter().zip(&lift.lifts) {
        if let Valuation::Finite(v) = v {
            best.entry(p).and_modify(|b| *b = (*b).min(v)).or_insert(v);
        }
    }
    if best.is_empty() {
        return Err(Error::NoFiniteLift);
    }
    let pts: Vec<(&Vec<i64>, &Rational)> = best.into_iter().collect();
    let cells: Vec<Polyhedron> = pts
        .par_iter()
        .map(|(p, v)| {
            let ineqs: Vec<(Vec<Rational>, Rational)> = pts
                .iter()
                .filter(|(q, _)| q != p)
                .map(|(q, w)| {
                    let a = p
                        .iter()
                        .zip(q.iter())
                        .map(|(x, y)| Rational::from_integer((x - y).into()))
                        .collect();
                    (a, *w - *v)
                })
                .collect();
            Polyhedron::from_h(n, &[], &ineqs)
        })
        .filter(|c| c.dim() == Some(n))
        .collect();
    Ok(PolyhedralComplex::new(n, cells))
}
