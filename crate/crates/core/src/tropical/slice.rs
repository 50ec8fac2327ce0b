use std::collections::HashMap;

use crate::coeffs::Coefficient;
use crate::groebner::Ideal;
use crate::poly::Monomial;

/// The degree-`d` part `I_d` as a row-reduced `D×N` matrix over the
/// coefficient field, columns indexed by the monomials of degree `d`.
#[derive(Clone, Debug)]
pub(crate) struct Slice<C> {
    pub monomials: Vec<Monomial>,
    pub exponents: Vec<Vec<i64>>,
    pub rows: Vec<Vec<C>>,
    pub pivots: Vec<usize>,
}

impl<C: Coefficient> Slice<C> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `0 < D < N`: only then does the slice subdivide weight space.
    pub fn is_proper(&self) -> bool {
        !self.rows.is_empty() && self.rows.len() < self.monomials.len()
    }
}

pub(crate) fn degree_slice<C: Coefficient>(ideal: &Ideal<C>, d: u32) -> Slice<C> {
    let n = ideal.nvars();
    let monomials = Monomial::of_degree(n, d);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<C>> = Vec::new();
    for g in ideal.generators() {
        let Some(e) = g.total_degree() else { continue };
        if e > d {
            continue;
        }
        for m in Monomial::of_degree(n, d - e) {
            let mut row = vec![C::zero_elem(); monomials.len()];
            for (mono, c) in g.terms() {
                row[index[&mono.mul(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let pivots = rref(&mut rows, monomials.len());
    let exponents = monomials
        .iter()
        .map(|m| m.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    Slice {
        monomials,
        exponents,
        rows,
        pivots,
    }
}

/// Reduced row echelon form over `C`, zero rows removed.
pub(crate) fn rref<C: Coefficient>(m: &mut Vec<Vec<C>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero_elem()) else {
            continue;
        };
        m.swap(row, p);
        pivot_row(m, row, col);
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// Scale row `r` so entry `c` is one and clear column `c` elsewhere.
pub(crate) fn pivot_row<C: Coefficient>(m: &mut [Vec<C>], r: usize, c: usize) {
    let inv = m[r][c].inv();
    if !inv.is_one_elem() {
        for x in m[r].iter_mut() {
            if !x.is_zero_elem() {
                *x = x.mul(&inv);
            }
        }
    }
    let prow = m[r].clone();
    for (i, other) in m.iter_mut().enumerate() {
        if i == r || other[c].is_zero_elem() {
            continue;
        }
        let f = other[c].clone();
        for (x, p) in other.iter_mut().zip(&prow) {
            if !p.is_zero_elem() {
                *x = x.sub(&f.mul(p));
            }
        }
    }
}
