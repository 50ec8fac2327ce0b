//! Walk over the maximal cells of the common refinement of the degree-wise
//! subdivisions `C^d`. In each degree the cell of ω is the set where the
//! basis `J` of `I_d` minimizes `v(P_J) + ω·M_J`; by the exchange property
//! of valuated matroids this holds iff no single exchange improves it, and
//! the Plücker ratio of the exchange `J_i → k` is the entry `B_ik` of the
//! matrix reduced at `J`. So the cell is cut out by
//! `(μ_{J_i} - μ_k)·ω ≤ v(B_ik)`.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::slice::{pivot_row, Slice};
use crate::coeffs::{Coefficient, Rational, Valuation};
use crate::error::{Error, Result};
use crate::polyhedra::Polyhedron;

#[derive(Clone)]
struct DegreeState<C> {
    slice: Arc<Slice<C>>,
    basis: Vec<usize>,
    matrix: Vec<Vec<C>>,
    vals: Vec<Vec<Valuation>>,
}

fn int_dot(a: &[i64], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| **x != 0)
        .map(|(x, y)| y * Rational::from_integer(BigInt::from(*x)))
        .sum()
}

/// Lexicographic comparison of a change tuple against zero, evaluated
/// lazily: `(v + ω·Δ, d_1·Δ, d_2·Δ, …)`.
fn change_tuple(v: &Rational, delta: &[i64], w: &[Rational], dirs: &[Vec<Rational>]) -> Vec<Rational> {
    let mut t = Vec::with_capacity(dirs.len() + 1);
    t.push(v + int_dot(delta, w));
    for d in dirs {
        if t.last().is_some_and(|x| !x.is_zero()) {
            break;
        }
        t.push(int_dot(delta, d));
    }
    t
}

fn is_negative(t: &[Rational]) -> bool {
    t.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())
}

impl<C: Coefficient> DegreeState<C> {
    fn new(slice: Arc<Slice<C>>) -> Self {
        let matrix = slice.rows.clone();
        let basis = slice.pivots.clone();
        let vals = valuations(&matrix);
        DegreeState {
            slice,
            basis,
            matrix,
            vals,
        }
    }

    fn delta(&self, i: usize, k: usize) -> Vec<i64> {
        let e = &self.slice.exponents;
        e[k].iter().zip(&e[self.basis[i]]).map(|(a, b)| a - b).collect()
    }

    /// Exchange until the basis is optimal for `ω + ε·d_1 + ε²·d_2 + …`.
    fn optimize(&mut self, w: &[Rational], dirs: &[Vec<Rational>]) {
        loop {
            let mut best: Option<(Vec<Rational>, usize, usize)> = None;
            for i in 0..self.basis.len() {
                for k in 0..self.slice.monomials.len() {
                    let Valuation::Finite(v) = &self.vals[i][k] else {
                        continue;
                    };
                    if self.basis[i] == k {
                        continue;
                    }
                    let t = change_tuple(v, &self.delta(i, k), w, dirs);
                    if !is_negative(&t) {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((b, _, _)) => lex_less(&t, b),
                    };
                    if better {
                        best = Some((t, i, k));
                    }
                }
            }
            let Some((_, i, k)) = best else { return };
            pivot_row(&mut self.matrix, i, k);
            self.basis[i] = k;
            self.vals = valuations(&self.matrix);
        }
    }

    /// Rows `[a, b]` (`a·ω ≤ b`) of the current cell, tightest bound per
    /// normal.
    fn inequalities(&self, into: &mut BTreeMap<Vec<i64>, Rational>) {
        for i in 0..self.basis.len() {
            for k in 0..self.slice.monomials.len() {
                let Valuation::Finite(v) = &self.vals[i][k] else {
                    continue;
                };
                if self.basis[i] == k {
                    continue;
                }
                let a: Vec<i64> = self.delta(i, k).iter().map(|x| -x).collect();
                into.entry(a)
                    .and_modify(|b| {
                        if v < b {
                            *b = v.clone();
                        }
                    })
                    .or_insert_with(|| v.clone());
            }
        }
    }
}

fn lex_less(a: &[Rational], b: &[Rational]) -> bool {
    let len = a.len().max(b.len());
    for i in 0..len {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        if x != y {
            return x < y;
        }
    }
    false
}

fn valuations<C: Coefficient>(m: &[Vec<C>]) -> Vec<Vec<Valuation>> {
    m.iter().map(|r| r.iter().map(|c| c.valuation()).collect()).collect()
}

fn cell_of<C: Coefficient>(states: &[DegreeState<C>], n: usize) -> Polyhedron {
    let mut rows = BTreeMap::new();
    for s in states {
        s.inequalities(&mut rows);
    }
    let ineqs: Vec<(Vec<Rational>, Rational)> = rows
        .into_iter()
        .map(|(a, b)| (a.iter().map(|&x| Rational::from_integer(x.into())).collect(), b))
        .collect();
    Polyhedron::from_h(n, &[], &ineqs)
}

fn unit_vectors(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::from_integer(1.into());
            e
        })
        .collect()
}

/// Maximal cells of the common refinement of the subdivisions induced by
/// the given proper slices.
pub(crate) fn traverse<C: Coefficient>(slices: Vec<Slice<C>>, n: usize, cell_limit: usize) -> Result<Vec<Polyhedron>> {
    let slices: Vec<Arc<Slice<C>>> = slices.into_iter().filter(|s| s.is_proper()).map(Arc::new).collect();
    if slices.is_empty() {
        return Ok(vec![Polyhedron::whole_space(n)]);
    }
    let units = unit_vectors(n);
    let origin = vec![Rational::zero(); n];
    let mut start: Vec<DegreeState<C>> = slices.iter().cloned().map(DegreeState::new).collect();
    for s in start.iter_mut() {
        s.optimize(&origin, &units);
    }
    let first = cell_of(&start, n);
    debug_assert_eq!(first.dim(), Some(n));

    let mut seen: HashSet<Polyhedron> = HashSet::from([first.clone()]);
    let mut cells = vec![first.clone()];
    let mut frontier = vec![(start, first)];
    while !frontier.is_empty() {
        let found: Vec<(Vec<DegreeState<C>>, Polyhedron)> = frontier
            .par_iter()
            .flat_map_iter(|(states, cell)| {
                let mut out = Vec::new();
                for (row, facet) in cell.facets() {
                    let w = facet.relative_interior_point().expect("facets are nonempty");
                    let mut dirs = vec![row[..n].iter().map(|x| Rational::from_integer(x.clone())).collect()];
                    dirs.extend(units.iter().cloned());
                    let mut next = states.clone();
                    for s in next.iter_mut() {
                        s.optimize(&w, &dirs);
                    }
                    let c = cell_of(&next, n);
                    out.push((next, c));
                }
                out
            })
            .collect();
        let mut fresh: Vec<(Vec<DegreeState<C>>, Polyhedron)> = Vec::new();
        for (states, c) in found {
            if seen.insert(c.clone()) {
                fresh.push((states, c));
            }
        }
        fresh.sort_by(|a, b| a.1.cmp(&b.1));
        cells.extend(fresh.iter().map(|(_, c)| c.clone()));
        if cells.len() > cell_limit {
            return Err(Error::CellLimit(cell_limit));
        }
        frontier = fresh;
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    #[test]
    fn lexicographic_tuples() {
        assert!(is_negative(&[rat(0), rat(-1)]));
        assert!(!is_negative(&[rat(0), rat(0)]));
        assert!(lex_less(&[rat(-2)], &[rat(-1), rat(5)]));
        assert!(lex_less(&[rat(0), rat(-1)], &[rat(0)]));
        let t = change_tuple(&rat(0), &[1, -1], &[rat(2), rat(2)], &unit_vectors(2));
        assert_eq!(t, vec![rat(0), rat(1)]);
    }
}
