use super::Ideal;
use crate::coeffs::Coefficient;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Intersect with the subring of the variables not in `vars`, using `order`
/// (which must eliminate `vars`). The result lives in the smaller ring with
/// the remaining variables in their original relative order.
pub fn eliminate<C: Coefficient>(ideal: &Ideal<C>, vars: &[usize], order: &MonomialOrder) -> Ideal<C> {
    let n = ideal.nvars();
    let basis = ideal.groebner_basis(order);
    let mut map = vec![None; n];
    let mut next = 0;
    for (i, slot) in map.iter_mut().enumerate() {
        if !vars.contains(&i) {
            *slot = Some(next);
            next += 1;
        }
    }
    let kept: Vec<Polynomial<C>> = basis
        .elements()
        .iter()
        .filter(|g| vars.iter().all(|&v| !g.involves(v)))
        .map(|g| g.remap_vars(next, &map))
        .collect();
    Ideal::new_nongraded(next, kept)
}

/// Lex order `λ_1 ≻ … ≻ λ_l ≻ θ_1 ≻ … ≻ θ_l ≻ x_1 ≻ … ≻ x_n` on the ring
/// laid out as `x, λ, θ`.
pub fn projection_lex_order(n: usize, l: usize) -> MonomialOrder {
    let mut priority: Vec<usize> = (n..n + 2 * l).collect();
    priority.extend(0..n);
    MonomialOrder::lex_with_priority(priority)
}

/// Contraction of an ideal in `x, λ, θ` to the `x`-subring, via the lex
/// elimination order.
pub fn elimination_ideal<C: Coefficient>(ideal: &Ideal<C>, n: usize, l: usize) -> Ideal<C> {
    assert_eq!(ideal.nvars(), n + 2 * l, "ring layout does not match");
    let vars: Vec<usize> = (n..n + 2 * l).collect();
    eliminate(ideal, &vars, &projection_lex_order(n, l))
}

/// The same contraction as [`elimination_ideal`] through the block order
/// `deg_{λ,θ}` first, grevlex after.
pub fn elimination_ideal_block<C: Coefficient>(ideal: &Ideal<C>, n: usize, l: usize) -> Ideal<C> {
    assert_eq!(ideal.nvars(), n + 2 * l, "ring layout does not match");
    let vars: Vec<usize> = (n..n + 2 * l).collect();
    eliminate(ideal, &vars, &MonomialOrder::elimination(n + 2 * l, &vars))
}

/// `(I : f^∞)` through an extra variable `z` with generator `z·f - 1`.
pub fn saturate<C: Coefficient>(ideal: &Ideal<C>, f: &Polynomial<C>) -> Ideal<C> {
    assert!(!f.is_zero(), "saturation by zero");
    let n = ideal.nvars();
    let mut gens: Vec<Polynomial<C>> = ideal.generators().iter().map(|g| g.extend_vars(1)).collect();
    let z = Polynomial::var(n + 1, n);
    gens.push(z.mul(&f.extend_vars(1)).sub(&Polynomial::one(n + 1)));
    let aux = Ideal::new_nongraded(n + 1, gens);
    eliminate(&aux, &[n], &MonomialOrder::elimination(n + 1, &[n]))
}

/// `(I : x_k^∞)` for homogeneous `I`: grevlex with `x_k` last, then strip
/// powers of `x_k` from the basis.
pub fn saturate_by_variable<C: Coefficient>(ideal: &Ideal<C>, k: usize) -> Ideal<C> {
    let n = ideal.nvars();
    let mut priority: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    priority.push(k);
    let basis = ideal.groebner_basis(&MonomialOrder::grevlex_with_priority(priority));
    let gens = basis
        .elements()
        .iter()
        .map(|g| {
            let m = g.monomials().map(|m| m.0[k]).min().unwrap_or(0);
            if m == 0 {
                return g.clone();
            }
            Polynomial::from_terms(
                n,
                g.terms().map(|(mono, c)| {
                    let mut e = mono.0.clone();
                    e[k] -= m;
                    (Monomial(e), c.clone())
                }),
            )
        })
        .collect();
    Ideal::new_nongraded(n, gens)
}

/// `(I : (x_1⋯x_n)^∞)` for homogeneous `I`.
pub fn saturate_by_all_variables<C: Coefficient>(ideal: &Ideal<C>) -> Ideal<C> {
    let mut cur = ideal.clone();
    for k in 0..ideal.nvars() {
        cur = saturate_by_variable(&cur, k);
        if cur.is_unit() {
            break;
        }
    }
    cur
}

/// Cap on monomials enumerated per degree while searching for a small
/// witness; past it the witness is a power of `x_1⋯x_n`.
const WITNESS_SEARCH_LIMIT: usize = 5000;

/// Decide whether `I` contains a monomial and return one if so.
///
/// For ideals flagged prime the test is the normal form of `x_1⋯x_n`;
/// otherwise the saturation by the product of all variables is computed.
/// The witness is a monomial of least degree, largest in grevlex among those.
pub fn contains_monomial<C: Coefficient>(ideal: &Ideal<C>, prime: bool) -> Option<Monomial> {
    let n = ideal.nvars();
    let basis = ideal.grevlex_basis();
    if basis.is_unit() {
        return Some(Monomial::one(n));
    }
    let all = Polynomial::term(Monomial::all_vars(n), C::one_elem());
    let power = if prime {
        if !basis.contains(&all) {
            return None;
        }
        1
    } else {
        let sat = if ideal.is_graded() {
            saturate_by_all_variables(ideal)
        } else {
            saturate(ideal, &all)
        };
        if !sat.is_unit() {
            return None;
        }
        let mut k = 1u32;
        while !basis.contains(&all.pow(k)) {
            k += 1;
        }
        k
    };
    let bound = power * n as u32;
    for d in 0..=bound {
        let monos = Monomial::of_degree(n, d);
        if monos.len() > WITNESS_SEARCH_LIMIT {
            break;
        }
        if let Some(m) = monos
            .into_iter()
            .find(|m| basis.contains(&Polynomial::term(m.clone(), C::one_elem())))
        {
            return Some(m);
        }
    }
    Some(Monomial(vec![power; n]))
}

/// `dim_Q (S/I)_d` for homogeneous `I`, by counting standard monomials.
pub fn hilbert_function<C: Coefficient>(ideal: &Ideal<C>, d: u32) -> u64 {
    let basis = ideal.grevlex_basis();
    Monomial::of_degree(ideal.nvars(), d)
        .iter()
        .filter(|m| basis.is_standard(m))
        .count() as u64
}

/// Krull dimension of `S/I` from the leading monomial ideal: the largest
/// set of variables containing the support of no leading monomial. `None`
/// for the unit ideal.
pub fn krull_dimension<C: Coefficient>(ideal: &Ideal<C>) -> Option<usize> {
    let basis = ideal.grevlex_basis();
    if basis.is_unit() {
        return None;
    }
    let n = ideal.nvars();
    let supports: Vec<u64> = basis
        .leads()
        .iter()
        .map(|m| {
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Some(best)
}

/// `I ∩ J` via `w·I + (1 - w)·J` and elimination of `w`.
pub fn intersect<C: Coefficient>(a: &Ideal<C>, b: &Ideal<C>) -> Ideal<C> {
    let n = a.nvars();
    let w = Polynomial::var(n + 1, n);
    let one_minus_w = Polynomial::one(n + 1).sub(&w);
    let mut gens: Vec<Polynomial<C>> = a.generators().iter().map(|g| w.mul(&g.extend_vars(1))).collect();
    gens.extend(b.generators().iter().map(|g| one_minus_w.mul(&g.extend_vars(1))));
    let aux = Ideal::new_nongraded(n + 1, gens);
    eliminate(&aux, &[n], &MonomialOrder::elimination(n + 1, &[n]))
}
