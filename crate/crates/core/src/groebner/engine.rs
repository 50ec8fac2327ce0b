//! Buchberger's algorithm on a flat term representation.
//!
//! Terms carry their order key; since keys are linear in the exponents the
//! key of `m · t` is `key(m) + key(t)`, so reductions never re-evaluate the
//! order. Polynomials are stored in increasing order, leading term last.

use std::cmp::Ordering;

use crate::coeffs::Coefficient;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug)]
pub(crate) struct Term<C> {
    pub key: Vec<i128>,
    pub mono: Monomial,
    pub coeff: C,
}

pub(crate) type SPoly<C> = Vec<Term<C>>;

fn add_keys(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn to_sorted<C: Coefficient>(p: &Polynomial<C>, order: &MonomialOrder) -> SPoly<C> {
    let mut v: SPoly<C> = p
        .terms()
        .map(|(m, c)| Term {
            key: order.key(m),
            mono: m.clone(),
            coeff: c.clone(),
        })
        .collect();
    v.sort_by(|a, b| a.key.cmp(&b.key));
    v
}

pub(crate) fn from_sorted<C: Coefficient>(p: &SPoly<C>, nvars: usize) -> Polynomial<C> {
    Polynomial::from_terms(nvars, p.iter().map(|t| (t.mono.clone(), t.coeff.clone())))
}

fn make_monic<C: Coefficient>(p: &mut SPoly<C>) {
    if let Some(lead) = p.last() {
        if !lead.coeff.is_one_elem() {
            let inv = lead.coeff.inv();
            for t in p.iter_mut() {
                t.coeff = t.coeff.mul(&inv);
            }
        }
    }
}

/// `a - c · m · b` where `a` and `b` are sorted ascending.
fn sub_mul<C: Coefficient>(a: SPoly<C>, b: &[Term<C>], c: &C, m: &Monomial, mkey: &[i128]) -> SPoly<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ai.next().unwrap()),
            (None, Some(_)) => {
                let t = bi.next().unwrap();
                out.push(Term {
                    key: add_keys(&t.key, mkey),
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c).neg(),
                });
            }
            (Some(x), Some(y)) => {
                let ykey = add_keys(&y.key, mkey);
                match x.key.cmp(&ykey) {
                    Ordering::Less => out.push(ai.next().unwrap()),
                    Ordering::Greater => {
                        let t = bi.next().unwrap();
                        out.push(Term {
                            key: ykey,
                            mono: t.mono.mul(m),
                            coeff: t.coeff.mul(c).neg(),
                        });
                    }
                    Ordering::Equal => {
                        let x = ai.next().unwrap();
                        let t = bi.next().unwrap();
                        let s = x.coeff.sub(&t.coeff.mul(c));
                        if !s.is_zero_elem() {
                            out.push(Term {
                                key: x.key,
                                mono: x.mono,
                                coeff: s,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Reduce `h` by monic `basis`. With `full = false` only the leading term
/// is reduced; otherwise every term is.
pub(crate) fn reduce<C: Coefficient>(mut h: SPoly<C>, basis: &[&SPoly<C>], full: bool) -> SPoly<C> {
    let mut done: Vec<Term<C>> = Vec::new();
    while let Some(lead) = h.last() {
        let div = basis
            .iter()
            .find(|g| g.last().is_some_and(|gl| gl.mono.divides(&lead.mono)));
        match div {
            Some(g) => {
                let lead = h.pop().unwrap();
                let gl = g.last().unwrap();
                let m = gl.mono.quotient_of(&lead.mono);
                let mkey: Vec<i128> = lead.key.iter().zip(&gl.key).map(|(a, b)| a - b).collect();
                h = sub_mul(h, &g[..g.len() - 1], &lead.coeff, &m, &mkey);
            }
            None => {
                if !full {
                    break;
                }
                done.push(h.pop().unwrap());
            }
        }
    }
    // `done` holds the reduced terms in decreasing order.
    done.reverse();
    h.extend(done);
    h
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Vec<i128>,
    sugar: u32,
}

struct Element<C> {
    poly: SPoly<C>,
    sugar: u32,
    active: bool,
}

fn lead<C>(p: &SPoly<C>) -> &Monomial {
    &p.last().expect("basis elements are nonzero").mono
}

fn update<C: Coefficient>(elems: &mut [Element<C>], pairs: &mut Vec<Pair>, h: usize, order: &MonomialOrder) {
    let hl = lead(&elems[h].poly).clone();
    let candidates: Vec<(usize, Monomial)> = (0..h)
        .filter(|&g| elems[g].active)
        .map(|g| (g, hl.lcm(lead(&elems[g].poly))))
        .collect();
    // Chain criterion among the new pairs; coprime pairs are kept for the
    // test and dropped afterwards.
    let mut keep = Vec::new();
    for (idx, (g, l)) in candidates.iter().enumerate() {
        let coprime = hl.is_coprime(lead(&elems[*g].poly));
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(k, (_, l2))| k != idx && l2.divides(l) && (l2 != l || k < idx));
        if coprime || !dominated {
            keep.push((*g, l.clone(), coprime));
        }
    }
    // Old pairs made redundant by h.
    pairs.retain(|p| {
        let li = hl.lcm(lead(&elems[p.i].poly));
        let lj = hl.lcm(lead(&elems[p.j].poly));
        !(hl.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    let hs = elems[h].sugar;
    let hdeg = hl.degree();
    for (g, l, coprime) in keep {
        if coprime {
            continue;
        }
        let gl = lead(&elems[g].poly);
        let sugar = (hs + l.degree() - hdeg).max(elems[g].sugar + l.degree() - gl.degree());
        pairs.push(Pair {
            i: g,
            j: h,
            key: order.key(&l),
            lcm: l,
            sugar,
        });
    }
    for g in 0..h {
        if elems[g].active && hl.divides(lead(&elems[g].poly)) {
            elems[g].active = false;
        }
    }
}

fn spoly<C: Coefficient>(a: &SPoly<C>, b: &SPoly<C>, lcm: &Monomial, lkey: &[i128]) -> SPoly<C> {
    let al = a.last().unwrap();
    let bl = b.last().unwrap();
    let ma = al.mono.quotient_of(lcm);
    let mb = bl.mono.quotient_of(lcm);
    let ka: Vec<i128> = lkey.iter().zip(&al.key).map(|(x, y)| x - y).collect();
    let kb: Vec<i128> = lkey.iter().zip(&bl.key).map(|(x, y)| x - y).collect();
    let ta: SPoly<C> = a[..a.len() - 1]
        .iter()
        .map(|t| Term {
            key: add_keys(&t.key, &ka),
            mono: t.mono.mul(&ma),
            coeff: t.coeff.clone(),
        })
        .collect();
    sub_mul(ta, &b[..b.len() - 1], &C::one_elem(), &mb, &kb)
}

/// Reduced Gröbner basis, leads ascending. Inputs need not be homogeneous.
pub(crate) fn groebner<C: Coefficient>(gens: &[Polynomial<C>], order: &MonomialOrder) -> Vec<SPoly<C>> {
    let mut elems: Vec<Element<C>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut input: Vec<SPoly<C>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_sorted(g, order))
        .collect();
    input.sort_by(|a, b| a.last().unwrap().key.cmp(&b.last().unwrap().key));
    for g in input {
        let sugar = g.iter().map(|t| t.mono.degree()).max().unwrap_or(0);
        let basis: Vec<&SPoly<C>> = elems.iter().filter(|e| e.active).map(|e| &e.poly).collect();
        let mut h = reduce(g, &basis, true);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if lead(&h).is_one() {
            return vec![h];
        }
        elems.push(Element {
            poly: h,
            sugar,
            active: true,
        });
        let idx = elems.len() - 1;
        update(&mut elems, &mut pairs, idx, order);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| pairs[a].key.cmp(&pairs[b].key))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let s = spoly(&elems[p.i].poly, &elems[p.j].poly, &p.lcm, &p.key);
        let basis: Vec<&SPoly<C>> = elems.iter().filter(|e| e.active).map(|e| &e.poly).collect();
        let mut h = reduce(s, &basis, true);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if lead(&h).is_one() {
            return vec![h];
        }
        elems.push(Element {
            poly: h,
            sugar: p.sugar,
            active: true,
        });
        let idx = elems.len() - 1;
        update(&mut elems, &mut pairs, idx, order);
    }
    let mut basis: Vec<SPoly<C>> = elems.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
    basis.sort_by(|a, b| a.last().unwrap().key.cmp(&b.last().unwrap().key));
    // Inter-reduce the tails.
    for i in 0..basis.len() {
        let mut p = std::mem::take(&mut basis[i]);
        let lt = p.pop().unwrap();
        let others: Vec<&SPoly<C>> = basis.iter().filter(|q| !q.is_empty()).collect();
        let mut r = reduce(p, &others, true);
        r.push(lt);
        basis[i] = r;
    }
    basis
}
