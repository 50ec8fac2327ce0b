#![allow(dead_code)]

use tropgen_core::text::{parse_polynomial, VarLayout};
use tropgen_core::{Coefficient, Ideal, Monomial, Polynomial, PuiseuxScalar, Rational, Valuation};

pub fn p(s: &str, n: usize) -> Polynomial<PuiseuxScalar> {
    parse_polynomial(s, &VarLayout::new(n, 0), 1).unwrap()
}

pub fn ideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
    Ideal::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

pub fn twisted_cubic() -> Ideal<PuiseuxScalar> {
    ideal(&["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"], 4)
}

/// Graded test ideals with their names.
pub fn pool() -> Vec<(&'static str, Ideal<PuiseuxScalar>)> {
    vec![
        ("valued plane", ideal(&["x1 + t*x2 + x3"], 3)),
        ("quadric", ideal(&["x1^2 + x1*x2 + x2^2 + x1*x3 + t*x2*x3"], 3)),
        ("linear", ideal(&["x1 + t*x2 + x3 + x4", "x2 + x3 + t^2*x4"], 4)),
        ("twisted cubic", twisted_cubic()),
        ("conic and plane", ideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3)),
        ("mixed", ideal(&["x1*x2 - t*x3^2", "x1 + x2 + x3"], 3)),
    ]
}

/// `c t^e x^ν` summed, built term by term.
pub fn from_terms(n: usize, terms: &[(Vec<u32>, i64, i64)]) -> Polynomial<PuiseuxScalar> {
    let mut f = Polynomial::zero(n);
    for (e, c, v) in terms {
        let coeff = PuiseuxScalar::from_int(*c).mul(&PuiseuxScalar::t_pow(Rational::from_integer((*v).into())));
        f = f.add(&Polynomial::term(Monomial(e.clone()), coeff));
    }
    f
}

/// Brute force: the minimum of `v(a_ν) + ω·ν` over the terms is attained
/// at least twice.
pub fn min_attained_twice<C: Coefficient>(f: &Polynomial<C>, w: &[Rational]) -> bool {
    let vals: Vec<Rational> = f
        .terms()
        .map(|(m, c)| {
            let Valuation::Finite(v) = c.valuation() else {
                unreachable!("nonzero coefficient")
            };
            m.exponents()
                .iter()
                .zip(w)
                .fold(v, |acc, (e, x)| acc + x * Rational::from_integer((*e).into()))
        })
        .collect();
    let Some(min) = vals.iter().min() else { return false };
    vals.iter().filter(|v| *v == min).count() >= 2
}

/// Brute force: the minimum coordinate of `w` is attained at least `k` times.
pub fn min_coordinate_count_at_least(w: &[Rational], k: usize) -> bool {
    let min = w.iter().min().unwrap();
    w.iter().filter(|x| *x == min).count() >= k
}
