use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::ops::saturate_by_variable;
use super::Ideal;
use crate::coeffs::{clear_denominators, Coefficient, PuiseuxScalar, Rational};
use crate::error::{Error, Result};
use crate::poly::{initial_form, Monomial, MonomialOrder, Polynomial, Tiebreak, WeightVector};

/// `in_ω(I)` over the residue field, computed with a grevlex tiebreak.
pub fn initial_ideal<C: Coefficient>(ideal: &Ideal<C>, w: &WeightVector) -> Result<Ideal<Rational>> {
    initial_ideal_with_tiebreak(ideal, w, Tiebreak::Grevlex)
}

/// As [`initial_ideal`] with an explicit tiebreak; the result does not
/// depend on it.
pub fn initial_ideal_with_tiebreak<C: Coefficient>(
    ideal: &Ideal<C>,
    w: &WeightVector,
    tiebreak: Tiebreak,
) -> Result<Ideal<Rational>> {
    let n = ideal.nvars();
    if w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for a ring in {n} variables",
            w.len()
        )));
    }
    let rational: Option<Vec<Polynomial<Rational>>> = ideal.generators().iter().map(|g| g.to_rational()).collect();
    match rational {
        Some(gens) => Ok(constant_initial_ideal(n, gens, w, tiebreak)),
        None => {
            let gens: Vec<Polynomial<PuiseuxScalar>> = ideal.generators().iter().map(|g| g.to_puiseux()).collect();
            Ok(valued_initial_ideal(n, &gens, w, tiebreak))
        }
    }
}

fn constant_initial_ideal(
    n: usize,
    gens: Vec<Polynomial<Rational>>,
    w: &WeightVector,
    tiebreak: Tiebreak,
) -> Ideal<Rational> {
    let ideal = Ideal::new_nongraded(n, gens);
    let basis = ideal.groebner_basis(&MonomialOrder::weight_refined(w, tiebreak));
    let forms = basis
        .elements()
        .iter()
        .map(|g| initial_form(g, w).expect("basis elements are nonzero"))
        .collect();
    Ideal::new_nongraded(n, forms)
}

/// Valued case. Each generator is scaled to have series coefficients with
/// nonnegative exponents in `(1/N)ℤ`, `t^(1/N)` becomes a variable `s`,
/// and every generator is homogenized in `s` with a further variable `u`
/// so that the weight `(N·ω, 1, 0)` on `(x, s, u)` can be refined to a
/// global order. After saturating by `s` and `u`, the weight-initial forms
/// of a Gröbner basis at `s = u = 1` generate `in_ω(I)`.
fn valued_initial_ideal(
    n: usize,
    gens: &[Polynomial<PuiseuxScalar>],
    w: &WeightVector,
    tiebreak: Tiebreak,
) -> Ideal<Rational> {
    let cleared: Vec<(Vec<Monomial>, BigInt, Vec<crate::coeffs::FiniteSeries>)> = gens
        .iter()
        .map(|g| {
            let (monos, coeffs): (Vec<Monomial>, Vec<PuiseuxScalar>) =
                g.terms().map(|(m, c)| (m.clone(), c.clone())).unzip();
            let (big_n, series) = clear_denominators(&coeffs);
            (monos, big_n, series)
        })
        .collect();
    let big_n = cleared.iter().fold(BigInt::one(), |acc, (_, k, _)| acc.lcm(k));
    let nq = Rational::from_integer(big_n.clone());
    let (s, u) = (n, n + 1);
    let lifted: Vec<Polynomial<Rational>> = cleared
        .iter()
        .map(|(monos, _, series)| {
            let mut terms = Vec::new();
            for (m, ser) in monos.iter().zip(series) {
                for (e, c) in ser.terms() {
                    let k = (e * &nq).to_integer().to_u32().expect("s-degree fits in u32");
                    terms.push((m, k, c.clone()));
                }
            }
            let top = terms.iter().map(|(_, k, _)| *k).max().unwrap_or(0);
            Polynomial::from_terms(
                n + 2,
                terms.into_iter().map(|(m, k, c)| {
                    let mut e = m.0.clone();
                    e.push(k);
                    e.push(top - k);
                    (Monomial(e), c)
                }),
            )
        })
        .collect();
    let lift = Ideal::new_nongraded(n + 2, lifted);
    let sat = saturate_by_variable(&saturate_by_variable(&lift, s), u);
    let mut weights: Vec<Rational> = w.entries().iter().map(|x| x * &nq).collect();
    weights.push(Rational::from_integer(1.into()));
    weights.push(Rational::from_integer(0.into()));
    let wl = WeightVector::new(weights);
    let basis = sat.groebner_basis(&MonomialOrder::weight_refined(&wl, tiebreak));
    let forms: Vec<Polynomial<Rational>> = basis
        .elements()
        .iter()
        .map(|g| {
            let f = initial_form(g, &wl).expect("basis elements are nonzero");
            Polynomial::from_terms(n, f.terms().map(|(m, c)| (Monomial(m.0[..n].to_vec()), c.clone())))
        })
        .collect();
    Ideal::new_nongraded(n, forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::hilbert_function;
    use crate::text::{parse_polynomial, parse_rational_polynomial, VarLayout};

    fn pideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
        let l = VarLayout::new(n, 0);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &l, 1).unwrap()).collect()).unwrap()
    }

    fn qideal(gens: &[&str], n: usize) -> Ideal<Rational> {
        let l = VarLayout::new(n, 0);
        Ideal::new(
            n,
            gens.iter()
                .map(|g| parse_rational_polynomial(g, &l, 1).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn principal_examples() {
        let i = pideal(&["x1 + t*x2"], 2);
        let a = initial_ideal(&i, &WeightVector::from_ints(&[0, 0])).unwrap();
        assert!(a.same_ideal(&qideal(&["x1"], 2)));
        let b = initial_ideal(&i, &WeightVector::from_ints(&[1, 0])).unwrap();
        assert!(b.same_ideal(&qideal(&["x1 + x2"], 2)));
    }

    #[test]
    fn monomial_ideal_is_fixed() {
        let i = qideal(&["x1^2*x2", "x2*x3"], 3);
        for w in [[0, 0, 0], [3, -1, 2], [-5, 7, 1]] {
            let a = initial_ideal(&i, &WeightVector::from_ints(&w)).unwrap();
            assert!(a.same_ideal(&i));
        }
    }

    #[test]
    fn initial_ideal_exceeds_initial_forms_of_generators() {
        // Initial forms of the generators alone only give (x1 + x3).
        let i = pideal(&["x1 + t*x2 + x3", "x1 + x3"], 3);
        let a = initial_ideal(&i, &WeightVector::from_ints(&[0, 0, 0])).unwrap();
        assert!(a.same_ideal(&qideal(&["x1 + x3", "x2"], 3)));
    }

    #[test]
    fn tiebreak_does_not_matter() {
        let i = pideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3);
        for w in [[0, 0, 0], [1, 0, 2], [2, 1, 0], [0, 1, 1]] {
            let w = WeightVector::from_ints(&w);
            let a = initial_ideal_with_tiebreak(&i, &w, Tiebreak::Grevlex).unwrap();
            let b = initial_ideal_with_tiebreak(&i, &w, Tiebreak::Lex).unwrap();
            assert!(a.same_ideal(&b), "at {w}");
            for d in 0..5 {
                assert_eq!(hilbert_function(&a, d), hilbert_function(&i, d));
            }
        }
    }

    #[test]
    fn fractional_exponents() {
        let i = pideal(&["x1 + t^(1/2)*x2 + (t/(1 + t))*x3"], 3);
        let a = initial_ideal(
            &i,
            &WeightVector::new(vec![
                Rational::from_integer(1.into()),
                Rational::new(1.into(), 2.into()),
                Rational::from_integer(0.into()),
            ]),
        )
        .unwrap();
        assert!(a.same_ideal(&qideal(&["x1 + x2 + x3"], 3)));
    }
}
