use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::Monomial;
use crate::coeffs::{fmt_rational, Coefficient, PuiseuxScalar, Rational};
use crate::text::VarLayout;

/// Sparse polynomial in `nvars` variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one_elem())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), C::one_elem())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero_elem() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero_elem)
    }

    pub fn constant_coefficient(&self) -> C {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// True when every coefficient lies in the rationals.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero_elem() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.mul(c)))
                .filter(|(_, a)| !a.is_zero_elem())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Lift to the valued field (identity for Puiseux coefficients).
    pub fn to_puiseux(&self) -> Polynomial<PuiseuxScalar> {
        self.map_coeffs(|c| c.to_scalar())
    }

    /// `Some` when all coefficients are rational.
    pub fn to_rational(&self) -> Option<Polynomial<Rational>> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), c.as_rational()?));
        }
        Some(Polynomial::from_terms(self.nvars, terms))
    }

    /// Rename variables: variable `i` becomes `map[i]` in a ring of `nvars`
    /// variables. Panics if a dropped variable (`None`) occurs.
    pub fn remap_vars(&self, nvars: usize, map: &[Option<usize>]) -> Self {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        let j = map[i].expect("dropped variable occurs in polynomial");
                        e[j] += x;
                    }
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Embed into a ring with `extra` further variables appended.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let map: Vec<Option<usize>> = (0..self.nvars).map(Some).collect();
        self.remap_vars(self.nvars + extra, &map)
    }

    /// Whether variable `i` occurs.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    /// Evaluate at a point.
    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero_elem();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Multiply by the inverse of the coefficient of the grevlex-largest term.
    pub fn make_monic_grevlex(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn display_with(&self, layout: &VarLayout) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_monomial(m, layout);
            let (neg, coeff) = match c.as_rational() {
                Some(q) => (q.is_negative(), Some(q.abs())),
                None => (false, None),
            };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            match coeff {
                Some(q) => {
                    let one = num_traits::One::is_one(&q);
                    if mono.is_empty() {
                        out.push_str(&fmt_rational(&q));
                    } else if one {
                        out.push_str(&mono);
                    } else {
                        out.push_str(&format!("{}*{}", fmt_rational(&q), mono));
                    }
                }
                None => {
                    if mono.is_empty() {
                        out.push_str(&format!("({c})"));
                    } else {
                        out.push_str(&format!("({c})*{mono}"));
                    }
                }
            }
        }
        out
    }
}

fn fmt_monomial(m: &Monomial, layout: &VarLayout) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = layout.name(i);
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&VarLayout::new(self.nvars, 0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial<PuiseuxScalar> {
        parse_polynomial(s, &VarLayout::new(n, 0), 1).unwrap()
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "x1^2*x2 + (2*t^(1/2))*x3^3",
            "-x1 + 3/2*x2 - (t/(1 + t))*x3",
            "x1*x3 - x2^2",
            "0",
        ] {
            let a = p(s, 3);
            let b = p(&a.to_string(), 3);
            assert_eq!(a, b, "{s} printed as {a}");
        }
    }

    #[test]
    fn ring_operations() {
        let a = p("x1 + t*x2", 2);
        let b = p("x1 - t*x2", 2);
        assert_eq!(a.mul(&b), p("x1^2 - t^2*x2^2", 2));
        assert_eq!(a.pow(2), a.mul(&a));
        assert!(a.sub(&a).is_zero());
        assert!(a.is_homogeneous());
        assert!(!p("x1 + 1", 2).is_homogeneous());
    }
}
