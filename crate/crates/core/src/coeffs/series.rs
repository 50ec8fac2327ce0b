use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::upoly::UPoly;
use super::{fmt_rational, lcm_denominators, Rational};

/// `Σ c_e t^e` with finitely many nonzero rational coefficients and rational
/// exponents. The zero series has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FiniteSeries {
    terms: BTreeMap<Rational, Rational>,
}

impl FiniteSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// `c · t^e`.
    pub fn monomial(c: Rational, e: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        FiniteSeries { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut s = Self::zero();
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: Rational, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms as (exponent, coefficient) in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Smallest exponent, `None` for the zero series.
    pub fn valuation(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    /// Coefficient of the smallest exponent.
    pub fn lowest_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    pub fn coefficient(&self, e: &Rational) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` if the series is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        FiniteSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FiniteSeries {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiply by `t^shift`.
    pub fn shift(&self, shift: &Rational) -> Self {
        FiniteSeries {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Least common multiple of the exponent denominators.
    pub fn exponent_denominator(&self) -> BigInt {
        lcm_denominators(self.terms.keys())
    }

    /// Write `t^(-v) · self` as a polynomial in `s = t^(1/N)`. Every exponent
    /// of `self` must be a multiple of `1/N`.
    pub(crate) fn to_upoly(&self, n: &BigInt) -> UPoly {
        let Some(v) = self.valuation() else {
            return UPoly::new(vec![]);
        };
        let nq = Rational::from_integer(n.clone());
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            let k = (e - v) * &nq;
            debug_assert!(k.is_integer());
            let k = k
                .to_integer()
                .to_usize()
                .expect("exponent span too large for a dense polynomial");
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        UPoly::new(coeffs)
    }

    /// Inverse of [`Self::to_upoly`]: `t^v · p(t^(1/N))`.
    pub(crate) fn from_upoly(p: &UPoly, n: &BigInt, v: &Rational) -> Self {
        let mut s = Self::zero();
        for (k, c) in p.0.iter().enumerate() {
            s.add_term(v + Rational::new(BigInt::from(k), n.clone()), c.clone());
        }
        s
    }
}

pub(crate) fn fmt_t_power(e: &Rational) -> String {
    if e.is_one() {
        "t".to_string()
    } else if e.is_integer() && e.is_positive() {
        format!("t^{}", e.numer())
    } else {
        format!("t^({})", fmt_rational(e))
    }
}

impl fmt::Display for FiniteSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if e.is_zero() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&fmt_t_power(e))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_t_power(e))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ratio};

    #[test]
    fn cancellation_removes_terms() {
        let a = FiniteSeries::from_terms([(rat(0), rat(1)), (rat(1), rat(1))]);
        let b = FiniteSeries::monomial(rat(-1), rat(1));
        let s = a.add(&b);
        assert!(s.as_constant() == Some(rat(1)));
    }

    #[test]
    fn display_orders_by_exponent() {
        let a = FiniteSeries::from_terms([(rat(2), rat(1)), (ratio(1, 2), rat(3))]);
        assert_eq!(a.to_string(), "3*t^(1/2) + t^2");
        let b = FiniteSeries::from_terms([(rat(-1), rat(-2)), (rat(0), ratio(1, 3))]);
        assert_eq!(b.to_string(), "-2*t^(-1) + 1/3");
    }

    #[test]
    fn upoly_round_trip() {
        let a = FiniteSeries::from_terms([(ratio(1, 2), rat(3)), (rat(2), rat(1))]);
        let n = a.exponent_denominator();
        assert_eq!(n, BigInt::from(2));
        let p = a.to_upoly(&n);
        assert_eq!(p.degree(), Some(3));
        let back = FiniteSeries::from_upoly(&p, &n, a.valuation().unwrap());
        assert_eq!(back, a);
    }
}
