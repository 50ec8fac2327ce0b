use std::fmt;

use num_traits::Zero;

use super::Polynomial;
use crate::coeffs::{Coefficient, Rational, Valuation};
use crate::error::{Error, Result};
use crate::text::parse_rational;

/// Rational weight vector `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        WeightVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVector(v.iter().map(|&x| crate::coeffs::rat(x)).collect())
    }

    /// Parse a comma separated list of rationals such as `1/2, -3, 0.25`.
    pub fn parse(s: &str) -> Result<Self> {
        s.split(',')
            .map(|part| parse_rational(part).ok_or_else(|| Error::IrrationalWeight(part.trim().into())))
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot_exponents(&self, e: &[u32]) -> Rational {
        self.0
            .iter()
            .zip(e)
            .filter(|(_, &x)| x != 0)
            .map(|(w, &x)| w * Rational::from_integer(x.into()))
            .sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_len<C: Coefficient>(f: &Polynomial<C>, w: &WeightVector) -> Result<()> {
    if f.nvars() != w.len() {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for a polynomial in {} variables",
            w.len(),
            f.nvars()
        )));
    }
    Ok(())
}

fn term_weight<C: Coefficient>(c: &C, e: &[u32], w: &WeightVector) -> Rational {
    match c.valuation() {
        Valuation::Finite(v) => v + w.dot_exponents(e),
        Valuation::Infinite => unreachable!("stored coefficients are nonzero"),
    }
}

/// `W = min_ν v(a_ν) + ω·ν`.
pub fn weight_of<C: Coefficient>(f: &Polynomial<C>, w: &WeightVector) -> Result<Rational> {
    check_len(f, w)?;
    f.terms()
        .map(|(m, c)| term_weight(c, &m.0, w))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

/// Initial form over the residue field: residues of `a_ν t^(ω·ν − W)` on the
/// terms attaining `W`.
pub fn initial_form<C: Coefficient>(f: &Polynomial<C>, w: &WeightVector) -> Result<Polynomial<Rational>> {
    let min = weight_of(f, w)?;
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.terms()
            .filter(|(m, c)| term_weight(*c, &m.0, w) == min)
            .map(|(m, c)| (m.clone(), c.lowest_coefficient())),
    ))
}
