use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::series::FiniteSeries;
use super::upoly::UPoly;
use super::{lcm_denominators, CoeffDomain, Coefficient, Rational, Valuation};
use crate::error::{Error, Result};

/// Element `num / den` of the fraction field of finite generalized power
/// series.
///
/// Values are kept in lowest terms with `den(0) = 1` (the denominator has
/// valuation zero and constant term one), so `den` is `1` exactly when the
/// value is itself a finite series.
#[derive(Clone, Debug)]
pub struct PuiseuxScalar {
    num: FiniteSeries,
    den: FiniteSeries,
}

impl PuiseuxScalar {
    pub fn new(num: FiniteSeries, den: FiniteSeries) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_series(num: FiniteSeries) -> Self {
        PuiseuxScalar {
            num,
            den: FiniteSeries::one(),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_series(FiniteSeries::constant(q))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `t^e`.
    pub fn t_pow(e: Rational) -> Self {
        Self::from_series(FiniteSeries::monomial(Rational::one(), e))
    }

    pub fn numerator(&self) -> &FiniteSeries {
        &self.num
    }

    pub fn denominator(&self) -> &FiniteSeries {
        &self.den
    }

    pub fn is_series(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(num: FiniteSeries, den: FiniteSeries) -> Self {
        if num.is_zero() {
            return Self::from_series(num);
        }
        let b = den.valuation().expect("nonzero denominator").clone();
        if den.len() == 1 {
            let c = den.lowest_coefficient().unwrap().recip();
            return Self::from_series(num.scale(&c).shift(&-b));
        }
        let a = num.valuation().unwrap().clone();
        let n = lcm_denominators(num.terms().chain(den.terms()).map(|(e, _)| e));
        let mut p = num.to_upoly(&n);
        let mut q = den.to_upoly(&n);
        let g = UPoly::gcd(&p, &q);
        if !g.is_one() {
            p = p.div_rem(&g).0;
            q = q.div_rem(&g).0;
        }
        let q0 = q.0[0].clone();
        let p = UPoly(p.0.iter().map(|c| c / &q0).collect());
        let q = UPoly(q.0.iter().map(|c| c / &q0).collect());
        let shift = &a - &b;
        let num = FiniteSeries::from_upoly(&p, &n, &shift);
        if q.is_one() {
            return Self::from_series(num);
        }
        let den = FiniteSeries::from_upoly(&q, &n, &Rational::zero());
        PuiseuxScalar { num, den }
    }

    pub fn valuation(&self) -> Valuation {
        match self.num.valuation() {
            None => Valuation::Infinite,
            Some(a) => Valuation::Finite(a - self.den.valuation().unwrap()),
        }
    }

    /// Image in the residue field. Defined on the valuation ring only.
    pub fn residue(&self) -> Result<Rational> {
        match self.valuation() {
            Valuation::Infinite => Ok(Rational::zero()),
            Valuation::Finite(v) if v.is_negative() => Err(Error::NegativeValuation(v)),
            Valuation::Finite(v) if v.is_positive() => Ok(Rational::zero()),
            Valuation::Finite(_) => Ok(self.leading()),
        }
    }

    fn leading(&self) -> Rational {
        self.num.lowest_coefficient().unwrap() / self.den.lowest_coefficient().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_series() && o.is_series() {
            return Self::from_series(self.num.add(&o.num));
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        PuiseuxScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_series() && o.is_series() {
            return Self::from_series(self.num.mul(&o.num));
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one_value().checked_div(self)
    }

    fn one_value() -> Self {
        Self::from_series(FiniteSeries::one())
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one_value();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl PartialEq for PuiseuxScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for PuiseuxScalar {}

// Lowest-terms form is unique, so hashing it is consistent with `eq`.
impl Hash for PuiseuxScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_series() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for PuiseuxScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p = crate::text::parse_polynomial(s, &crate::text::VarLayout::new(0, 0), 1)?;
        Ok(p.constant_coefficient())
    }
}

impl Coefficient for PuiseuxScalar {
    const DOMAIN: CoeffDomain = CoeffDomain::Puiseux;

    fn zero_elem() -> Self {
        Self::from_series(FiniteSeries::zero())
    }
    fn one_elem() -> Self {
        Self::one_value()
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one_elem(&self) -> bool {
        self.is_series() && self.num.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        PuiseuxScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PuiseuxScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PuiseuxScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        PuiseuxScalar::neg(self)
    }
    fn inv(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
    fn from_rational(q: &Rational) -> Self {
        PuiseuxScalar::from_rational(q.clone())
    }
    fn valuation(&self) -> Valuation {
        PuiseuxScalar::valuation(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.is_series() {
            self.num.as_constant()
        } else {
            None
        }
    }
    fn lowest_coefficient(&self) -> Rational {
        if self.is_zero() {
            Rational::zero()
        } else {
            self.leading()
        }
    }
    fn to_scalar(&self) -> PuiseuxScalar {
        self.clone()
    }
}

/// Scale a list of scalars by a common nonzero factor so that all become
/// finite series with nonnegative exponents, and return the common exponent
/// denominator `N` of the results.
pub fn clear_denominators(coeffs: &[PuiseuxScalar]) -> (BigInt, Vec<FiniteSeries>) {
    let mut dens: Vec<&FiniteSeries> = Vec::new();
    for c in coeffs {
        if !c.den.is_one() && !dens.contains(&&c.den) {
            dens.push(&c.den);
        }
    }
    let mut out: Vec<FiniteSeries> = coeffs
        .iter()
        .map(|c| {
            let mut s = c.num.clone();
            for d in &dens {
                if **d != c.den {
                    s = s.mul(d);
                }
            }
            s
        })
        .collect();
    let min = out.iter().filter_map(|s| s.valuation()).min().cloned();
    if let Some(m) = min {
        if m.is_negative() {
            let shift = -m;
            out = out.iter().map(|s| s.shift(&shift)).collect();
        }
    }
    let n = lcm_denominators(out.iter().flat_map(|s| s.terms().map(|(e, _)| e)));
    (n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ratio};

    fn p(s: &str) -> PuiseuxScalar {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p("3*t^(1/2) + t^2").valuation(), Valuation::Finite(ratio(1, 2)));
        assert_eq!(p("0").valuation(), Valuation::Infinite);
        assert_eq!(p("(t + t^2)/t").valuation(), Valuation::Finite(rat(0)));
        assert_eq!(p("(t + t^2)/t"), p("1 + t"));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(p("2 + t").residue().unwrap(), rat(2));
        assert_eq!(p("t^(1/3)").residue().unwrap(), rat(0));
        assert_eq!(p("(2 + t)/(1 + 3*t)").residue().unwrap(), rat(2));
        assert!(matches!(p("t^(-1) + 1").residue(), Err(Error::NegativeValuation(_))));
    }

    #[test]
    fn field_examples() {
        let a = p("1 + t");
        assert_eq!(a.mul(&a.recip().unwrap()), PuiseuxScalar::from_int(1));
        assert_eq!(p("t^(1/2)").mul(&p("t^(1/2)")), p("t"));
        let lhs = p("t/(1 - t)").mul(&p("1 - t"));
        assert_eq!(lhs, p("t"));
        assert!(lhs.is_series());
        assert_eq!(p("1").checked_div(&p("0")).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn lowest_terms_normal_form() {
        let a = p("(1 - t)/(1 - t^(1/2))");
        assert!(a.is_series());
        assert_eq!(a.to_string(), "1 + t^(1/2)");
        let b = p("(6 + 3*t)/(2 + 4*t)");
        assert_eq!(b.denominator().to_string(), "1 + 2*t");
        assert_eq!(b.numerator().to_string(), "3 + 3/2*t");
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["(3*t^(1/2) - t)/(1 + 2*t)", "-2/3*t^(-5/2) + 7", "0", "t"] {
            let a = p(s);
            let b = p(&a.to_string());
            assert_eq!(a, b, "{s}");
            assert_eq!(a.to_string(), b.to_string());
        }
    }

    #[test]
    fn clear_denominators_examples() {
        let (n, s) = clear_denominators(&[p("1"), p("t")]);
        assert_eq!(n, BigInt::from(1));
        assert_eq!(s, vec![p("1").num, p("t").num]);

        let (n, s) = clear_denominators(&[p("t^(1/2)"), p("t")]);
        assert_eq!(n, BigInt::from(2));
        assert_eq!(s, vec![p("t^(1/2)").num, p("t").num]);

        let (n, s) = clear_denominators(&[p("1/(1 + t)")]);
        assert_eq!(n, BigInt::from(1));
        assert_eq!(s, vec![FiniteSeries::one()]);
    }

    #[test]
    fn clear_denominators_preserves_ratios() {
        let cs = [p("t^(-1)/(1 + t)"), p("2/(1 - t^(1/3))"), p("t^2")];
        let (n, s) = clear_denominators(&cs);
        assert_eq!(n, BigInt::from(3));
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                let lhs = cs[i].mul(&PuiseuxScalar::from_series(s[j].clone()));
                let rhs = cs[j].mul(&PuiseuxScalar::from_series(s[i].clone()));
                assert_eq!(lhs, rhs);
            }
            assert!(s[i].terms().all(|(e, _)| !e.is_negative()));
        }
    }
}
