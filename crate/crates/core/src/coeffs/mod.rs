//! Coefficient fields: the rationals with the trivial valuation, and the
//! fraction field of finite-support generalized power series in `t` with
//! the `t`-adic valuation.

mod scalar;
mod series;
mod upoly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use scalar::{clear_denominators, PuiseuxScalar};
pub use series::FiniteSeries;

pub type Rational = BigRational;

/// A value in `Q ∪ {+∞}`; `Infinite` compares above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{q}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Which coefficient field a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Trivial,
    Puiseux,
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Trivial => f.write_str("rational"),
            CoeffDomain::Puiseux => f.write_str("puiseux"),
        }
    }
}

/// A valued coefficient field.
///
/// Arithmetic is exposed as methods rather than operator bounds so that
/// generic code can work on references without cloning.
pub trait Coefficient: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const DOMAIN: CoeffDomain;

    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn is_one_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers check first.
    fn inv(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn valuation(&self) -> Valuation;
    /// `Some(q)` if the element is the constant `q` (no `t` involved).
    fn as_rational(&self) -> Option<Rational>;
    /// Residue of `self · t^(-v(self))`, i.e. the leading coefficient.
    fn lowest_coefficient(&self) -> Rational;
    fn to_scalar(&self) -> PuiseuxScalar;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Coefficient for Rational {
    const DOMAIN: CoeffDomain = CoeffDomain::Trivial;

    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn valuation(&self) -> Valuation {
        if Zero::is_zero(self) {
            Valuation::Infinite
        } else {
            Valuation::Finite(Zero::zero())
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn lowest_coefficient(&self) -> Rational {
        self.clone()
    }
    fn to_scalar(&self) -> PuiseuxScalar {
        PuiseuxScalar::from_rational(self.clone())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators.
pub fn lcm_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Print a rational the way the parser reads it back.
pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
