//! Dense univariate polynomials over the rationals.
//!
//! Only used to reduce numerator/denominator pairs of [`super::PuiseuxScalar`]
//! to lowest terms, so the surface is deliberately small.

use num_traits::{One, Zero};

use super::Rational;

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        UPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Euclidean division, returns (quotient, remainder).
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly(vec![]), UPoly::new(rem));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        let lead = d.lead();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn gcd_of_products() {
        // (1 + s)(2 - s) and (1 + s)(3 + s)
        let a = UPoly::new(vec![q(2), q(1), q(-1)]);
        let b = UPoly::new(vec![q(3), q(4), q(1)]);
        let g = UPoly::gcd(&a, &b);
        assert_eq!(g, UPoly::new(vec![q(1), q(1)]));
    }

    #[test]
    fn division_is_exact_on_multiples() {
        let a = UPoly::new(vec![q(-1), q(0), q(1)]);
        let d = UPoly::new(vec![q(-1), q(1)]);
        let (qq, r) = a.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(qq, UPoly::new(vec![q(1), q(1)]));
    }
}
