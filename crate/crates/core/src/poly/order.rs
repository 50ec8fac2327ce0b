use std::cmp::Ordering;

use num_traits::ToPrimitive;

use super::{Monomial, WeightVector};
use crate::coeffs::lcm_denominators;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    Grevlex,
}

/// A monomial order given by integer weight rows (larger dot product means
/// larger monomial), followed by a lex or grevlex tiebreak on a variable
/// priority list (`priority[0]` is the largest variable).
///
/// Because every component is linear in the exponents, the comparison key of
/// a product is the sum of the keys, which the Gröbner engine exploits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    rows: Vec<Vec<i128>>,
    tiebreak: Tiebreak,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        Self::lex_with_priority((0..n).collect())
    }

    pub fn lex_with_priority(priority: Vec<usize>) -> Self {
        Self::check_priority(&priority);
        MonomialOrder {
            nvars: priority.len(),
            rows: vec![],
            tiebreak: Tiebreak::Lex,
            priority,
        }
    }

    pub fn grevlex(n: usize) -> Self {
        Self::grevlex_with_priority((0..n).collect())
    }

    pub fn grevlex_with_priority(priority: Vec<usize>) -> Self {
        Self::check_priority(&priority);
        MonomialOrder {
            nvars: priority.len(),
            rows: vec![],
            tiebreak: Tiebreak::Grevlex,
            priority,
        }
    }

    fn check_priority(p: &[usize]) {
        let mut seen = vec![false; p.len()];
        for &i in p {
            assert!(i < p.len() && !seen[i], "priority list is not a permutation");
            seen[i] = true;
        }
    }

    /// Degree first, then minimum `ω`-weight, then the tiebreak.
    pub fn weight_refined(w: &WeightVector, tiebreak: Tiebreak) -> Self {
        let n = w.len();
        let scaled = scale_to_integers(w);
        MonomialOrder {
            nvars: n,
            rows: vec![vec![1; n], scaled.into_iter().map(|x| -x).collect()],
            tiebreak,
            priority: (0..n).collect(),
        }
    }

    /// Block order: more total degree in `block` means larger, grevlex after.
    /// A Gröbner basis for it contains a basis of the elimination ideal.
    pub fn elimination(n: usize, block: &[usize]) -> Self {
        let mut row = vec![0; n];
        for &i in block {
            row[i] = 1;
        }
        MonomialOrder {
            nvars: n,
            rows: vec![row],
            tiebreak: Tiebreak::Grevlex,
            priority: (0..n).collect(),
        }
    }

    /// Order with arbitrary integer rows (max convention) and a tiebreak.
    pub fn from_rows(rows: Vec<Vec<i128>>, tiebreak: Tiebreak, priority: Vec<usize>) -> Self {
        Self::check_priority(&priority);
        for r in &rows {
            assert_eq!(r.len(), priority.len());
        }
        MonomialOrder {
            nvars: priority.len(),
            rows,
            tiebreak,
            priority,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    pub fn key_len(&self) -> usize {
        self.rows.len()
            + match self.tiebreak {
                Tiebreak::Lex => self.nvars,
                Tiebreak::Grevlex => self.nvars + 1,
            }
    }

    /// Lexicographically comparable key; larger key means larger monomial.
    pub fn key(&self, m: &Monomial) -> Vec<i128> {
        let e = &m.0;
        let mut k = Vec::with_capacity(self.key_len());
        for r in &self.rows {
            k.push(r.iter().zip(e).map(|(a, &b)| a * b as i128).sum());
        }
        match self.tiebreak {
            Tiebreak::Lex => k.extend(self.priority.iter().map(|&i| e[i] as i128)),
            Tiebreak::Grevlex => {
                k.push(e.iter().map(|&x| x as i128).sum());
                k.extend(self.priority.iter().rev().map(|&i| -(e[i] as i128)));
            }
        }
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

fn scale_to_integers(w: &WeightVector) -> Vec<i128> {
    let l = lcm_denominators(w.entries());
    w.entries()
        .iter()
        .map(|q| {
            (q * &l)
                .to_integer()
                .to_i128()
                .expect("weight vector too large for machine integers")
        })
        .collect()
}
