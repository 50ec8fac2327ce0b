use num_traits::{One, Zero};

use super::{Monomial, Polynomial};
use crate::coeffs::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformFamily {
    General,
    Diagonal,
}

/// Invertible rational matrix `g`, acting on polynomials by
/// `x_i ↦ Σ_j g_ji x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearTransform {
    matrix: Vec<Vec<Rational>>,
    family: TransformFamily,
}

impl LinearTransform {
    pub fn new(matrix: Vec<Vec<Rational>>, family: TransformFamily) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("transform matrix is not square".into()));
        }
        if family == TransformFamily::Diagonal {
            for (i, row) in matrix.iter().enumerate() {
                if row.iter().enumerate().any(|(j, x)| i != j && !x.is_zero()) {
                    return Err(Error::PreconditionFailed(
                        "diagonal transform has off-diagonal entries".into(),
                    ));
                }
            }
        }
        if linalg::det(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearTransform { matrix, family })
    }

    pub fn from_ints(rows: &[Vec<i64>], family: TransformFamily) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::coeffs::rat(x)).collect())
                .collect(),
            family,
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![Rational::one(); n]).expect("identity is invertible")
    }

    pub fn diagonal(entries: Vec<Rational>) -> Result<Self> {
        let n = entries.len();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { entries[i].clone() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self::new(matrix, TransformFamily::Diagonal)
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn family(&self) -> TransformFamily {
        self.family
    }

    pub fn det(&self) -> Rational {
        linalg::det(&self.matrix)
    }

    pub fn inverse(&self) -> Self {
        let inv = linalg::inverse(&self.matrix).expect("stored transforms are invertible");
        LinearTransform {
            matrix: inv,
            family: self.family,
        }
    }

    /// Image of `x_i`.
    fn image_of_var<C: Coefficient>(&self, i: usize) -> Polynomial<C> {
        let n = self.n();
        Polynomial::from_terms(
            n,
            (0..n).map(|j| (Monomial::var(n, j), C::from_rational(&self.matrix[j][i]))),
        )
    }
}

/// Substitute `x_i ↦ Σ_j g_ji x_j`.
pub fn apply_transform<C: Coefficient>(g: &LinearTransform, f: &Polynomial<C>) -> Result<Polynomial<C>> {
    let n = g.n();
    if f.nvars() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n}x{n} transform applied to a polynomial in {} variables",
            f.nvars()
        )));
    }
    if g.family == TransformFamily::Diagonal {
        return Ok(Polynomial::from_terms(
            n,
            f.terms().map(|(m, c)| {
                let mut s = c.clone();
                for (i, &e) in m.0.iter().enumerate() {
                    let d = C::from_rational(&g.matrix[i][i]);
                    for _ in 0..e {
                        s = s.mul(&d);
                    }
                }
                (m.clone(), s)
            }),
        ));
    }
    let images: Vec<Polynomial<C>> = (0..n).map(|i| g.image_of_var(i)).collect();
    let mut powers: Vec<Vec<Polynomial<C>>> = images.iter().map(|p| vec![Polynomial::one(n), p.clone()]).collect();
    let mut out = Polynomial::zero(n);
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(n, c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().unwrap().mul(&images[i]);
                powers[i].push(next);
            }
            if e > 0 {
                t = t.mul(&powers[i][e]);
            }
        }
        out = out.add(&t);
    }
    Ok(out)
}

/// Expand `f(τ_1, …, τ_n)` with
/// `τ_i = x_i ∏_{u_ij ≥ 0} λ_j^{u_ij} ∏_{u_ij < 0} θ_j^{-u_ij}`
/// in the ring with variables `x_1..x_n, λ_1..λ_l, θ_1..θ_l`.
pub fn substitute_tau<C: Coefficient>(f: &Polynomial<C>, kernel: &[Vec<i64>]) -> Result<Polynomial<C>> {
    let n = f.nvars();
    let l = kernel.len();
    if let Some(u) = kernel.iter().find(|u| u.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "kernel vector of length {} in {n} variables",
            u.len()
        )));
    }
    let total = n + 2 * l;
    Ok(Polynomial::from_terms(
        total,
        f.terms().map(|(m, c)| {
            let mut e = m.0.clone();
            e.resize(total, 0);
            for (j, u) in kernel.iter().enumerate() {
                for (i, &ui) in u.iter().enumerate() {
                    let k = m.0[i] as i64 * ui;
                    if ui >= 0 {
                        e[n + j] += k as u32;
                    } else {
                        e[n + l + j] += (-k) as u32;
                    }
                }
            }
            (Monomial(e), c.clone())
        }),
    ))
}
