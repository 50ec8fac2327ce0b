use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::complexes::{in_hypersurface, initial_ideal_is_monomial_free};
use super::grid::{cell_witnesses, points_on_complex, rational_grid, seeded_rng};
use super::report::CheckReport;
use crate::coeffs::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::groebner::{elimination_ideal, krull_dimension, Ideal};
use crate::linalg::{canonical_row_basis, nullspace, rank};
use crate::poly::{apply_transform, substitute_tau, LinearTransform, Polynomial};
use crate::polyhedra::{PolyhedralComplex, Polyhedron};

/// Surjection `Q^n → Q^{m+1}` given by an integer matrix of full row rank,
/// with a primitive integer basis of its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalProjection {
    n: usize,
    matrix: Vec<Vec<i64>>,
    kernel: Vec<Vec<i64>>,
}

fn to_i64_rows(rows: Vec<Vec<num_bigint::BigInt>>) -> Result<Vec<Vec<i64>>> {
    rows.into_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64())
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::PreconditionFailed("projection entries exceed 64 bits".into()))
        })
        .collect()
}

fn rat_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

impl RationalProjection {
    /// Projection with the given matrix rows.
    pub fn new(n: usize, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("projection rows of the wrong length".into()));
        }
        let a = rat_rows(&matrix);
        if rank(&a, n) != matrix.len() {
            return Err(Error::SingularMatrix);
        }
        let kernel = to_i64_rows(canonical_row_basis(&nullspace(&a, n), n))?;
        Ok(RationalProjection { n, matrix, kernel })
    }

    /// The projection with the given kernel, represented by a canonical
    /// integer basis of the kernel's orthogonal complement.
    pub fn from_kernel(n: usize, kernel: Vec<Vec<i64>>) -> Result<Self> {
        if kernel.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("kernel vectors of the wrong length".into()));
        }
        let k = rat_rows(&kernel);
        if rank(&k, n) != kernel.len() {
            return Err(Error::SingularMatrix);
        }
        let matrix = to_i64_rows(canonical_row_basis(&nullspace(&k, n), n))?;
        Ok(RationalProjection { n, matrix, kernel })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.kernel
    }

    /// `m + 1`.
    pub fn target_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix_rational(&self) -> Vec<Vec<Rational>> {
        rat_rows(&self.matrix)
    }

    /// Whether `dim π(P) = dim P` for every maximal cell `P`.
    pub fn preserves_dimensions(&self, c: &PolyhedralComplex) -> bool {
        let a = self.matrix_rational();
        c.cells().iter().all(|p| p.projected_dim(&a) == p.dim().unwrap())
    }

    /// `P + ker(π)` for each maximal cell `P`, i.e. `π⁻¹π(P)`.
    pub fn preimage_cells(&self, c: &PolyhedralComplex) -> Vec<Polyhedron> {
        let ker = rat_rows(&self.kernel);
        c.cells()
            .iter()
            .map(|p| {
                let verts = p.vertices().to_vec();
                let rays: Vec<Vec<Rational>> = p.rays().iter().map(|r| crate::linalg::to_rational(r)).collect();
                let mut lin: Vec<Vec<Rational>> = p.lineality().iter().map(|l| crate::linalg::to_rational(l)).collect();
                lin.extend(ker.iter().cloned());
                Polyhedron::from_v(self.n, &verts, &rays, &lin)
            })
            .collect()
    }
}

/// Default bound on kernel entries of sampled projections.
pub const DEFAULT_KERNEL_BOUND: i64 = 1;

/// A projection whose kernel has `l` vectors with entries in
/// `[-bound, bound]`.
pub fn sample_projection(n: usize, l: usize, bound: i64, rng: &mut ChaCha8Rng) -> RationalProjection {
    loop {
        let kernel: Vec<Vec<i64>> = (0..l)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        if let Ok(p) = RationalProjection::from_kernel(n, kernel) {
            return p;
        }
    }
}

/// Retry cap when sampling projections that pass the dimension check.
pub const PROJECTION_RETRIES: usize = 200;

/// `count` distinct projections to `Q^{m+1}` that are injective on every
/// maximal cell of `t`, where `m = dim t`.
pub fn sample_admissible_projections(
    t: &PolyhedralComplex,
    count: usize,
    bound: i64,
    seed: u64,
) -> Result<Vec<RationalProjection>> {
    let n = t.ambient_dim();
    let m = t.dim().unwrap_or(0);
    let l = n.saturating_sub(m + 1);
    let mut rng = seeded_rng(seed, 0x5052_4f4a);
    let mut out: Vec<RationalProjection> = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > PROJECTION_RETRIES {
            return Err(Error::PreconditionFailed(format!(
                "no admissible projection found after {PROJECTION_RETRIES} samples"
            )));
        }
        let p = sample_projection(n, l, bound, &mut rng);
        if p.preserves_dimensions(t) && !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Data for the projection ideal of `g(I)`: the generators `g(f)(τ)` in
/// the ring `x, λ, θ` and the generators `λ_jθ_j - 1`.
#[derive(Clone, Debug)]
pub struct ProjectionContext<C: Coefficient> {
    pub n: usize,
    pub l: usize,
    pub transform: LinearTransform,
    pub projection: RationalProjection,
    pub transformed: Ideal<C>,
    pub j_generators: Vec<Polynomial<C>>,
    pub w_generators: Vec<Polynomial<C>>,
}

/// The image `g(I)`.
pub fn transform_ideal<C: Coefficient>(ideal: &Ideal<C>, g: &LinearTransform) -> Result<Ideal<C>> {
    let gens = ideal
        .generators()
        .iter()
        .map(|f| apply_transform(g, f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.nvars(), gens)
}

pub fn build_projection<C: Coefficient>(
    ideal: &Ideal<C>,
    g: &LinearTransform,
    pi: &RationalProjection,
) -> Result<ProjectionContext<C>> {
    let n = ideal.nvars();
    if pi.n() != n || g.n() != n {
        return Err(Error::DimensionMismatch(
            "projection, transform and ring differ in size".into(),
        ));
    }
    let m = krull_dimension(ideal).unwrap_or(0);
    let l = pi.kernel().len();
    if l + m + 1 != n {
        return Err(Error::DimensionMismatch(format!(
            "kernel of dimension {l} for an ideal of dimension {m} in {n} variables"
        )));
    }
    let transformed = transform_ideal(ideal, g)?;
    let j_generators = transformed
        .generators()
        .iter()
        .map(|f| substitute_tau(f, pi.kernel()))
        .collect::<Result<Vec<_>>>()?;
    let total = n + 2 * l;
    let w_generators = (0..l)
        .map(|j| {
            Polynomial::var(total, n + j)
                .mul(&Polynomial::var(total, n + l + j))
                .sub(&Polynomial::one(total))
        })
        .collect();
    Ok(ProjectionContext {
        n,
        l,
        transform: g.clone(),
        projection: pi.clone(),
        transformed,
        j_generators,
        w_generators,
    })
}

/// `J̃(g) = (J(g) + W) ∩ S` with its reduced generators.
#[derive(Clone, Debug)]
pub struct ProjectionIdeal<C: Coefficient> {
    pub ideal: Ideal<C>,
}

impl<C: Coefficient> ProjectionIdeal<C> {
    pub fn is_principal(&self) -> bool {
        self.ideal.generators().len() == 1
    }

    pub fn generator(&self) -> Option<&Polynomial<C>> {
        if self.is_principal() {
            self.ideal.generators().first()
        } else {
            None
        }
    }

    /// Whether `ω ∈ T(J̃)`.
    pub fn tropical_contains(&self, w: &[Rational]) -> Result<bool> {
        match self.generator() {
            Some(f) => Ok(in_hypersurface(f, w)),
            None if self.ideal.is_zero() => Ok(true),
            None => initial_ideal_is_monomial_free(&self.ideal, w),
        }
    }
}

pub fn eliminated_projection_ideal<C: Coefficient>(ctx: &ProjectionContext<C>) -> ProjectionIdeal<C> {
    let mut gens = ctx.j_generators.clone();
    gens.extend(ctx.w_generators.iter().cloned());
    let big = Ideal::new_nongraded(ctx.n + 2 * ctx.l, gens);
    let small = elimination_ideal(&big, ctx.n, ctx.l);
    let reduced = small.reduced();
    let monic: Vec<Polynomial<C>> = reduced.generators().iter().map(|f| f.make_monic_grevlex()).collect();
    let ideal = if monic.iter().all(|f| f.is_homogeneous()) {
        Ideal::new(ctx.n, monic).expect("homogeneous generators")
    } else {
        Ideal::new_nongraded(ctx.n, monic)
    };
    ProjectionIdeal { ideal }
}

/// Test `T(J̃(g)) = π⁻¹π(T(g(I)))` given `T(g(I))`.
///
/// Fails with `PreconditionFailed` if `π` drops the dimension of a maximal
/// cell. The points tested are `grid_size` points, half uniform and half on
/// `π⁻¹π(T(g(I)))`, plus one witness per cell of `T(g(I))` and, for
/// principal `J̃`, of `T(F)`.
pub fn verify_projection_with<C: Coefficient>(
    pi: &RationalProjection,
    tropical: &PolyhedralComplex,
    jt: &ProjectionIdeal<C>,
    grid_size: usize,
    seed: u64,
) -> Result<CheckReport> {
    if !pi.preserves_dimensions(tropical) {
        return Err(Error::PreconditionFailed(
            "projection drops the dimension of a maximal cell".into(),
        ));
    }
    let n = pi.n();
    let pre = pi.preimage_cells(tropical);
    let pre_complex = PolyhedralComplex::new(n, pre.clone());
    let mut rng = seeded_rng(seed, 0x4752_4944);
    let uniform = grid_size / 2;
    let mut points = rational_grid(n, uniform, &mut rng, 10);
    points.extend(points_on_complex(&pre_complex, grid_size - uniform, &mut rng));
    let grid_len = points.len();
    points.extend(cell_witnesses(tropical));
    if let Some(f) = jt.generator() {
        points.extend(cell_witnesses(&super::complexes::tropical_hypersurface(f)?));
    }
    let mut report = CheckReport::new("projection_hypersurface", seed);
    report.grid_size = grid_len;
    report.cells_checked = points.len() - grid_len;
    let verdicts: Vec<Result<bool>> = points
        .par_iter()
        .map(|w| {
            let lhs = jt.tropical_contains(w)?;
            let rhs = pre.iter().any(|p| p.contains(w));
            Ok(lhs == rhs)
        })
        .collect();
    for (w, ok) in points.into_iter().zip(verdicts) {
        if !ok? {
            report.fail(w);
        }
    }
    Ok(report)
}

/// Compute `T(g(I))` and `J̃(g)`, then run [`verify_projection_with`].
pub fn verify_projection_hypersurface<C: Coefficient>(
    ideal: &Ideal<C>,
    g: &LinearTransform,
    pi: &RationalProjection,
    d_max: u32,
    grid_size: usize,
    seed: u64,
) -> Result<(CheckReport, ProjectionIdeal<C>)> {
    let ctx = build_projection(ideal, g, pi)?;
    let tropical = super::complexes::tropical_variety(&ctx.transformed, d_max)?;
    if !pi.preserves_dimensions(&tropical) {
        return Err(Error::PreconditionFailed(
            "projection drops the dimension of a maximal cell".into(),
        ));
    }
    let jt = eliminated_projection_ideal(&ctx);
    let report = verify_projection_with(pi, &tropical, &jt, grid_size, seed)?;
    Ok((report, jt))
}

/// Whether every element of `J̃` lies in `g(I)`.
pub fn projection_ideal_inside<C: Coefficient>(jt: &ProjectionIdeal<C>, transformed: &Ideal<C>) -> bool {
    transformed.contains_ideal(&jt.ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, PuiseuxScalar};
    use crate::text::{parse_polynomial, parse_rational_polynomial, VarLayout};

    #[test]
    fn kernel_and_matrix() {
        let p = RationalProjection::new(3, vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(p.kernel(), &[vec![1, -1, 0]]);
        let q = RationalProjection::from_kernel(3, vec![vec![1, -1, 0]]).unwrap();
        assert_eq!(q.kernel(), p.kernel());
        assert_eq!(q.target_dim(), 2);
        assert!(RationalProjection::new(2, vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn tau_substitution_in_context() {
        let lay = VarLayout::new(3, 0);
        let f = parse_polynomial("x1*x2 - x3^2", &lay, 1).unwrap();
        let h = parse_polynomial("x1 + 2*x2 - 3*x3", &lay, 1).unwrap();
        let i: Ideal<PuiseuxScalar> = Ideal::new(3, vec![f, h]).unwrap();
        let pi = RationalProjection::from_kernel(3, vec![vec![1, -1, 0]]).unwrap();
        let ctx = build_projection(&i, &LinearTransform::identity(3), &pi).unwrap();
        let expected = parse_polynomial("x1*x2*l1*h1 - x3^2", &VarLayout::new(3, 1), 1).unwrap();
        assert_eq!(ctx.j_generators[0], expected);
        assert_eq!(ctx.w_generators.len(), 1);
        let jt = eliminated_projection_ideal(&ctx);
        assert!(jt.is_principal());
        assert!(jt.ideal.is_graded());
        assert!(projection_ideal_inside(&jt, &ctx.transformed));
    }

    #[test]
    fn no_kernel_gives_the_ideal_back() {
        let lay = VarLayout::new(2, 0);
        let f = parse_rational_polynomial("x1^2 - 3*x1*x2", &lay, 1).unwrap();
        let i: Ideal<Rational> = Ideal::new(2, vec![f]).unwrap();
        let pi = RationalProjection::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let ctx = build_projection(&i, &LinearTransform::identity(2), &pi).unwrap();
        let jt = eliminated_projection_ideal(&ctx);
        assert!(jt.ideal.same_ideal(&i));
        assert!(projection_ideal_inside(&jt, &ctx.transformed));
        let t = super::super::complexes::tropical_variety(&i, 2).unwrap();
        let rep = verify_projection_with(&pi, &t, &jt, 40, 3).unwrap();
        assert!(rep.passed, "{:?}", rep.counterexamples);
        assert!(jt.tropical_contains(&[rat(1), rat(1)]).unwrap());
    }

    #[test]
    fn kernel_dimension_is_checked() {
        let lay = VarLayout::new(3, 0);
        let f = parse_rational_polynomial("x1 + x2 + x3", &lay, 1).unwrap();
        let i: Ideal<Rational> = Ideal::new(3, vec![f]).unwrap();
        let pi = RationalProjection::from_kernel(3, vec![vec![1, -1, 0]]).unwrap();
        assert!(matches!(
            build_projection(&i, &LinearTransform::identity(3), &pi),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
