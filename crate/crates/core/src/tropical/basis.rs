use rayon::prelude::*;

use super::complexes::{in_hypersurface, tropical_hypersurface, tropical_variety};
use super::grid::{cell_witnesses, points_on_complex, rational_grid, seeded_rng};
use super::projection::{
    build_projection, eliminated_projection_ideal, sample_admissible_projections, transform_ideal, RationalProjection,
};
use super::report::CheckReport;
use crate::coeffs::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::groebner::{contains_monomial, Ideal};
use crate::poly::{LinearTransform, Polynomial};
use crate::polyhedra::PolyhedralComplex;

/// Where a basis element came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisProvenance {
    Generator,
    /// Generator of `J̃(g)` for the projection with this index.
    ProjectionPrincipal(usize),
    /// Product of one element from each component basis, raised to `power`.
    Product {
        power: u32,
    },
}

impl BasisProvenance {
    pub fn tag(&self) -> &'static str {
        match self {
            BasisProvenance::Generator => "generator",
            BasisProvenance::ProjectionPrincipal(_) => "projection_principal",
            BasisProvenance::Product { .. } => "product",
        }
    }
}

/// Elements of `g(I)` whose hypersurfaces cut out `T(g(I))` on the
/// certified points.
#[derive(Clone, Debug)]
pub struct TropicalBasis<C: Coefficient> {
    pub elements: Vec<(Polynomial<C>, BasisProvenance)>,
    pub tropical: PolyhedralComplex,
    pub report: CheckReport,
}

impl<C: Coefficient> TropicalBasis<C> {
    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.elements.iter().map(|(f, _)| f.clone()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct BasisOptions {
    pub d_max: u32,
    pub grid: usize,
    pub seed: u64,
}

/// Compare `⋂ T(f)` over `elements` with `tropical` at `grid` points (half
/// uniform, half on `tropical`), at a witness of every face of `tropical`
/// and at a witness of every face of the intersection complex.
pub fn certify_basis<C: Coefficient>(
    elements: &[Polynomial<C>],
    tropical: &PolyhedralComplex,
    grid: usize,
    seed: u64,
) -> Result<CheckReport> {
    let n = tropical.ambient_dim();
    let mut rng = seeded_rng(seed, 0x4241_5349);
    let uniform = grid / 2;
    let mut points = rational_grid(n, uniform, &mut rng, 10);
    points.extend(points_on_complex(tropical, grid - uniform, &mut rng));
    let grid_len = points.len();
    points.extend(cell_witnesses(tropical));
    let mut meet = PolyhedralComplex::trivial(n);
    for f in elements {
        meet = meet.common_refinement(&tropical_hypersurface(f)?)?;
        if meet.is_empty() {
            break;
        }
    }
    points.extend(cell_witnesses(&meet));
    let mut report = CheckReport::new("tropical_basis", seed);
    report.grid_size = grid_len;
    report.cells_checked = points.len() - grid_len;
    let ok: Vec<bool> = points
        .par_iter()
        .map(|w| elements.iter().all(|f| in_hypersurface(f, w)) == tropical.support_contains(w))
        .collect();
    for (w, ok) in points.into_iter().zip(ok) {
        if !ok {
            report.fail(w);
        }
    }
    Ok(report)
}

fn certified<C: Coefficient>(
    elements: Vec<(Polynomial<C>, BasisProvenance)>,
    tropical: PolyhedralComplex,
    grid: usize,
    seed: u64,
) -> Result<TropicalBasis<C>> {
    let polys: Vec<Polynomial<C>> = elements.iter().map(|(f, _)| f.clone()).collect();
    let report = certify_basis(&polys, &tropical, grid, seed)?;
    if let Some(w) = report.counterexamples.first() {
        return Err(Error::CertificationFailed {
            counterexample: w.clone(),
            message: format!(
                "{} of {} points disagree; more projections needed",
                report.counterexamples.len(),
                report.grid_size + report.cells_checked
            ),
        });
    }
    Ok(TropicalBasis {
        elements,
        tropical,
        report,
    })
}

/// Generators of `g(I)` together with the principal generators of `J̃(g)`
/// for each projection, certified against `T(g(I))`.
///
/// `prime` is the caller's assertion that `I` is prime.
pub fn tropical_basis<C: Coefficient>(
    ideal: &Ideal<C>,
    g: &LinearTransform,
    projections: &[RationalProjection],
    prime: bool,
    opts: &BasisOptions,
) -> Result<TropicalBasis<C>> {
    if !prime {
        return Err(Error::PreconditionFailed(
            "the ideal is not flagged prime and no component bases were given".into(),
        ));
    }
    let transformed = transform_ideal(ideal, g)?;
    let tropical = tropical_variety(&transformed, opts.d_max)?;
    tropical_basis_with(ideal, g, tropical, projections, opts)
}

/// [`tropical_basis`] for a prime ideal with `T(g(I))` already computed.
pub fn tropical_basis_with<C: Coefficient>(
    ideal: &Ideal<C>,
    g: &LinearTransform,
    tropical: PolyhedralComplex,
    projections: &[RationalProjection],
    opts: &BasisOptions,
) -> Result<TropicalBasis<C>> {
    let transformed = transform_ideal(ideal, g)?;
    let mut elements: Vec<(Polynomial<C>, BasisProvenance)> = transformed
        .generators()
        .iter()
        .map(|f| (f.clone(), BasisProvenance::Generator))
        .collect();
    if transformed.generators().len() > 1 {
        let found: Vec<Result<Polynomial<C>>> = projections
            .par_iter()
            .map(|pi| {
                if !pi.preserves_dimensions(&tropical) {
                    return Err(Error::PreconditionFailed(format!(
                        "projection with kernel {:?} drops the dimension of a maximal cell",
                        pi.kernel()
                    )));
                }
                let ctx = build_projection(ideal, g, pi)?;
                let jt = eliminated_projection_ideal(&ctx);
                let Some(f) = jt.generator() else {
                    return Err(Error::NotPrincipal {
                        generators: jt.ideal.generators().len(),
                    });
                };
                if !transformed.contains(f) {
                    return Err(Error::CertificationFailed {
                        counterexample: vec![],
                        message: "projection generator is not in g(I)".into(),
                    });
                }
                Ok(f.clone())
            })
            .collect();
        for (i, f) in found.into_iter().enumerate() {
            elements.push((f?, BasisProvenance::ProjectionPrincipal(i)));
        }
    }
    certified(elements, tropical, opts.grid, opts.seed)
}

/// Bound on the power used to push a product into a non-radical ideal.
pub const PRODUCT_POWER_CAP: u32 = 8;

/// Basis of `g(I)` from bases of the minimal primes of `g(I)`: all products
/// with one factor per component, each raised to the least power lying in
/// `g(I)`. A component containing a monomial can be given by that monomial
/// alone.
pub fn tropical_basis_from_components<C: Coefficient>(
    transformed: &Ideal<C>,
    components: &[Vec<Polynomial<C>>],
    opts: &BasisOptions,
) -> Result<TropicalBasis<C>> {
    if components.is_empty() || components.iter().any(|c| c.is_empty()) {
        return Err(Error::PreconditionFailed(
            "every component needs at least one element".into(),
        ));
    }
    let n = transformed.nvars();
    let mut products = vec![Polynomial::one(n)];
    for comp in components {
        products = products
            .iter()
            .flat_map(|p| comp.iter().map(move |h| p.mul(h)))
            .collect();
    }
    let mut elements = Vec::with_capacity(products.len());
    for p in products {
        let mut q = p.clone();
        let mut power = 1;
        while !transformed.contains(&q) {
            if power == PRODUCT_POWER_CAP {
                return Err(Error::PreconditionFailed(format!(
                    "a product of component elements needs more than {PRODUCT_POWER_CAP} powers to lie in the ideal"
                )));
            }
            power += 1;
            q = q.mul(&p);
        }
        elements.push((q, BasisProvenance::Product { power }));
    }
    let tropical = tropical_variety(transformed, opts.d_max)?;
    certified(elements, tropical, opts.grid, opts.seed)
}

/// Basis of `g(I)` from the minimal primes of `I`. A prime containing a
/// monomial contributes that monomial; every other prime contributes its
/// own projection basis with `projections` sampled projections.
pub fn tropical_basis_of_components<C: Coefficient>(
    ideal: &Ideal<C>,
    primes: &[Ideal<C>],
    g: &LinearTransform,
    projections: usize,
    kernel_bound: i64,
    opts: &BasisOptions,
) -> Result<TropicalBasis<C>> {
    let comps = primes
        .iter()
        .map(|p| {
            let gp = transform_ideal(p, g)?;
            if let Some(m) = contains_monomial(&gp, true) {
                return Ok(vec![Polynomial::term(m, C::one_elem())]);
            }
            let t = tropical_variety(&gp, opts.d_max)?;
            let ps = if gp.generators().len() > 1 {
                sample_admissible_projections(&t, projections, kernel_bound, opts.seed)?
            } else {
                vec![]
            };
            Ok(tropical_basis_with(p, g, t, &ps, opts)?.polynomials())
        })
        .collect::<Result<Vec<_>>>()?;
    tropical_basis_from_components(&transform_ideal(ideal, g)?, &comps, opts)
}

/// `T(f)` for the elements, intersected as sets: the intersection complex.
pub fn prevariety<C: Coefficient>(n: usize, elements: &[Polynomial<C>]) -> Result<PolyhedralComplex> {
    let mut meet = PolyhedralComplex::trivial(n);
    for f in elements {
        meet = meet.common_refinement(&tropical_hypersurface(f)?)?;
    }
    Ok(meet)
}

/// Whether `w` lies on every `T(f)`.
pub fn in_prevariety<C: Coefficient>(elements: &[Polynomial<C>], w: &[Rational]) -> bool {
    elements.iter().all(|f| in_hypersurface(f, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PuiseuxScalar;
    use crate::groebner::intersect;
    use crate::text::{parse_polynomial, VarLayout};

    fn poly(s: &str, n: usize) -> Polynomial<PuiseuxScalar> {
        parse_polynomial(s, &VarLayout::new(n, 0), 1).unwrap()
    }

    fn opts() -> BasisOptions {
        BasisOptions {
            d_max: 2,
            grid: 60,
            seed: 5,
        }
    }

    #[test]
    fn principal_is_its_own_basis() {
        let i = Ideal::new(3, vec![poly("x1 + t*x2 + x3", 3)]).unwrap();
        let b = tropical_basis(&i, &LinearTransform::identity(3), &[], true, &opts()).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert_eq!(b.elements[0].1, BasisProvenance::Generator);
        assert!(b.report.passed);
    }

    #[test]
    fn unflagged_prime_is_rejected() {
        let i = Ideal::new(3, vec![poly("x1 + x2", 3)]).unwrap();
        assert!(matches!(
            tropical_basis(&i, &LinearTransform::identity(3), &[], false, &opts()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn generators_alone_can_fail() {
        let i = Ideal::new(3, vec![poly("x1 + x2 + x3", 3), poly("x1 + 2*x2", 3)]).unwrap();
        let t = tropical_variety(&i, 2).unwrap();
        assert_eq!(t.dim(), Some(1));
        let rep = certify_basis(i.generators(), &t, 40, 1).unwrap();
        assert!(!rep.passed);
        assert_eq!(prevariety(3, i.generators()).unwrap().dim(), Some(2));
        let circuits = vec![poly("x1 + 2*x2", 3), poly("x2 - x3", 3), poly("x1 + 2*x3", 3)];
        assert!(circuits.iter().all(|f| i.contains(f)));
        let rep = certify_basis(&circuits, &t, 40, 1).unwrap();
        assert!(rep.passed, "{:?}", rep.counterexamples);
    }

    #[test]
    fn product_with_a_monomial_component() {
        let p = Ideal::new(3, vec![poly("x1 + t*x2 + x3", 3)]).unwrap();
        let q = Ideal::new(3, vec![poly("x1", 3)]).unwrap();
        let i = intersect(&p, &q);
        let i = Ideal::new(3, i.generators().to_vec()).unwrap();
        let comps = vec![p.generators().to_vec(), q.generators().to_vec()];
        let b = tropical_basis_from_components(&i, &comps, &opts()).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert_eq!(b.elements[0].1, BasisProvenance::Product { power: 1 });
        assert!(b.report.passed);
        let b = tropical_basis_of_components(&i, &[p, q], &LinearTransform::identity(3), 2, 1, &opts()).unwrap();
        assert!(b.report.passed);
        assert_eq!(b.elements.len(), 1);
    }
}
