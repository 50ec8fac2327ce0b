use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::slice::{degree_slice, Slice};
use super::traverse::traverse;
use crate::coeffs::{Coefficient, Rational, Valuation};
use crate::error::{Error, Result};
use crate::groebner::{contains_monomial, initial_ideal, Ideal};
use crate::poly::{Polynomial, WeightVector};
use crate::polyhedra::{
    binomial, regular_subdivision_complex, PlueckerLift, PolyhedralComplex, Polyhedron, DEFAULT_MINOR_CAP,
};

/// Default cap on the number of maximal cells visited by the traversal.
pub const DEFAULT_CELL_LIMIT: usize = 50_000;

/// How the degree-wise subdivisions are built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcMethod {
    /// All maximal minors of each slice, one regular subdivision per
    /// degree, then common refinement. Fails past the minor cap.
    Exhaustive,
    /// Cell-by-cell walk over the refinement via basis exchanges.
    Traversal,
    /// Exhaustive when every slice is under the minor cap, else traversal.
    Auto,
}

#[derive(Clone, Debug)]
pub struct GcOptions {
    pub d_max: u32,
    pub method: GcMethod,
    pub minor_cap: usize,
    pub cell_limit: usize,
}

impl GcOptions {
    pub fn new(d_max: u32) -> Self {
        GcOptions {
            d_max,
            method: GcMethod::Auto,
            minor_cap: DEFAULT_MINOR_CAP,
            cell_limit: DEFAULT_CELL_LIMIT,
        }
    }

    pub fn method(mut self, m: GcMethod) -> Self {
        self.method = m;
        self
    }
}

/// `2·(max generator degree)`, at least 1.
pub fn default_d_max<C: Coefficient>(ideal: &Ideal<C>) -> u32 {
    (2 * ideal.max_degree()).max(1)
}

fn check_d_max<C: Coefficient>(ideal: &Ideal<C>, d_max: u32) -> Result<()> {
    if !ideal.is_graded() {
        return Err(Error::NonHomogeneousGenerator(ideal.to_string()));
    }
    if d_max < ideal.max_degree() {
        return Err(Error::DegreeTooSmall {
            d_max,
            max_degree: ideal.max_degree(),
        });
    }
    Ok(())
}

fn slices<C: Coefficient>(ideal: &Ideal<C>, d_max: u32) -> Vec<Slice<C>> {
    (1..=d_max)
        .into_par_iter()
        .map(|d| degree_slice(ideal, d))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|s| s.is_proper())
        .collect()
}

/// Gröbner complex from the Plücker vectors of `I_d`, `d ≤ d_max`.
pub fn groebner_complex<C: Coefficient>(ideal: &Ideal<C>, d_max: u32) -> Result<PolyhedralComplex> {
    groebner_complex_with(ideal, &GcOptions::new(d_max))
}

pub fn groebner_complex_with<C: Coefficient>(ideal: &Ideal<C>, opts: &GcOptions) -> Result<PolyhedralComplex> {
    check_d_max(ideal, opts.d_max)?;
    let n = ideal.nvars();
    let slices = slices(ideal, opts.d_max);
    let under_cap = slices
        .iter()
        .all(|s| binomial(s.monomials.len(), s.rank()) <= opts.minor_cap as u128);
    let exhaustive = match opts.method {
        GcMethod::Exhaustive => true,
        GcMethod::Traversal => false,
        GcMethod::Auto => under_cap,
    };
    if exhaustive {
        let mut acc = PolyhedralComplex::trivial(n);
        for s in &slices {
            let c = slice_complex(s, opts.minor_cap)?;
            acc = acc.common_refinement(&c)?;
        }
        Ok(acc)
    } else {
        let cells = traverse(slices, n, opts.cell_limit)?;
        Ok(PolyhedralComplex::new(n, cells))
    }
}

/// `C^d` for one slice, from all maximal minors.
pub(crate) fn slice_complex<C: Coefficient>(s: &Slice<C>, cap: usize) -> Result<PolyhedralComplex> {
    let lift = PlueckerLift::from_matrix(&s.rows, &s.monomials, cap)?;
    regular_subdivision_complex(&lift, lift.ambient_dim())
}

/// Plücker lift of `I_d`.
pub fn pluecker_lift<C: Coefficient>(ideal: &Ideal<C>, d: u32, cap: usize) -> Result<PlueckerLift> {
    let s = degree_slice(ideal, d);
    PlueckerLift::from_matrix(&s.rows, &s.monomials, cap)
}

/// Points and lifts `(ν, v(a_ν))` of the terms of `f`.
fn term_lift<C: Coefficient>(f: &Polynomial<C>) -> Result<PlueckerLift> {
    let points = f
        .monomials()
        .map(|m| m.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    let lifts = f.terms().map(|(_, c)| c.valuation()).collect();
    PlueckerLift::from_points(f.nvars(), points, lifts)
}

/// `T(f)`: the codimension-one skeleton of the subdivision by the term
/// achieving `min v(a_ν) + ω·ν`.
pub fn tropical_hypersurface<C: Coefficient>(f: &Polynomial<C>) -> Result<PolyhedralComplex> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    let c = regular_subdivision_complex(&term_lift(f)?, n)?;
    Ok(c.skeleton(n.saturating_sub(1)))
}

/// Whether the minimum of `v(a_ν) + ω·ν` over the terms of `f` is attained
/// at least twice.
pub fn in_hypersurface<C: Coefficient>(f: &Polynomial<C>, w: &[Rational]) -> bool {
    let mut best: Option<Rational> = None;
    let mut count = 0;
    for (m, c) in f.terms() {
        let Valuation::Finite(v) = c.valuation() else { continue };
        let x = v + WeightVector::new(w.to_vec()).dot_exponents(m.exponents());
        match &best {
            Some(b) if x > *b => {}
            Some(b) if x == *b => count += 1,
            _ => {
                best = Some(x);
                count = 1;
            }
        }
    }
    count >= 2
}

/// Whether `in_ω(I)` contains no monomial.
pub fn initial_ideal_is_monomial_free<C: Coefficient>(ideal: &Ideal<C>, w: &[Rational]) -> Result<bool> {
    let init = initial_ideal(ideal, &WeightVector::new(w.to_vec()))?;
    Ok(contains_monomial(&init, false).is_none())
}

pub fn tropical_variety<C: Coefficient>(ideal: &Ideal<C>, d_max: u32) -> Result<PolyhedralComplex> {
    let gc = groebner_complex(ideal, d_max)?;
    tropical_variety_in(ideal, &gc)
}

/// The cells of `gc` (a Gröbner complex of `I`) whose initial ideal at a
/// relative-interior witness is monomial-free. Cells are visited by
/// increasing dimension; a cell with a facet outside the variety is
/// skipped since the variety is closed.
pub fn tropical_variety_in<C: Coefficient>(ideal: &Ideal<C>, gc: &PolyhedralComplex) -> Result<PolyhedralComplex> {
    let n = gc.ambient_dim();
    let mut by_dim: BTreeMap<usize, Vec<Polyhedron>> = BTreeMap::new();
    for f in gc.all_faces() {
        by_dim.entry(f.dim().unwrap()).or_default().push(f);
    }
    let mut status: HashMap<Polyhedron, bool> = HashMap::new();
    for (_, faces) in by_dim {
        let verdicts: Vec<Result<bool>> = faces
            .par_iter()
            .map(|f| {
                let facets = f.facets();
                if facets.iter().any(|(_, g)| status.get(g) == Some(&false)) {
                    return Ok(false);
                }
                let w = f.relative_interior_point().unwrap();
                initial_ideal_is_monomial_free(ideal, &w)
            })
            .collect();
        for (f, v) in faces.into_iter().zip(verdicts) {
            status.insert(f, v?);
        }
    }
    let cells = status.into_iter().filter(|(_, v)| *v).map(|(f, _)| f).collect();
    Ok(PolyhedralComplex::new(n, cells))
}

/// Label each sample by its initial ideal: samples get the same label iff
/// their initial ideals coincide. Labels are assigned in order of first
/// appearance.
pub fn groebner_complex_oracle<C: Coefficient>(ideal: &Ideal<C>, samples: &[WeightVector]) -> Result<Vec<usize>> {
    let inits: Vec<Ideal<Rational>> = samples
        .par_iter()
        .map(|w| initial_ideal(ideal, w).map(|i| i.reduced()))
        .collect::<Result<_>>()?;
    let mut reps: Vec<usize> = Vec::new();
    let mut labels = Vec::with_capacity(samples.len());
    for (i, init) in inits.iter().enumerate() {
        match reps.iter().position(|&r| inits[r].same_ideal(init)) {
            Some(l) => labels.push(l),
            None => {
                labels.push(reps.len());
                reps.push(i);
            }
        }
    }
    Ok(labels)
}

/// Label each sample by the cell of `complex` containing it in its
/// relative interior, in order of first appearance; `None` outside the
/// support.
pub fn complex_partition(complex: &PolyhedralComplex, samples: &[WeightVector]) -> Vec<Option<usize>> {
    let faces = complex.all_faces();
    let located: Vec<Option<usize>> = samples
        .par_iter()
        .map(|w| PolyhedralComplex::locate(&faces, w.entries()))
        .collect();
    let mut first: HashMap<usize, usize> = HashMap::new();
    located
        .into_iter()
        .map(|f| {
            f.map(|f| {
                let next = first.len();
                *first.entry(f).or_insert(next)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, PuiseuxScalar};
    use crate::polyhedra::{complex_equal, generic_tropical_fan, w_skeleton};
    use crate::text::{parse_polynomial, VarLayout};

    fn pideal(gens: &[&str], n: usize) -> Ideal<PuiseuxScalar> {
        let l = VarLayout::new(n, 0);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &l, 1).unwrap()).collect()).unwrap()
    }

    fn line(n: usize, a: &[i64], b: i64) -> Polyhedron {
        Polyhedron::from_h(n, &[(a.iter().map(|&x| rat(x)).collect(), rat(b))], &[])
    }

    #[test]
    fn principal_valued_hyperplane() {
        let i = pideal(&["x1 + t*x2"], 2);
        for m in [GcMethod::Exhaustive, GcMethod::Traversal] {
            let gc = groebner_complex_with(&i, &GcOptions::new(1).method(m)).unwrap();
            assert_eq!(gc.cells().len(), 2);
            let wall = gc.cells()[0].intersection(&gc.cells()[1]);
            assert_eq!(wall, line(2, &[1, -1], 1));
        }
        let expected = PolyhedralComplex::new(2, vec![line(2, &[1, -1], 1)]);
        assert!(complex_equal(&tropical_variety(&i, 1).unwrap(), &expected));
        assert!(complex_equal(
            &tropical_hypersurface(&i.generators()[0]).unwrap(),
            &expected
        ));
    }

    #[test]
    fn monomial_ideals() {
        let i = pideal(&["x1*x2", "x3^2"], 3);
        let gc = groebner_complex(&i, 4).unwrap();
        assert!(complex_equal(&gc, &PolyhedralComplex::trivial(3)));
        assert!(tropical_variety(&i, 4).unwrap().is_empty());
        assert!(tropical_hypersurface(&i.generators()[0]).unwrap().is_empty());
    }

    #[test]
    fn linear_form_gives_generic_fan() {
        let i = pideal(&["x1 + x2 + x3"], 3);
        for m in [GcMethod::Exhaustive, GcMethod::Traversal] {
            let gc = groebner_complex_with(&i, &GcOptions::new(1).method(m)).unwrap();
            assert!(complex_equal(&gc, &generic_tropical_fan(3)));
        }
        let t = tropical_hypersurface(&i.generators()[0]).unwrap();
        assert!(complex_equal(&t, &w_skeleton(3, 2)));
    }

    #[test]
    fn methods_agree() {
        let i = pideal(&["x1 + t*x2 + x3", "x1*x3 - t*x2^2"], 3);
        let a = groebner_complex_with(&i, &GcOptions::new(3).method(GcMethod::Exhaustive)).unwrap();
        let b = groebner_complex_with(&i, &GcOptions::new(3).method(GcMethod::Traversal)).unwrap();
        assert!(complex_equal(&a, &b));
        a.check_face_property().unwrap();
    }

    #[test]
    fn degree_bound_and_zero() {
        let i = pideal(&["x1^2 + x2^2"], 2);
        assert!(matches!(groebner_complex(&i, 1), Err(Error::DegreeTooSmall { .. })));
        assert!(matches!(
            tropical_hypersurface(&Polynomial::<Rational>::zero(2)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn membership_in_hypersurface() {
        let i = pideal(&["x1 + t*x2"], 2);
        let f = &i.generators()[0];
        assert!(in_hypersurface(f, &[rat(1), rat(0)]));
        assert!(!in_hypersurface(f, &[rat(0), rat(0)]));
    }
}
