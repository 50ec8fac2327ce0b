use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::engine::{self, SPoly};
use crate::coeffs::{CoeffDomain, Coefficient};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Reduced Gröbner basis with marked leading monomials.
#[derive(Clone, Debug)]
pub struct MarkedBasis<C> {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial<C>>,
    leads: Vec<Monomial>,
    sorted: Vec<SPoly<C>>,
}

impl<C: Coefficient> MarkedBasis<C> {
    pub(crate) fn compute(nvars: usize, gens: &[Polynomial<C>], order: &MonomialOrder) -> Self {
        let sorted = engine::groebner(gens, order);
        let elements = sorted.iter().map(|p| engine::from_sorted(p, nvars)).collect();
        let leads = sorted.iter().map(|p| p.last().unwrap().mono.clone()).collect();
        MarkedBasis {
            order: order.clone(),
            nvars,
            elements,
            leads,
            sorted,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the
    /// ideal.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Polynomial<C> {
        let refs: Vec<&SPoly<C>> = self.sorted.iter().collect();
        let r = engine::reduce(engine::to_sorted(f, &self.order), &refs, true);
        engine::from_sorted(&r, self.nvars)
    }

    pub fn contains(&self, f: &Polynomial<C>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether `m` lies in the leading monomial ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }
}

/// Free-function form of [`MarkedBasis::normal_form`].
pub fn normal_form<C: Coefficient>(f: &Polynomial<C>, basis: &MarkedBasis<C>) -> Polynomial<C> {
    basis.normal_form(f)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<C: Coefficient>(ideal: &Ideal<C>, order: &MonomialOrder) -> Arc<MarkedBasis<C>> {
    ideal.groebner_basis(order)
}

/// Polynomial ideal given by generators, with a per-order cache of reduced
/// Gröbner bases.
pub struct Ideal<C: Coefficient> {
    nvars: usize,
    generators: Vec<Polynomial<C>>,
    graded: bool,
    cache: RwLock<HashMap<MonomialOrder, Arc<MarkedBasis<C>>>>,
}

impl<C: Coefficient> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        Ideal {
            nvars: self.nvars,
            generators: self.generators.clone(),
            graded: self.graded,
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl<C: Coefficient> fmt::Debug for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("nvars", &self.nvars)
            .field("generators", &self.generators)
            .finish()
    }
}

impl<C: Coefficient> fmt::Display for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl<C: Coefficient> Ideal<C> {
    /// Graded ideal; every generator must be homogeneous.
    pub fn new(nvars: usize, generators: Vec<Polynomial<C>>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "generator in {} variables for a ring in {nvars}",
                    g.nvars()
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneousGenerator(g.to_string()));
            }
        }
        Ok(Self::build(nvars, generators, true))
    }

    /// Ideal without the homogeneity requirement, for auxiliary rings such
    /// as the `λθ - 1` elimination ring.
    pub fn new_nongraded(nvars: usize, generators: Vec<Polynomial<C>>) -> Self {
        let graded = generators.iter().all(|g| g.is_homogeneous());
        Self::build(nvars, generators, graded)
    }

    fn build(nvars: usize, generators: Vec<Polynomial<C>>, graded: bool) -> Self {
        Ideal {
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            graded,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self::build(nvars, vec![Polynomial::one(nvars)], false)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn domain(&self) -> CoeffDomain {
        C::DOMAIN
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Cached reduced Gröbner basis.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<MarkedBasis<C>> {
        assert_eq!(order.nvars(), self.nvars, "order for a different ring");
        if let Some(b) = self.cache.read().unwrap().get(order) {
            return b.clone();
        }
        let b = Arc::new(MarkedBasis::compute(self.nvars, &self.generators, order));
        self.cache.write().unwrap().entry(order.clone()).or_insert(b).clone()
    }

    pub fn grevlex_basis(&self) -> Arc<MarkedBasis<C>> {
        self.groebner_basis(&MonomialOrder::grevlex(self.nvars))
    }

    pub fn contains(&self, f: &Polynomial<C>) -> bool {
        self.grevlex_basis().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains_ideal(&self, other: &Ideal<C>) -> bool {
        let b = self.grevlex_basis();
        other.generators.iter().all(|g| b.contains(g))
    }

    /// Equality by two-way containment.
    pub fn same_ideal(&self, other: &Ideal<C>) -> bool {
        self.nvars == other.nvars && self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// Reduced grevlex basis as a new ideal (canonical generators).
    pub fn reduced(&self) -> Ideal<C> {
        let b = self.grevlex_basis();
        let mut out = Self::build(self.nvars, b.elements().to_vec(), self.graded);
        out.cache.get_mut().unwrap().insert(b.order().clone(), b);
        out
    }

    pub fn map_generators<D: Coefficient>(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<D>) -> Ideal<D> {
        let gens: Vec<Polynomial<D>> = self.generators.iter().map(f).collect();
        let graded = gens.iter().all(|g| g.is_homogeneous());
        Ideal::<D>::build(self.nvars, gens, graded)
    }

    pub fn sum(&self, other: &Ideal<C>) -> Ideal<C> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Self::build(self.nvars, g, self.graded && other.graded)
    }

    pub fn product(&self, other: &Ideal<C>) -> Ideal<C> {
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a.mul(b));
            }
        }
        Self::build(self.nvars, g, self.graded && other.graded)
    }
}
