//! Exact computation of Gröbner complexes, tropical varieties and generic
//! tropical varieties of graded ideals over the rationals and over a valued
//! field of generalized power series.

pub mod coeffs;
pub mod error;
pub mod generic;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod polyhedra;
pub mod text;
pub mod tropical;

pub use coeffs::{Coefficient, FiniteSeries, PuiseuxScalar, Rational, Valuation};
pub use error::{Error, Result};
pub use generic::{Family, GenericReport, SamplingPolicy, TransformSampler};
pub use groebner::{Ideal, MarkedBasis};
pub use poly::{LinearTransform, Monomial, MonomialOrder, Polynomial, WeightVector};
pub use polyhedra::{complex_equal, PlueckerLift, PolyhedralComplex, Polyhedron};
pub use tropical::{CheckReport, RationalProjection, TropicalBasis};
