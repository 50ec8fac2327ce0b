//! Multivariate polynomials, monomial orders, weights and initial forms,
//! linear coordinate changes.

mod monomial;
mod order;
mod polynomial;
mod transform;
mod weight;

pub use monomial::Monomial;
pub use order::{MonomialOrder, Tiebreak};
pub use polynomial::Polynomial;
pub use transform::{apply_transform, substitute_tau, LinearTransform, TransformFamily};
pub use weight::{initial_form, weight_of, WeightVector};
