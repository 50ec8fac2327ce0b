//! Gröbner bases, elimination, saturation, Hilbert functions and initial
//! ideals over either coefficient field.

mod engine;
mod ideal;
mod initial;
mod ops;

pub use ideal::{buchberger, normal_form, Ideal, MarkedBasis};
pub use initial::{initial_ideal, initial_ideal_with_tiebreak};
pub use ops::{
    contains_monomial, eliminate, elimination_ideal, elimination_ideal_block, hilbert_function, intersect,
    krull_dimension, projection_lex_order, saturate, saturate_by_all_variables, saturate_by_variable,
};
