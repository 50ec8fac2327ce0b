//! Tropical hypersurfaces, Gröbner complexes, tropical varieties,
//! projection ideals and tropical bases.

mod basis;
mod complexes;
mod grid;
mod projection;
mod report;
mod slice;
mod traverse;

pub use basis::{
    certify_basis, in_prevariety, prevariety, tropical_basis, tropical_basis_from_components,
    tropical_basis_of_components, tropical_basis_with, BasisOptions, BasisProvenance, TropicalBasis, PRODUCT_POWER_CAP,
};
pub use complexes::{
    complex_partition, default_d_max, groebner_complex, groebner_complex_oracle, groebner_complex_with,
    in_hypersurface, initial_ideal_is_monomial_free, pluecker_lift, tropical_hypersurface, tropical_variety,
    tropical_variety_in, GcMethod, GcOptions, DEFAULT_CELL_LIMIT,
};
pub use grid::{cell_witnesses, points_on_complex, rational_grid, seeded_rng};
pub use projection::{
    build_projection, eliminated_projection_ideal, projection_ideal_inside, sample_admissible_projections,
    sample_projection, transform_ideal, verify_projection_hypersurface, verify_projection_with, ProjectionContext,
    ProjectionIdeal, RationalProjection, DEFAULT_KERNEL_BOUND, PROJECTION_RETRIES,
};
pub use report::CheckReport;
