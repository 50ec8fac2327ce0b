//! Exact rational polyhedra and polyhedral complexes: double description,
//! faces, common refinements, skeletons, regular subdivisions of lifted
//! point sets and the fans `W_n^m`.

mod complex;
mod dd;
mod fans;
mod json;
mod lift;
mod polyhedron;

pub use complex::{complex_equal, PolyhedralComplex};
pub use fans::{generic_fan_cones, generic_tropical_fan, min_cone, w_skeleton};
pub use json::{complex_from_json, complex_to_json, polyhedron_to_json, validate_complex_json};
pub use lift::{binomial, regular_subdivision_complex, PlueckerLift, DEFAULT_MINOR_CAP};
pub use polyhedron::Polyhedron;
