//! Exact engine for slopes on the once-punctured torus and the Farey graph.

mod cf;
mod distance;
mod slope;
mod spectrum;
mod twist;

pub use cf::{cf_expand, cf_value, CfStream, Convergents, EndInvariant};
pub use distance::{farey_distance, farey_geodesic, intersection_number, SurfaceKind};
pub use slope::{Mat2, Slope};
pub use spectrum::{
    coefficient_spectrum, decide_bounded_geometry, CfAlignment, CoefficientSpectrum, Decision,
    CF_ALIGNMENT,
};
pub use twist::{annular_coeff, twist_coordinate, ANNULAR_FUZZ};
