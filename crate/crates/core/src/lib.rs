//! Curve-complex combinatorics and hyperbolic-trigonometry estimates for
//! surfaces of small complexity.
//!
//! * [`hyp`] evaluates collar, hexagon, band, curve-shortening and
//!   Margulis-tube estimates, with an explicit upper-half-plane model used to
//!   measure lengths and areas.
//! * [`farey`] is the exact engine for slopes on the once-punctured torus:
//!   intersection numbers, Farey distance, continued fractions, annular
//!   coefficients and the bounded-geometry decision.
//! * [`moves`] handles pants decompositions, elementary moves, move
//!   sequences and resolution sequences.

// Negated float comparisons are how domain checks reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod farey;
pub mod hyp;
pub mod moves;
pub mod numeric;
#[cfg(feature = "oracles")]
pub mod oracle;

pub use error::{Error, Result};
pub use farey::{
    annular_coeff, cf_expand, coefficient_spectrum, decide_bounded_geometry, farey_distance,
    intersection_number, twist_coordinate, CfStream, CoefficientSpectrum, Decision, EndInvariant,
    Slope, SurfaceKind, ANNULAR_FUZZ,
};
pub use hyp::{
    band_measurements, band_stretch_bilipschitz, collar_crossing_projection, collar_profile,
    curve_shorten_displacement, cusp_collar_lengths, equidistant_displacement,
    half_space_juncture_diam, hexagon_embed, hexagon_solve, max_twist_ratio, tripod_lower_const,
    truncation_budget, tube_radius_lower, CollarProfile, ConstantsProfile, HexagonCase,
    HexagonGeometry,
};
pub use moves::{
    apply_move, check_resolution_properties, generate_resolution_xi1, occupancy_intervals,
    predecessor_successor, CurveId, ElementaryMove, MoveSequence, MoveType, PantsDecomposition,
    SurfaceSig,
};
