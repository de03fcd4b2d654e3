//! Hyperbolic trigonometry: collars, twists, right-angled hexagons and their
//! band decompositions, curve shortening, and tube and truncation constants.
//!
//! Closed-form evaluations live next to an explicit upper-half-plane model
//! ([`model`], [`embed`]) that measures the same quantities by quadrature.

pub mod bands;
pub mod collar;
pub mod constants;
pub mod embed;
pub mod hexagon;
pub mod juncture;
pub mod model;
pub mod shorten;
pub mod stretch;
pub mod twist;

pub use bands::{band_measurements, BandMeasurements};
pub use collar::{collar_profile, cusp_collar_lengths, reduced_boundary_infimum, CollarProfile};
pub use constants::{
    horoball_gap, tripod_lower_const, truncation_budget, tube_radius_lower, ConstantsProfile,
};
pub use embed::{hexagon_embed, EmbeddedHexagon};
pub use hexagon::{
    hexagon_solve, pair_index, pair_sides, BandLabel, BandRecord, EdgeLabel, EdgeRecord,
    HexagonCase, HexagonGeometry, TriangleRecord,
};
pub use juncture::half_space_juncture_diam;
pub use shorten::{curve_shorten_displacement, equidistant_displacement};
pub use stretch::band_stretch_bilipschitz;
pub use twist::{collar_crossing_projection, max_twist_ratio, twist_ratio, TwistRatioMax};
