//! Pants decompositions, elementary moves, move sequences and resolution
//! sequences.

mod dot;
mod pants;
mod resolution;
mod sequence;

pub use dot::{farey_ball_dot, pants_dot};
pub use pants::{
    apply_move, CurveId, ElementaryMove, MoveType, PantsDecomposition, Slot, SurfaceSig,
};
pub use resolution::{
    canonical_geodesic, check_resolution_properties, generate_resolution_xi1, resolve_bfs,
    EmpiricalConstants, IntervalRatio, ResolutionReport, VertexDeviation, RECORDED_DELTA,
};
pub use sequence::{occupancy_intervals, predecessor_successor, MoveSequence, OccupancyReport};
