//! Bounded twisting of a geodesic crossing the region outside a collar.

use serde::Serialize;

use super::collar::{full_width, reduced_width};
use crate::error::{Error, Result};
use crate::numeric;

/// Length `p` of the orthogonal projection onto the core of a geodesic ray
/// tangent to the equidistant curve at distance `w`: `sinh(w)·sinh(p) = 1`.
pub fn collar_crossing_projection(w: f64) -> Result<f64> {
    if !(w > 0.0) {
        return Err(Error::domain(format!(
            "collar width must be positive, got {w}"
        )));
    }
    Ok((1.0 / w.sinh()).asinh())
}

/// Projection-to-length ratio `p/ell` as a function of the full collar width.
pub fn twist_ratio_at_width(w0: f64) -> f64 {
    let ell = 2.0 * (1.0 / w0.sinh()).asinh();
    let p = (1.0 / reduced_width(w0).sinh()).asinh();
    p / ell
}

/// Ratio `p/ell` as a function of the geodesic length.
pub fn twist_ratio(ell: f64) -> f64 {
    twist_ratio_at_width(full_width(ell))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwistRatioMax {
    pub ratio_max: f64,
    pub w0_argmax: f64,
    pub ell_argmax: f64,
}

/// Maximizes `p/ell` over all lengths.
///
/// The ratio is smooth in `w0` away from the branch switch of the reduced
/// width, so each smooth piece is maximized separately after a coarse scan.
pub fn max_twist_ratio() -> TwistRatioMax {
    let grid = numeric::log_grid(1e-4, 60.0, 2000);
    let mut best = (0usize, f64::NEG_INFINITY);
    for (k, &w0) in grid.iter().enumerate() {
        let v = twist_ratio_at_width(w0);
        if v > best.1 {
            best = (k, v);
        }
    }
    let lo = grid[best.0.saturating_sub(1)];
    let hi = grid[(best.0 + 1).min(grid.len() - 1)];
    // Candidates: golden refinement on each side of the branch switch plus the
    // switch itself.
    let mut candidates = vec![(2.0, twist_ratio_at_width(2.0))];
    if lo < 2.0 {
        candidates.push(numeric::golden_max(
            twist_ratio_at_width,
            lo,
            hi.min(2.0),
            1e-12,
        ));
    }
    if hi > 2.0 {
        candidates.push(numeric::golden_max(
            twist_ratio_at_width,
            lo.max(2.0),
            hi,
            1e-12,
        ));
    }
    let (w0, ratio) = candidates
        .into_iter()
        .fold((f64::NAN, f64::NEG_INFINITY), |acc, c| {
            if c.1 > acc.1 {
                c
            } else {
                acc
            }
        });
    TwistRatioMax {
        ratio_max: ratio,
        w0_argmax: w0,
        ell_argmax: 2.0 * (1.0 / w0.sinh()).asinh(),
    }
}
