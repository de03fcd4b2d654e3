//! Standard and reduced collars about simple closed geodesics and cusps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric;

/// Widths and boundary lengths of the collars about a geodesic of length `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollarProfile {
    pub ell: f64,
    /// Full collar width, `sinh(w0)·sinh(ell/2) = 1`.
    pub w0: f64,
    /// Reduced width `max(w0/2, w0 − 1)`.
    pub w: f64,
    pub boundary_len_full: f64,
    pub boundary_len_reduced: f64,
}

/// Full collar width `arcsinh(1 / sinh(ell/2))`.
pub fn full_width(ell: f64) -> f64 {
    (1.0 / (0.5 * ell).sinh()).asinh()
}

/// Reduced collar width.
pub fn reduced_width(w0: f64) -> f64 {
    (0.5 * w0).max(w0 - 1.0)
}

pub fn collar_profile(ell: f64) -> Result<CollarProfile> {
    if !(ell.is_finite() && ell > 0.0) {
        return Err(Error::domain(format!(
            "collar length must be positive and finite, got {ell}"
        )));
    }
    let w0 = full_width(ell);
    let w = reduced_width(w0);
    // ell·cosh(w0) = sqrt(ell² + (ell / sinh(ell/2))²), which keeps full
    // precision as ell → 0 where cosh(w0) overflows the significance of ell.
    let ratio = ell / (0.5 * ell).sinh();
    Ok(CollarProfile {
        ell,
        w0,
        w,
        boundary_len_full: ell.hypot(ratio),
        boundary_len_reduced: ell * w.cosh(),
    })
}

/// Boundary lengths of the full and reduced collars of a cusp: `(2, 2/e)`.
pub fn cusp_collar_lengths() -> (f64, f64) {
    let full = 2.0;
    (full, full * (-1f64).exp())
}

/// Infimum over all lengths of the reduced collar boundary length.
///
/// The reduced boundary tends to `2/e` as `ell → 0`; the infimum is found by a
/// log-spaced scan followed by golden-section refinement and compared with
/// that limit.
pub fn reduced_boundary_infimum() -> f64 {
    let f = |ell: f64| -> f64 { ell * reduced_width(full_width(ell)).cosh() };
    let grid = numeric::log_grid(1e-8, 50.0, 4000);
    let (k, _) =
        grid.iter()
            .enumerate()
            .map(|(k, &x)| (k, f(x)))
            .fold(
                (0, f64::INFINITY),
                |acc, (k, v)| if v < acc.1 { (k, v) } else { acc },
            );
    let lo = grid[k.saturating_sub(1)];
    let hi = grid[(k + 1).min(grid.len() - 1)];
    let (_, neg) = numeric::golden_max(|x| -f(x), lo, hi, 1e-12);
    (-neg).min(cusp_collar_lengths().1)
}
