//! Bilipschitz constant of the affine stretch between band parameter
//! rectangles carrying the metric `dx² + cosh²(x)·dy²`.

use crate::error::{Error, Result};

/// Number of sample points across the band width.
pub const STRETCH_GRID: usize = 2001;

/// Supremum over a grid of the local bilipschitz constant of
/// `(x, y) ↦ (x·r′/r, y·c′/c)` from `[0,r]×[0,c]` to `[0,r′]×[0,c′]`.
///
/// Both metrics are diagonal in these coordinates, so the local constant at
/// `x` is the largest of the axis stretch factors and their reciprocals.
pub fn band_stretch_bilipschitz(r: f64, c: f64, r_prime: f64, c_prime: f64) -> Result<f64> {
    if ![r, c, r_prime, c_prime]
        .iter()
        .all(|v| *v > 0.0 && v.is_finite())
    {
        return Err(Error::domain(format!(
            "band dimensions must be positive, got ({r}, {c}) -> ({r_prime}, {c_prime})"
        )));
    }
    let sx = r_prime / r;
    let sy = c_prime / c;
    let mut k: f64 = sx.max(1.0 / sx);
    for i in 0..STRETCH_GRID {
        let x = r * i as f64 / (STRETCH_GRID - 1) as f64;
        let ly = sy * (x * sx).cosh() / x.cosh();
        k = k.max(ly).max(1.0 / ly);
    }
    Ok(k)
}
