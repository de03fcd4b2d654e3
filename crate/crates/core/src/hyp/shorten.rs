//! Displacement estimates for loxodromic isometries of hyperbolic 3-space.

use crate::error::{Error, Result};

/// Displacement `s` of a point at distance `r` from the axis of a pure
/// translation of length `ell`: `sinh(s/2) = sinh(ell/2)·cosh(r)`.
pub fn curve_shorten_displacement(ell: f64, r: f64) -> Result<f64> {
    if !(ell >= 0.0 && r >= 0.0) {
        return Err(Error::domain(format!(
            "need ell >= 0 and r >= 0, got ({ell}, {r})"
        )));
    }
    if r == 0.0 {
        return Ok(ell);
    }
    // The clamp only absorbs rounding for tiny r.
    Ok((2.0 * ((0.5 * ell).sinh() * r.cosh()).asinh()).max(ell))
}

/// Displacement measured along the `t`-equidistant surface of the axis for
/// complex translation length `ell + iθ`.
pub fn equidistant_displacement(ell: f64, theta: f64, t: f64) -> Result<f64> {
    if !(ell >= 0.0 && t >= 0.0) || !theta.is_finite() {
        return Err(Error::domain(format!(
            "need ell >= 0 and t >= 0, got ({ell}, {t})"
        )));
    }
    Ok(((ell * t.cosh()).powi(2) + (theta * t.sinh()).powi(2)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn on_axis_is_translation_length() {
        for ell in [0.0, 0.3, 2.0, 7.5] {
            assert!((curve_shorten_displacement(ell, 0.0).unwrap() - ell).abs() < 1e-14);
            assert!((equidistant_displacement(ell, 1.0, 0.0).unwrap() - ell).abs() < 1e-14);
        }
    }

    #[test]
    fn reference_values() {
        let s = curve_shorten_displacement(0.1, 2.0).unwrap();
        assert!((s - 0.374_189_473_982_099).abs() < 1e-12, "{s}");
        let d = equidistant_displacement(0.05, FRAC_PI_2, 1.0).unwrap();
        assert!((d - 1.847_613_349_239_36).abs() < 1e-12, "{d}");
        let d = equidistant_displacement(0.0, -0.4, 1.5).unwrap();
        assert!((d - 0.4 * 1.5f64.sinh()).abs() < 1e-15);
    }

    #[test]
    fn monotone_in_distance() {
        let mut prev = 0.0;
        for k in 0..50 {
            let s = curve_shorten_displacement(0.5, k as f64 * 0.1).unwrap();
            assert!(s >= prev);
            prev = s;
        }
        assert!(curve_shorten_displacement(-1.0, 0.0).is_err());
        assert!(curve_shorten_displacement(1.0, -0.1).is_err());
    }
}
