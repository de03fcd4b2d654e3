//! Diameter of the overlap of neighbourhoods of two separated half-spaces.

use num_complex::Complex64;

use super::model::distance;
use crate::error::{Error, Result};
use crate::numeric;

/// Fermi coordinates `(t, u)` about the common perpendicular (the imaginary
/// axis, parametrized by `t`) mapped into the upper half-plane.
fn fermi_point(t: f64, u: f64) -> Complex64 {
    Complex64::new(u.tanh(), 1.0 / u.cosh()) * t.exp()
}

/// Half-width in `u` of the overlap region at axial position `t`, or `None`
/// outside it. The half-spaces are `t <= 0` and `t >= r0`.
fn half_width(t: f64, b: f64, r0: f64) -> Option<f64> {
    let sb = b.sinh();
    let bound = |d: f64| {
        if d <= 0.0 {
            f64::INFINITY
        } else {
            sb / d.sinh()
        }
    };
    let m = bound(t).min(bound(r0 - t));
    if m < 1.0 {
        None
    } else {
        Some(m.acosh())
    }
}

/// Diameter of `N_b(H_A) ∩ N_b(H_B)` for half-spaces whose boundary planes are
/// at distance `r0`.
///
/// The overlap is a solid of revolution about the common perpendicular, so
/// its diameter equals that of the planar cross-section; that convex region
/// is sampled along its boundary and the best pair is refined.
pub fn half_space_juncture_diam(b: f64, r0: f64) -> Result<f64> {
    if !(b > 0.0 && r0 > 0.0 && b.is_finite() && r0.is_finite()) {
        return Err(Error::domain(format!(
            "need b > 0 and r0 > 0, got ({b}, {r0})"
        )));
    }
    let (t_lo, t_hi) = (r0 - b, b);
    if t_lo > t_hi {
        return Ok(0.0);
    }
    let boundary = |s: f64, side: f64| -> Complex64 {
        let t = t_lo + (t_hi - t_lo) * s;
        let u = half_width(t, b, r0).unwrap_or(0.0);
        fermi_point(t, side * u)
    };
    const N: usize = 200;
    let mut best = (0.0, 0.5, 0.5);
    for i in 0..=N {
        for j in 0..=N {
            let (s1, s2) = (i as f64 / N as f64, j as f64 / N as f64);
            let d = distance(boundary(s1, 1.0), boundary(s2, -1.0));
            if d > best.0 {
                best = (d, s1, s2);
            }
        }
    }
    // Coordinate refinement on the opposite-side pair.
    let (mut s1, mut s2) = (best.1, best.2);
    let h = 1.0 / N as f64;
    for _ in 0..4 {
        let (x, _) = numeric::golden_max(
            |x| distance(boundary(x, 1.0), boundary(s2, -1.0)),
            (s1 - h).max(0.0),
            (s1 + h).min(1.0),
            1e-12,
        );
        s1 = x;
        let (y, _) = numeric::golden_max(
            |y| distance(boundary(s1, 1.0), boundary(y, -1.0)),
            (s2 - h).max(0.0),
            (s2 + h).min(1.0),
            1e-12,
        );
        s2 = y;
    }
    Ok(best.0.max(distance(boundary(s1, 1.0), boundary(s2, -1.0))))
}
