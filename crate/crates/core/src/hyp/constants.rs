//! Global constants profile and the explicit constant budgets derived from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The global constants: a Margulis constant `eps0`, the thinness threshold
/// `eps1`, the short-pants length bound `l1`, the Sullivan bilipschitz
/// constant `k0`, and the additive constant `tube_radius_c` of the tube-radius
/// bound.
///
/// None of these are pinned by the geometry implemented here; the defaults
/// are working values and are flagged as such by [`ConstantsProfile::note`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct ConstantsProfile {
    pub eps0: f64,
    pub eps1: f64,
    pub l1: f64,
    pub k0: f64,
    pub tube_radius_c: f64,
}

#[derive(Deserialize)]
struct RawProfile {
    eps0: f64,
    eps1: f64,
    l1: f64,
    k0: f64,
    #[serde(default)]
    tube_radius_c: f64,
}

impl TryFrom<RawProfile> for ConstantsProfile {
    type Error = Error;

    fn try_from(raw: RawProfile) -> Result<Self> {
        ConstantsProfile::new(raw.eps0, raw.eps1, raw.l1, raw.k0, raw.tube_radius_c)
    }
}

impl ConstantsProfile {
    pub fn new(eps0: f64, eps1: f64, l1: f64, k0: f64, tube_radius_c: f64) -> Result<Self> {
        let finite = [eps0, eps1, l1, k0, tube_radius_c]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::domain("constants must be finite"));
        }
        if !(eps1 > 0.0 && eps1 < eps0) {
            return Err(Error::domain(format!(
                "need 0 < eps1 < eps0, got eps1={eps1}, eps0={eps0}"
            )));
        }
        if !(k0 >= 1.0) {
            return Err(Error::domain(format!("need K0 >= 1, got {k0}")));
        }
        if !(eps1 < eps0 / k0) {
            return Err(Error::domain(format!(
                "need eps1 < eps0/K0, got {eps1} >= {}",
                eps0 / k0
            )));
        }
        if !(l1 > 0.0) {
            return Err(Error::domain(format!("need L1 > 0, got {l1}")));
        }
        if tube_radius_c < 0.0 {
            return Err(Error::domain(format!(
                "tube radius constant must be >= 0, got {tube_radius_c}"
            )));
        }
        Ok(ConstantsProfile {
            eps0,
            eps1,
            l1,
            k0,
            tube_radius_c,
        })
    }

    /// Working defaults with `L1 = 6|chi|`.
    pub fn for_euler_characteristic(chi: i64) -> Result<Self> {
        if chi >= 0 {
            return Err(Error::domain(format!(
                "Euler characteristic must be negative, got {chi}"
            )));
        }
        ConstantsProfile::new(0.1, 0.01, 6.0 * chi.unsigned_abs() as f64, 2.0, 0.0)
    }

    /// Provenance string carried into every emitted table.
    pub fn note(&self) -> String {
        format!(
            "working constants (not derived): eps0={} eps1={} L1={} K0={} c={}",
            self.eps0, self.eps1, self.l1, self.k0, self.tube_radius_c
        )
    }
}

impl Default for ConstantsProfile {
    fn default() -> Self {
        ConstantsProfile::for_euler_characteristic(-1).expect("default profile is valid")
    }
}

/// Lower bound `max(0, ½·log(eps0/eps) − c)` on the radius of the
/// `eps0`-Margulis tube about a curve of length below `eps`.
pub fn tube_radius_lower(eps: f64, profile: &ConstantsProfile) -> Result<f64> {
    if !(eps > 0.0 && eps <= profile.eps0) {
        return Err(Error::domain(format!(
            "eps must lie in (0, eps0={}], got {eps}",
            profile.eps0
        )));
    }
    Ok((0.5 * (profile.eps0 / eps).ln() - profile.tube_radius_c).max(0.0))
}

/// Truncation budget `(L, L2) = (3π|chi|/eps, 2(L + eps))`.
pub fn truncation_budget(chi: i64, eps: f64) -> Result<(f64, f64)> {
    if chi >= 0 {
        return Err(Error::domain(format!(
            "Euler characteristic must be negative, got {chi}"
        )));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::domain(format!("eps must be positive, got {eps}")));
    }
    let l = 3.0 * std::f64::consts::PI * chi.unsigned_abs() as f64 / eps;
    Ok((l, 2.0 * (l + eps)))
}

/// Distance from the centre of three mutually tangent horoballs to each of
/// them: `log(2/√3)`.
pub fn horoball_gap() -> f64 {
    (2.0 / 3f64.sqrt()).ln()
}

/// Lower bound `2·log(2/√3)` on the legs of an essential tripod.
pub fn tripod_lower_const() -> f64 {
    2.0 * horoball_gap()
}
