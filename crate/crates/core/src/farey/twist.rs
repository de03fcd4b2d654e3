//! Twist coordinates about a slope and the annular coefficients built from
//! them.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};

use super::cf::{EndInvariant, Irrational, OutOfTerms};
use super::slope::{Mat2, Slope};
use crate::error::{Error, Result};

/// Largest observed gap between [`annular_coeff`] and the number of Farey
/// edges at `alpha` separating `beta` from `gamma`; the calibration sweep in
/// the test data records the full histogram.
pub const ANNULAR_FUZZ: u32 = 1;

/// `⌊M·beta⌋` where `M` is [`Mat2::normalizing`] for `alpha`.
///
/// Adding a positive Dehn twist about `alpha` to `beta` raises the value by
/// exactly one.
pub fn twist_coordinate(alpha: &Slope, beta: &Slope) -> Result<BigInt> {
    if alpha == beta {
        return Err(Error::UndefinedProjection(format!(
            "{beta} equals the core curve {alpha}"
        )));
    }
    Ok(Mat2::normalizing(alpha)
        .apply(beta)
        .floor()
        .expect("image of beta is finite"))
}

/// Coarse annular distance `|tw(alpha, beta) − tw(alpha, gamma)|`. It agrees
/// with the count of Farey edges at `alpha` separating `beta` from `gamma`
/// up to one.
pub fn annular_coeff(alpha: &Slope, beta: &Slope, gamma: &Slope) -> Result<BigUint> {
    let tb = twist_coordinate(alpha, beta)?;
    let tg = twist_coordinate(alpha, gamma)?;
    Ok((tb - tg).magnitude().clone())
}

/// Why a twist coordinate of an end could not be produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum EndTwistError {
    Undefined(Error),
    OutOfTerms,
}

impl From<OutOfTerms> for EndTwistError {
    fn from(_: OutOfTerms) -> Self {
        EndTwistError::OutOfTerms
    }
}

/// Guard against runaway loops on malformed input; far beyond any depth the
/// engine develops.
const MAX_BRACKET_TERMS: usize = 100_000;

/// `⌊M·x⌋` for an irrational `x`, settled by a pair of consecutive
/// convergents whose images lie in one unit interval, with the pole of `M`
/// outside the bracket.
fn irrational_floor(
    alpha: &Slope,
    m: &Mat2,
    x: Irrational<'_>,
) -> std::result::Result<BigInt, OutOfTerms> {
    let mut conv = x.convergents();
    let mut prev = conv.next().ok_or(OutOfTerms)?;
    for cur in conv.take(MAX_BRACKET_TERMS) {
        let (lo, hi) = if prev.cmp_real(&cur) == Ordering::Less {
            (&prev, &cur)
        } else {
            (&cur, &prev)
        };
        let pole_inside = !alpha.is_infinite()
            && alpha.cmp_real(lo) != Ordering::Less
            && alpha.cmp_real(hi) != Ordering::Greater;
        if !pole_inside {
            let (a, b) = (m.apply(&prev), m.apply(&cur));
            let (ilo, ihi) = if a.cmp_real(&b) == Ordering::Less {
                (a, b)
            } else {
                (b, a)
            };
            let n = ilo.floor().expect("finite image");
            if ihi.cmp_real(&Slope::integer(&n + 1)) != Ordering::Greater {
                return Ok(n);
            }
        }
        prev = cur;
    }
    Err(OutOfTerms)
}

/// Twist coordinate of an end invariant about `alpha`.
pub(crate) fn end_twist(
    alpha: &Slope,
    end: &EndInvariant,
) -> std::result::Result<BigInt, EndTwistError> {
    if let Some(r) = end.as_rational() {
        return twist_coordinate(alpha, &r).map_err(EndTwistError::Undefined);
    }
    let x = end.irrational().expect("non-rational ends are irrational");
    Ok(irrational_floor(alpha, &Mat2::normalizing(alpha), x)?)
}
