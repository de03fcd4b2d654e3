//! Annular coefficient spectra along the Farey geodesic between two end
//! invariants, and the bounded-geometry decision built on them.
//!
//! The geodesic is developed as the sequence of Farey triangles it crosses.
//! Each triangle is entered through one edge and left through another; the
//! vertex they share is the triangle's pivot, and maximal runs of triangles
//! with the same pivot are the fans of the ladder. Those pivots are the
//! slopes reported, and each one's coefficient is the annular coefficient of
//! the two ends about it. Only comparisons of an end with rationals are
//! needed, so irrational ends are handled through their coefficient streams.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use super::cf::{Convergents, EndInvariant, Irrational, OutOfTerms};
use super::slope::{Mat2, Slope};
use super::twist::{end_twist, EndTwistError};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientSpectrum {
    /// Pivot slopes in order from `ν₋` toward `ν₊`.
    pub pivots: Vec<Slope>,
    /// Number of crossed triangles in each pivot's fan.
    pub runs: Vec<BigUint>,
    /// Annular coefficient `d_α(ν₊, ν₋)` for each pivot.
    pub coeffs: Vec<BigUint>,
    /// Largest coefficient (0 for an empty spectrum).
    pub sup: BigUint,
    /// Whether every coefficient along the whole geodesic is accounted for:
    /// true when both ends are rational or eventually periodic and the
    /// periodic pattern has been traversed once after the walk locked onto
    /// the end's own ladder.
    pub complete: bool,
    pub depth: usize,
}

/// How the spectrum of a rational `x` against `∞` lines up with
/// `cf_expand(x)`: coefficient `i` is compared with term `i + offset`, raised
/// by `shift`. Fitted once by the calibration sweep recorded in the test data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CfAlignment {
    pub offset: usize,
    pub shift: i64,
}

pub const CF_ALIGNMENT: CfAlignment = CfAlignment {
    offset: 1,
    shift: 1,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    Bounded,
    Unbounded,
    IndeterminateAtDepth,
}

/// A walk target: where the geodesic is heading.
#[derive(Clone, Copy)]
enum Target<'a> {
    Rational(&'a Slope),
    Irrational(Irrational<'a>),
}

impl<'a> Target<'a> {
    fn of(end: &'a EndInvariant, rational: &'a Option<Slope>) -> Target<'a> {
        match rational {
            Some(r) => Target::Rational(r),
            None => Target::Irrational(end.irrational().expect("non-rational ends are irrational")),
        }
    }

    /// Sign of `det(U, X)` for the target `X`.
    fn sign_det(&self, u: &Slope) -> std::result::Result<Ordering, OutOfTerms> {
        match self {
            Target::Rational(x) => Ok(u.det(x).cmp(&BigInt::zero())),
            Target::Irrational(x) => {
                if u.is_infinite() {
                    Ok(Ordering::Greater)
                } else {
                    // det((u,1)·q, (x,1)) has the sign of u − x.
                    Ok(x.cmp_rational(u)?.reverse())
                }
            }
        }
    }

    fn equals(&self, s: &Slope) -> bool {
        matches!(self, Target::Rational(x) if *x == s)
    }
}

fn sign_det(u: &Slope, v: &Slope) -> Ordering {
    u.det(v).cmp(&BigInt::zero())
}

fn product(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        (x, y) if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

/// Whether the target and the slope `b` lie in the same component of
/// `RP¹ \ {u, v}`.
fn same_arc(
    u: &Slope,
    v: &Slope,
    x: &Target<'_>,
    b: &Slope,
) -> std::result::Result<bool, OutOfTerms> {
    let sx = product(x.sign_det(u)?, x.sign_det(v)?.reverse());
    let sb = product(sign_det(u, b), sign_det(b, v));
    Ok(sx == sb)
}

/// Crossed edge plus the apex of the triangle just left.
#[derive(Clone)]
struct Edge {
    u: Slope,
    v: Slope,
    back: Slope,
}

impl Edge {
    fn forward_apex(&self) -> Slope {
        let (w1, w2) = self.u.triangle_apexes(&self.v);
        if w1 == self.back {
            w2
        } else {
            w1
        }
    }
}

/// Lock-on bookkeeping for an eventually periodic target.
struct Lock<'a> {
    stream: Irrational<'a>,
    prefix_len: usize,
    period: usize,
    /// `conv[i]` is `c_{i-1}`.
    conv: Vec<Slope>,
    builder: Convergents,
    /// Pivot whose completed run certifies the whole pattern.
    goal: Option<Slope>,
    done: bool,
}

impl<'a> Lock<'a> {
    fn new(stream: Irrational<'a>, prefix_len: usize, period: usize) -> Lock<'a> {
        Lock {
            stream,
            prefix_len,
            period,
            conv: vec![Slope::infinity()],
            builder: Convergents::new(),
            goal: None,
            done: false,
        }
    }

    fn convergent(&mut self, j: usize) -> &Slope {
        while self.conv.len() <= j + 1 {
            let i = self.conv.len() - 1;
            let t = self
                .stream
                .term(i)
                .expect("periodic streams are infinite")
                .clone();
            self.conv.push(self.builder.push(&t));
        }
        &self.conv[j + 1]
    }

    /// Called on each crossed edge; sets the certifying pivot the first time
    /// the edge joins consecutive convergents `c_{k-1}, c_k`.
    fn observe(&mut self, e: &Edge) {
        if self.goal.is_some() {
            return;
        }
        let height = e.u.height().max(e.v.height());
        let mut k = 0;
        loop {
            let (prev, cur) = if k == 0 {
                (Slope::infinity(), self.convergent(0).clone())
            } else {
                (self.convergent(k - 1).clone(), self.convergent(k).clone())
            };
            if (prev == e.u && cur == e.v) || (prev == e.v && cur == e.u) {
                let need = (k + 2).max(self.prefix_len) + self.period - 1;
                self.goal = Some(self.convergent(need - 1).clone());
                return;
            }
            if prev.height() > height {
                return;
            }
            k += 1;
        }
    }

    fn completed(&mut self, pivot: &Slope) {
        if self.goal.as_ref() == Some(pivot) {
            self.done = true;
        }
    }
}

/// Triangle pivots along one direction of the geodesic.
struct Walk {
    pivots: Vec<Slope>,
    /// The run at the far end is cut off rather than finished.
    truncated: bool,
    certified: bool,
}

/// Develops the geodesic from `edge` toward `target`, collecting one pivot per
/// crossed triangle, until `depth` runs are complete or the target is reached.
fn walk(
    mut edge: Edge,
    first: Option<Slope>,
    target: Target<'_>,
    end: &EndInvariant,
    depth: usize,
) -> Walk {
    let mut lock = match (target, end) {
        (Target::Irrational(x), EndInvariant::CfStream(c)) => {
            Some(Lock::new(x, c.prefix().len(), c.period().len()))
        }
        _ => None,
    };
    let mut pivots: Vec<Slope> = first.into_iter().collect();
    let mut runs = usize::from(!pivots.is_empty());
    if let Some(l) = lock.as_mut() {
        l.observe(&edge);
    }
    loop {
        let w = edge.forward_apex();
        if target.equals(&w) {
            // Final triangle: it continues the run of the previous one.
            let last = pivots.last().cloned().unwrap_or_else(|| edge.u.clone());
            pivots.push(last);
            return Walk {
                pivots,
                truncated: false,
                certified: true,
            };
        }
        let into_uw = match same_arc(&edge.u, &w, &target, &edge.v) {
            Ok(same) => !same,
            Err(OutOfTerms) => {
                return Walk {
                    pivots,
                    truncated: true,
                    certified: false,
                }
            }
        };
        let (pivot, next) = if into_uw {
            (
                edge.u.clone(),
                Edge {
                    u: edge.u.clone(),
                    v: w,
                    back: edge.v.clone(),
                },
            )
        } else {
            (
                edge.v.clone(),
                Edge {
                    u: w,
                    v: edge.v.clone(),
                    back: edge.u.clone(),
                },
            )
        };
        if pivots.last() != Some(&pivot) {
            if let (Some(prev), Some(l)) = (pivots.last(), lock.as_mut()) {
                l.completed(prev);
            }
            if runs == depth + 1 || lock.as_ref().is_some_and(|l| l.done) {
                break;
            }
            runs += 1;
        }
        pivots.push(pivot);
        edge = next;
        if let Some(l) = lock.as_mut() {
            l.observe(&edge);
        }
    }
    let certified = lock.is_some_and(|l| l.done);
    Walk {
        pivots,
        truncated: true,
        certified,
    }
}

/// Drops the trailing run of a truncated walk.
fn drop_open_run(pivots: &mut Vec<Slope>) {
    if let Some(last) = pivots.last().cloned() {
        while pivots.last() == Some(&last) {
            pivots.pop();
        }
    }
}

/// Triangle pivots from `from` toward `to` when `from` is rational.
fn walk_from_rational(
    from: &Slope,
    to: &EndInvariant,
    to_r: &Option<Slope>,
    depth: usize,
) -> Result<(Vec<Slope>, bool)> {
    let target = Target::of(to, to_r);
    let n = match end_twist(from, to) {
        Ok(n) => n,
        Err(EndTwistError::OutOfTerms) => return Ok((Vec::new(), false)),
        Err(EndTwistError::Undefined(e)) => return Err(e),
    };
    let m_inv = Mat2::normalizing(from).inverse();
    let s = m_inv.apply(&Slope::integer(n.clone()));
    let t = m_inv.apply(&Slope::integer(n + 1));
    if target.equals(&s) {
        // Farey neighbours: the geodesic is a single edge.
        return Ok((Vec::new(), true));
    }
    let first = Edge {
        u: s.clone(),
        v: t,
        back: from.clone(),
    };
    let mut w = walk(first, Some(s), target, to, depth);
    if w.truncated {
        drop_open_run(&mut w.pivots);
    }
    Ok((w.pivots, w.certified))
}

/// Crossed edge separating two irrational ends, found by descending the
/// Farey tessellation from the edge `0/1, 1/0`. Returns the edges toward
/// `x` and `y` and, if the separating triangle is crossed, its pivot.
fn separating_edge(
    x: &Target<'_>,
    y: &Target<'_>,
) -> std::result::Result<(Edge, Edge, Option<Slope>), OutOfTerms> {
    let (zero, inf) = (Slope::integer(0), Slope::infinity());
    let (one, minus_one) = (Slope::integer(1), Slope::integer(-1));
    let x_up = same_arc(&zero, &inf, x, &one)?;
    let y_up = same_arc(&zero, &inf, y, &one)?;
    if x_up != y_up {
        let (xa, ya) = if x_up {
            (one, minus_one)
        } else {
            (minus_one, one)
        };
        return Ok((
            Edge {
                u: zero.clone(),
                v: inf.clone(),
                back: ya,
            },
            Edge {
                u: zero,
                v: inf,
                back: xa,
            },
            None,
        ));
    }
    let mut edge = Edge {
        u: zero,
        v: inf,
        back: if x_up { minus_one } else { one },
    };
    // Descent depth is bounded by the common prefix of the two expansions.
    loop {
        let w = edge.forward_apex();
        let x_uw = !same_arc(&edge.u, &w, x, &edge.v)?;
        let y_uw = !same_arc(&edge.u, &w, y, &edge.v)?;
        if x_uw == y_uw {
            edge = if x_uw {
                Edge {
                    u: edge.u.clone(),
                    v: w,
                    back: edge.v.clone(),
                }
            } else {
                Edge {
                    u: w,
                    v: edge.v.clone(),
                    back: edge.u.clone(),
                }
            };
            continue;
        }
        let (uw, wv) = (
            Edge {
                u: edge.u.clone(),
                v: w.clone(),
                back: edge.v.clone(),
            },
            Edge {
                u: w.clone(),
                v: edge.v.clone(),
                back: edge.u.clone(),
            },
        );
        return Ok(if x_uw {
            (uw, wv, Some(w))
        } else {
            (wv, uw, Some(w))
        });
    }
}

/// Between two rational ends the walk starts from the lower one (`∞` first),
/// so that swapping the ends reverses the spectrum exactly.
fn starts_before(a: &Slope, b: &Slope) -> bool {
    let key = |s: &Slope| (s.height(), !s.is_infinite());
    match key(a).cmp(&key(b)) {
        Ordering::Equal => a.cmp_real(b) == Ordering::Less,
        o => o == Ordering::Less,
    }
}

fn same_value(a: &EndInvariant, b: &EndInvariant) -> bool {
    match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => x == y,
        (None, None) => match (a, b) {
            (EndInvariant::CfStream(x), EndInvariant::CfStream(y)) => x == y,
            _ => false,
        },
        _ => false,
    }
}

/// Annular coefficients along the Farey geodesic from `nu_minus` to
/// `nu_plus`, developed through `depth` fans toward each irrational end.
///
/// For `nu_minus = ∞` and rational `nu_plus = [a0; a1, …, an]` the pivots are
/// the convergents `c_0, …, c_{n-1}`, the runs are `a1, …, an`, and each
/// coefficient is its run plus at most one.
pub fn coefficient_spectrum(
    nu_plus: &EndInvariant,
    nu_minus: &EndInvariant,
    depth: usize,
) -> Result<CoefficientSpectrum> {
    if depth == 0 {
        return Err(Error::domain("depth must be at least 1"));
    }
    if same_value(nu_plus, nu_minus) {
        return Err(Error::DegeneratePair);
    }
    let (rp, rm) = (nu_plus.as_rational(), nu_minus.as_rational());
    let (triangle_pivots, complete) = match (&rm, &rp) {
        (Some(a), Some(b)) if starts_before(b, a) => {
            let (mut p, c) = walk_from_rational(b, nu_minus, &rm, depth)?;
            p.reverse();
            (p, c)
        }
        (Some(from), _) => walk_from_rational(from, nu_plus, &rp, depth)?,
        (None, Some(from)) => {
            let (mut p, c) = walk_from_rational(from, nu_minus, &rm, depth)?;
            p.reverse();
            (p, c)
        }
        (None, None) => {
            let (x, y) = (Target::of(nu_plus, &rp), Target::of(nu_minus, &rm));
            match separating_edge(&x, &y) {
                Err(OutOfTerms) => (Vec::new(), false),
                Ok((ex, ey, middle)) => {
                    let mut wx = walk(ex, None, x, nu_plus, depth);
                    let mut wy = walk(ey, None, y, nu_minus, depth);
                    drop_open_run(&mut wx.pivots);
                    drop_open_run(&mut wy.pivots);
                    let mut all: Vec<Slope> = wy.pivots.into_iter().rev().collect();
                    all.extend(middle);
                    all.extend(wx.pivots);
                    (all, wx.certified && wy.certified)
                }
            }
        }
    };

    let mut spectrum = CoefficientSpectrum {
        pivots: Vec::new(),
        runs: Vec::new(),
        coeffs: Vec::new(),
        sup: BigUint::zero(),
        complete,
        depth,
    };
    let mut i = 0;
    while i < triangle_pivots.len() {
        let pivot = &triangle_pivots[i];
        let run = triangle_pivots[i..]
            .iter()
            .take_while(|p| *p == pivot)
            .count();
        let coeff = match (end_twist(pivot, nu_plus), end_twist(pivot, nu_minus)) {
            (Ok(a), Ok(b)) => (a - b).magnitude().clone(),
            (Err(EndTwistError::Undefined(e)), _) | (_, Err(EndTwistError::Undefined(e))) => {
                return Err(e)
            }
            _ => {
                spectrum.complete = false;
                break;
            }
        };
        spectrum.pivots.push(pivot.clone());
        spectrum.runs.push(BigUint::from(run));
        if coeff > spectrum.sup {
            spectrum.sup = coeff.clone();
        }
        spectrum.coeffs.push(coeff);
        i += run;
    }
    Ok(spectrum)
}

/// `Bounded` when every coefficient along the geodesic is below `k`,
/// `Unbounded` once some coefficient reaches `k`, and `IndeterminateAtDepth`
/// when the developed part is below `k` but does not cover the whole pattern.
///
/// Rational ends are accepted as formal endpoints.
pub fn decide_bounded_geometry(
    nu_plus: &EndInvariant,
    nu_minus: &EndInvariant,
    k: u64,
    depth: usize,
) -> Result<Decision> {
    if k == 0 {
        return Err(Error::domain("threshold K must be at least 1"));
    }
    let s = coefficient_spectrum(nu_plus, nu_minus, depth)?;
    Ok(if s.sup >= BigUint::from(k) {
        Decision::Unbounded
    } else if s.complete {
        Decision::Bounded
    } else {
        Decision::IndeterminateAtDepth
    })
}

impl CoefficientSpectrum {
    /// Largest deviation `|coeff_i − run_i|`.
    pub fn max_run_deviation(&self) -> BigUint {
        self.coeffs
            .iter()
            .zip(&self.runs)
            .map(|(c, r)| if c >= r { c - r } else { r - c })
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::cf::{cf_expand, CfStream};
    use num_traits::One;

    fn e(x: &str) -> EndInvariant {
        x.parse().unwrap()
    }

    fn u(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn adjacent_ends_have_empty_spectrum() {
        let s = coefficient_spectrum(&e("0/1"), &e("inf"), 5).unwrap();
        assert!(s.is_empty() && s.complete);
        assert_eq!(s.sup, BigUint::zero());
        assert_eq!(
            decide_bounded_geometry(&e("0/1"), &e("inf"), 1, 5).unwrap(),
            Decision::Bounded
        );
    }

    #[test]
    fn rational_runs_are_cf_coefficients() {
        for x in ["355/113", "34/55", "-7/2", "3/8", "1000/7", "17/12"] {
            let s = coefficient_spectrum(&e(x), &e("inf"), 50).unwrap();
            let cf = cf_expand(&x.parse().unwrap());
            let tail: Vec<BigUint> = cf[1..].iter().map(|a| a.magnitude().clone()).collect();
            assert_eq!(s.runs, tail, "{x}");
            assert!(s.complete);
            assert!(s.max_run_deviation() <= BigUint::one(), "{x}");
        }
    }

    #[test]
    fn pivots_are_convergents() {
        let s = coefficient_spectrum(&e("355/113"), &e("inf"), 50).unwrap();
        let want: Vec<Slope> = ["3/1", "22/7"].iter().map(|x| x.parse().unwrap()).collect();
        assert_eq!(s.pivots, want);
        // The last coefficient is its run or one more.
        assert_eq!(s.coeffs, u(&[8, 17]));
    }

    #[test]
    fn reversing_ends_reverses_pivots() {
        let a = coefficient_spectrum(&e("3/8"), &e("-5/2"), 50).unwrap();
        let b = coefficient_spectrum(&e("-5/2"), &e("3/8"), 50).unwrap();
        let mut rev = b.pivots.clone();
        rev.reverse();
        assert_eq!(a.pivots, rev);
        let mut rev = b.coeffs.clone();
        rev.reverse();
        assert_eq!(a.coeffs, rev);
    }

    #[test]
    fn golden_mean_is_bounded() {
        let g = EndInvariant::CfStream(CfStream::golden());
        let s = coefficient_spectrum(&g, &e("inf"), 40).unwrap();
        assert!(s.complete);
        assert!(s
            .coeffs
            .iter()
            .all(|c| *c >= BigUint::one() && *c <= BigUint::from(3u32)));
        assert!(s.sup <= BigUint::from(3u32));
        assert_eq!(
            decide_bounded_geometry(&g, &e("inf"), 10, 40).unwrap(),
            Decision::Bounded
        );
    }

    #[test]
    fn alternating_stream_tracks_its_coefficients() {
        let x = e("[0;1,5](period:2)");
        let s = coefficient_spectrum(&x, &e("inf"), 20).unwrap();
        for (c, r) in s.coeffs.iter().zip(&s.runs) {
            assert!(*r == BigUint::one() || *r == BigUint::from(5u32));
            assert!(c >= r && c - r <= BigUint::from(2u32));
        }
        assert!(s.complete);
        assert_eq!(
            decide_bounded_geometry(&x, &e("inf"), 10, 20).unwrap(),
            Decision::Bounded
        );
        assert_eq!(
            decide_bounded_geometry(&x, &e("inf"), 3, 20).unwrap(),
            Decision::Unbounded
        );
    }

    #[test]
    fn doubling_stream_is_unbounded() {
        let x = e("[0;1,2,4,8,16,32,64,128,256,...]");
        assert_eq!(
            decide_bounded_geometry(&x, &e("inf"), 10, 20).unwrap(),
            Decision::Unbounded
        );
        assert_eq!(
            decide_bounded_geometry(&x, &e("inf"), 1000, 20).unwrap(),
            Decision::IndeterminateAtDepth
        );
    }

    #[test]
    fn two_irrational_ends() {
        let g = EndInvariant::CfStream(CfStream::golden());
        let h = e("[-1;2,3](period:2)");
        let s = coefficient_spectrum(&g, &h, 12).unwrap();
        assert!(!s.is_empty());
        assert!(s.complete);
        assert!(s.max_run_deviation() <= BigUint::from(2u32));
        assert!(matches!(
            coefficient_spectrum(&g, &g, 5),
            Err(Error::DegeneratePair)
        ));
    }
}
