//! Upper half-plane model: points, geodesics, isometries, and curves whose
//! hyperbolic length and enclosed area are measured by quadrature.

use num_complex::Complex64;

use crate::numeric;

/// A point of the closed upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelPoint {
    Interior(Complex64),
    /// Ideal point on the real axis.
    Ideal(f64),
    Infinity,
}

impl ModelPoint {
    pub fn interior(x: f64, y: f64) -> Self {
        ModelPoint::Interior(Complex64::new(x, y))
    }

    pub fn is_ideal(&self) -> bool {
        !matches!(self, ModelPoint::Interior(_))
    }

    pub fn as_interior(&self) -> Option<Complex64> {
        match *self {
            ModelPoint::Interior(z) => Some(z),
            _ => None,
        }
    }
}

/// Hyperbolic distance between interior points.
pub fn distance(z: Complex64, w: Complex64) -> f64 {
    2.0 * ((z - w).norm() / (2.0 * (z.im * w.im).sqrt())).asinh()
}

/// Distance between model points; infinite if either is ideal.
pub fn point_distance(p: ModelPoint, q: ModelPoint) -> f64 {
    match (p, q) {
        (ModelPoint::Interior(z), ModelPoint::Interior(w)) => distance(z, w),
        _ => f64::INFINITY,
    }
}

/// Orientation-preserving isometry `z ↦ (az + b)/(cz + d)` with real
/// coefficients and `ad − bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mobius {
    pub const IDENTITY: Mobius = Mobius {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds a map from arbitrary coefficients with positive determinant.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        let det = a * d - b * c;
        assert!(det > 0.0, "Möbius map must preserve the upper half-plane");
        let s = det.sqrt();
        Mobius {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (z * self.a + self.b) / (z * self.c + self.d)
    }

    /// Complex derivative at `z`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = z * self.c + self.d;
        Complex64::new(1.0, 0.0) / (den * den)
    }

    pub fn apply_point(&self, p: ModelPoint) -> ModelPoint {
        match p {
            ModelPoint::Interior(z) => ModelPoint::Interior(self.apply(z)),
            ModelPoint::Ideal(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    ModelPoint::Infinity
                } else {
                    ModelPoint::Ideal((self.a * x + self.b) / den)
                }
            }
            ModelPoint::Infinity => {
                if self.c == 0.0 {
                    ModelPoint::Infinity
                } else {
                    ModelPoint::Ideal(self.a / self.c)
                }
            }
        }
    }

    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Isometry sending ideal point `u` to 0 and `v` to ∞.
    pub fn normalizing(u: ModelPoint, v: ModelPoint) -> Mobius {
        match (u, v) {
            (ModelPoint::Ideal(u), ModelPoint::Infinity) => Mobius::new(1.0, -u, 0.0, 1.0),
            (ModelPoint::Infinity, ModelPoint::Ideal(v)) => Mobius::new(0.0, -1.0, 1.0, -v),
            (ModelPoint::Ideal(u), ModelPoint::Ideal(v)) => {
                if u > v {
                    Mobius::new(1.0, -u, 1.0, -v)
                } else {
                    Mobius::new(-1.0, u, 1.0, -v)
                }
            }
            _ => panic!("normalizing map needs two distinct ideal points"),
        }
    }
}

/// A complete oriented geodesic, given by its ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pub start: ModelPoint,
    pub end: ModelPoint,
}

impl Geodesic {
    pub fn new(start: ModelPoint, end: ModelPoint) -> Self {
        debug_assert!(start.is_ideal() && end.is_ideal());
        Geodesic { start, end }
    }

    /// The geodesic through `z` then `w`, oriented from `z` toward `w`.
    pub fn through(z: Complex64, w: Complex64) -> Self {
        let (p, q) = if (z.re - w.re).abs() <= 1e-14 * (1.0 + z.re.abs()) {
            (ModelPoint::Ideal(z.re), ModelPoint::Infinity)
        } else {
            let c = (z.norm_sqr() - w.norm_sqr()) / (2.0 * (z.re - w.re));
            let r = (z - c).norm();
            (ModelPoint::Ideal(c - r), ModelPoint::Ideal(c + r))
        };
        let g = Geodesic::new(p, q);
        let phi = g.to_axis();
        if phi.apply(z).norm() < phi.apply(w).norm() {
            g
        } else {
            g.reversed()
        }
    }

    /// Geodesic from an interior point toward an ideal point.
    pub fn toward(z: Complex64, ideal: ModelPoint) -> Self {
        let other = match ideal {
            ModelPoint::Infinity => ModelPoint::Ideal(z.re),
            ModelPoint::Ideal(x) => {
                if (x - z.re).abs() < 1e-300 {
                    ModelPoint::Infinity
                } else {
                    let c = (z.norm_sqr() - x * x) / (2.0 * (z.re - x));
                    ModelPoint::Ideal(2.0 * c - x)
                }
            }
            ModelPoint::Interior(_) => panic!("toward needs an ideal target"),
        };
        Geodesic::new(other, ideal)
    }

    pub fn reversed(&self) -> Self {
        Geodesic {
            start: self.end,
            end: self.start,
        }
    }

    /// Isometry taking this geodesic to the imaginary axis, start ↦ 0.
    pub fn to_axis(&self) -> Mobius {
        Mobius::normalizing(self.start, self.end)
    }

    /// Point at signed distance `t` from interior point `z` (assumed on the
    /// geodesic), positive toward `end`.
    pub fn walk(&self, z: Complex64, t: f64) -> Complex64 {
        let phi = self.to_axis();
        let s = phi.apply(z).norm();
        phi.inverse().apply(Complex64::new(0.0, s * t.exp()))
    }

    /// Unit tangent (Euclidean direction) at a point of the geodesic.
    pub fn tangent(&self, z: Complex64) -> Complex64 {
        let phi = self.to_axis();
        let zeta = phi.apply(z);
        let v = phi.inverse().derivative(zeta) * Complex64::new(0.0, 1.0);
        v / v.norm()
    }

    /// Geodesic perpendicular to this one through the on-geodesic point `z`.
    pub fn perpendicular_at(&self, z: Complex64) -> Geodesic {
        let phi = self.to_axis();
        let s = phi.apply(z).norm();
        let inv = phi.inverse();
        Geodesic::new(
            inv.apply_point(ModelPoint::Ideal(s)),
            inv.apply_point(ModelPoint::Ideal(-s)),
        )
    }

    /// Intersection point with another geodesic, if they cross.
    pub fn intersection(&self, other: &Geodesic) -> Option<Complex64> {
        let phi = self.to_axis();
        let (p, q) = match (phi.apply_point(other.start), phi.apply_point(other.end)) {
            (ModelPoint::Ideal(p), ModelPoint::Ideal(q)) => (p, q),
            _ => return None,
        };
        if p * q >= 0.0 {
            return None;
        }
        Some(phi.inverse().apply(Complex64::new(0.0, (-p * q).sqrt())))
    }

    /// Feet of the common perpendicular with an ultraparallel geodesic:
    /// `(foot on self, foot on other)`. `None` if the geodesics meet or share
    /// an ideal endpoint.
    pub fn common_perpendicular(&self, other: &Geodesic) -> Option<(Complex64, Complex64)> {
        let phi = self.to_axis();
        let (p, q) = match (phi.apply_point(other.start), phi.apply_point(other.end)) {
            (ModelPoint::Ideal(p), ModelPoint::Ideal(q)) => (p, q),
            _ => return None,
        };
        if p * q <= 0.0 {
            return None;
        }
        let rho2 = p * q;
        let m = 0.5 * (p + q);
        let big_r = 0.5 * (q - p).abs();
        // Orthogonal circles with m² − R² = pq.
        let x = rho2 / m;
        let y = rho2.sqrt() * big_r / m.abs();
        let inv = phi.inverse();
        Some((
            inv.apply(Complex64::new(0.0, rho2.sqrt())),
            inv.apply(Complex64::new(x, y)),
        ))
    }

    /// Unsigned distance from an interior point to the geodesic.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        let zeta = self.to_axis().apply(z);
        (zeta.re.abs() / zeta.im).asinh()
    }
}

/// Hypercycle arc: in the coordinates of `frame⁻¹` (which sends the base
/// geodesic to the imaginary axis) it is `t ↦ eᵗ·e^{iψ}` for `t ∈ [t0, t1]`.
/// `ψ = π/2` is the geodesic itself; infinite `t` marks an ideal end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperArc {
    frame: Mobius,
    psi: f64,
    t0: f64,
    t1: f64,
}

impl HyperArc {
    /// Arc of the curve equidistant from `base` joining `from` and `to`.
    /// Interior endpoints must lie at a common distance from `base` on the
    /// same side; ideal endpoints must be endpoints of `base`.
    pub fn equidistant(base: &Geodesic, from: ModelPoint, to: ModelPoint) -> Self {
        let phi = base.to_axis();
        let param = |p: ModelPoint| -> (f64, Option<f64>) {
            match phi.apply_point(p) {
                ModelPoint::Interior(z) => (z.norm().ln(), Some(z.arg())),
                ModelPoint::Ideal(x) if x.abs() < 1e-300 => (f64::NEG_INFINITY, None),
                ModelPoint::Infinity => (f64::INFINITY, None),
                ModelPoint::Ideal(x) => {
                    // Ideal endpoint of a hypercycle lands on a base endpoint
                    // only in the limit; numerically it is the base endpoint.
                    if x.abs() < 1e-9 {
                        (f64::NEG_INFINITY, None)
                    } else {
                        (f64::INFINITY, None)
                    }
                }
            }
        };
        let (t0, psi0) = param(from);
        let (t1, psi1) = param(to);
        let psi = psi0.or(psi1).unwrap_or(std::f64::consts::FRAC_PI_2);
        HyperArc {
            frame: phi.inverse(),
            psi,
            t0,
            t1,
        }
    }

    /// Geodesic segment between two points (either may be ideal).
    pub fn segment(from: ModelPoint, to: ModelPoint) -> Self {
        let g = match (from, to) {
            (ModelPoint::Interior(z), ModelPoint::Interior(w)) => Geodesic::through(z, w),
            (ModelPoint::Interior(z), ideal) => Geodesic::toward(z, ideal),
            (ideal, ModelPoint::Interior(w)) => Geodesic::toward(w, ideal).reversed(),
            (p, q) => Geodesic::new(p, q),
        };
        HyperArc::equidistant(&g, from, to)
    }

    pub fn range(&self) -> (f64, f64) {
        (self.t0, self.t1)
    }

    pub fn with_range(&self, t0: f64, t1: f64) -> Self {
        HyperArc { t0, t1, ..*self }
    }

    /// Signed offset from the base geodesic, positive on the side `Re ζ > 0`.
    pub fn offset(&self) -> f64 {
        (1.0 / self.psi.tan()).asinh()
    }

    pub fn point(&self, t: f64) -> Complex64 {
        self.frame.apply(Complex64::from_polar(t.exp(), self.psi))
    }

    /// Derivative with respect to `t`.
    pub fn velocity(&self, t: f64) -> Complex64 {
        let zeta = Complex64::from_polar(t.exp(), self.psi);
        self.frame.derivative(zeta) * zeta
    }

    pub fn start(&self) -> ModelPoint {
        self.end_point(self.t0)
    }

    pub fn end(&self) -> ModelPoint {
        self.end_point(self.t1)
    }

    fn end_point(&self, t: f64) -> ModelPoint {
        if t.is_finite() {
            ModelPoint::Interior(self.point(t))
        } else if t > 0.0 {
            self.frame.apply_point(ModelPoint::Infinity)
        } else {
            self.frame.apply_point(ModelPoint::Ideal(0.0))
        }
    }
}

/// Horocyclic arc, used to truncate regions at ideal vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HoroArc {
    /// Horocycle tangent to the real axis at `base` with Euclidean diameter
    /// `diam`, swept by the angle about its Euclidean centre.
    AtReal {
        base: f64,
        diam: f64,
        theta0: f64,
        theta1: f64,
    },
    /// Horizontal horocycle `Im z = height` from `x0` to `x1`.
    AtInfinity { height: f64, x0: f64, x1: f64 },
}

impl HoroArc {
    fn range(&self) -> (f64, f64) {
        match *self {
            HoroArc::AtReal { theta0, theta1, .. } => (theta0, theta1),
            HoroArc::AtInfinity { x0, x1, .. } => (x0, x1),
        }
    }

    fn point(&self, s: f64) -> Complex64 {
        match *self {
            HoroArc::AtReal { base, diam, .. } => {
                Complex64::new(base, 0.5 * diam) + Complex64::from_polar(0.5 * diam, s)
            }
            HoroArc::AtInfinity { height, .. } => Complex64::new(s, height),
        }
    }

    fn velocity(&self, s: f64) -> Complex64 {
        match *self {
            HoroArc::AtReal { diam, .. } => Complex64::from_polar(0.5 * diam, s) * Complex64::i(),
            HoroArc::AtInfinity { .. } => Complex64::new(1.0, 0.0),
        }
    }
}

/// One boundary piece of a region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Arc {
    Hyper(HyperArc),
    Horo(HoroArc),
}

impl Arc {
    fn range(&self) -> (f64, f64) {
        match self {
            Arc::Hyper(h) => h.range(),
            Arc::Horo(h) => h.range(),
        }
    }

    fn point(&self, s: f64) -> Complex64 {
        match self {
            Arc::Hyper(h) => h.point(s),
            Arc::Horo(h) => h.point(s),
        }
    }

    fn velocity(&self, s: f64) -> Complex64 {
        match self {
            Arc::Hyper(h) => h.velocity(s),
            Arc::Horo(h) => h.velocity(s),
        }
    }

    /// Hyperbolic length `∫ |γ'| / Im γ`, infinite for ideal ends.
    pub fn length(&self, tol: f64) -> f64 {
        let (a, b) = self.range();
        if !a.is_finite() || !b.is_finite() {
            return f64::INFINITY;
        }
        let (lo, hi, sign) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
        let _ = sign;
        numeric::integrate(|s| self.velocity(s).norm() / self.point(s).im, lo, hi, tol)
    }

    /// Green's-theorem contribution `∫ dx / y` along the arc, in its direction.
    fn green(&self, tol: f64) -> f64 {
        let (a, b) = self.range();
        debug_assert!(a.is_finite() && b.is_finite());
        let (lo, hi, sign) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
        sign * numeric::integrate(|s| self.velocity(s).re / self.point(s).im, lo, hi, tol)
    }
}

/// Hyperbolic length of an arc by quadrature.
pub fn arc_length(arc: &HyperArc, tol: f64) -> f64 {
    Arc::Hyper(*arc).length(tol)
}

/// Area of a region bounded by a closed chain of hypercycle arcs (each arc
/// ends where the next begins). Ideal vertices are truncated by small
/// horocycles; the cusp beyond each horocycle contributes exactly the
/// horocyclic length.
pub fn region_area(chain: &[HyperArc], tol: f64) -> f64 {
    let n = chain.len();
    let mut arcs: Vec<HyperArc> = chain.to_vec();
    let mut pieces: Vec<Arc> = Vec::with_capacity(2 * n);
    let mut cusp_area = 0.0;

    // Euclidean scale of the finite part, for sizing the horocycles.
    let finite: Vec<Complex64> = chain
        .iter()
        .flat_map(|a| [a.start(), a.end()])
        .filter_map(|p| p.as_interior())
        .collect();
    let reals: Vec<f64> = chain
        .iter()
        .flat_map(|a| [a.start(), a.end()])
        .filter_map(|p| match p {
            ModelPoint::Ideal(x) => Some(x),
            _ => None,
        })
        .collect();

    let mut horos: Vec<Option<HoroArc>> = vec![None; n];
    for k in 0..n {
        let vertex = arcs[k].end();
        if !vertex.is_ideal() {
            continue;
        }
        let next = (k + 1) % n;
        let (incoming, outgoing) = (arcs[k], arcs[next]);
        let inside: Box<dyn Fn(Complex64) -> bool> = match vertex {
            ModelPoint::Infinity => {
                let top = finite.iter().map(|z| z.im).fold(1.0, f64::max);
                let h = 100.0 * top;
                Box::new(move |z: Complex64| z.im > h)
            }
            ModelPoint::Ideal(x0) => {
                let mut scale = f64::INFINITY;
                for z in &finite {
                    scale = scale.min((z - x0).norm());
                }
                for &x in &reals {
                    if (x - x0).abs() > 1e-12 {
                        scale = scale.min((x - x0).abs());
                    }
                }
                if !scale.is_finite() {
                    scale = 1.0;
                }
                let diam = 1e-2 * scale;
                let c = Complex64::new(x0, 0.5 * diam);
                Box::new(move |z: Complex64| (z - c).norm() < 0.5 * diam)
            }
            ModelPoint::Interior(_) => unreachable!(),
        };
        let t_in = clip_parameter(&incoming, true, &*inside);
        let t_out = clip_parameter(&outgoing, false, &*inside);
        let p_in = incoming.point(t_in);
        let p_out = outgoing.point(t_out);
        arcs[k] = arcs[k].with_range(arcs[k].range().0, t_in);
        arcs[next] = arcs[next].with_range(t_out, arcs[next].range().1);
        let horo = match vertex {
            ModelPoint::Infinity => HoroArc::AtInfinity {
                height: p_in.im,
                x0: p_in.re,
                x1: p_out.re,
            },
            ModelPoint::Ideal(x0) => {
                let diam = 2.0 * (p_in - Complex64::new(x0, 0.0)).norm_sqr() / (2.0 * p_in.im);
                let c = Complex64::new(x0, 0.5 * diam);
                let unwrap = |z: Complex64| {
                    let mut th = (z - c).arg();
                    if th < -std::f64::consts::FRAC_PI_2 {
                        th += 2.0 * std::f64::consts::PI;
                    }
                    th
                };
                HoroArc::AtReal {
                    base: x0,
                    diam,
                    theta0: unwrap(p_in),
                    theta1: unwrap(p_out),
                }
            }
            ModelPoint::Interior(_) => unreachable!(),
        };
        cusp_area += Arc::Horo(horo).length(tol);
        horos[k] = Some(horo);
    }
    // Ideal start points of the chain are handled as the end of the previous arc.
    for k in 0..n {
        pieces.push(Arc::Hyper(arcs[k]));
        if let Some(h) = horos[k] {
            pieces.push(Arc::Horo(h));
        }
    }
    let green: f64 = pieces.iter().map(|a| a.green(tol)).sum();
    // The cusp tail has the sign of the traversal; for a counterclockwise
    // chain both are positive.
    let signed = green + green.signum() * cusp_area;
    signed.abs()
}

/// Finite parameter at which `arc` crosses the boundary of the horodisk
/// described by `inside`, near its ideal end (`at_end`) or start.
fn clip_parameter(arc: &HyperArc, at_end: bool, inside: &dyn Fn(Complex64) -> bool) -> f64 {
    let (t0, t1) = arc.range();
    let (finite, ideal) = if at_end { (t0, t1) } else { (t1, t0) };
    let dir = ideal.signum();
    let base = if finite.is_finite() { finite } else { 0.0 };
    let mut step = 1.0;
    let mut far = base + dir * step;
    while !inside(arc.point(far)) {
        step *= 2.0;
        far = base + dir * step;
        assert!(step < 1e6, "arc never enters the horodisk");
    }
    let mut near = if finite.is_finite() { finite } else { base };
    if inside(arc.point(near)) {
        // Whole tail inside: walk back until outside.
        let mut s = 1.0;
        loop {
            near = base - dir * s;
            if !inside(arc.point(near)) {
                break;
            }
            s *= 2.0;
        }
    }
    numeric::bisect(
        |t| if inside(arc.point(t)) { 1.0 } else { -1.0 },
        near,
        far,
        1e-14 * (1.0 + far.abs()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn distance_on_axis_is_log_ratio() {
        assert!((distance(c(0.0, 1.0), c(0.0, 5.0)) - 5f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn walk_moves_by_requested_distance() {
        let g = Geodesic::through(c(-1.0, 1.0), c(2.0, 0.5));
        let z = c(-1.0, 1.0);
        let w = g.walk(z, 1.25);
        assert!((distance(z, w) - 1.25).abs() < 1e-12);
        assert!(g.distance_to(w) < 1e-12);
    }

    #[test]
    fn common_perpendicular_of_concentric_circles() {
        let g1 = Geodesic::new(ModelPoint::Ideal(-1.0), ModelPoint::Ideal(1.0));
        let g2 = Geodesic::new(ModelPoint::Ideal(-3.0), ModelPoint::Ideal(3.0));
        let (f1, f2) = g1.common_perpendicular(&g2).unwrap();
        assert!((distance(f1, f2) - 3f64.ln()).abs() < 1e-12);
        assert!(g1
            .common_perpendicular(&Geodesic::new(ModelPoint::Ideal(0.0), ModelPoint::Infinity))
            .is_none());
    }

    #[test]
    fn equidistant_length_matches_cosh_law() {
        let g = Geodesic::new(ModelPoint::Ideal(0.0), ModelPoint::Infinity);
        let r: f64 = 0.7;
        let psi = (1.0 / r.cosh()).asin();
        let p = ModelPoint::Interior(Complex64::from_polar(1.0, psi));
        let q = ModelPoint::Interior(Complex64::from_polar(3.0, psi));
        let arc = HyperArc::equidistant(&g, p, q);
        assert!((arc_length(&arc, 1e-12) - 3f64.ln() * r.cosh()).abs() < 1e-10);
        assert!((arc.offset() - r).abs() < 1e-12);
    }

    #[test]
    fn ideal_triangle_has_area_pi() {
        let v = [
            ModelPoint::Infinity,
            ModelPoint::Ideal(0.0),
            ModelPoint::Ideal(2.0),
        ];
        let chain: Vec<HyperArc> = (0..3)
            .map(|k| HyperArc::segment(v[k], v[(k + 1) % 3]))
            .collect();
        let area = region_area(&chain, 1e-12);
        assert!((area - PI).abs() < 1e-7, "area {area}");
    }

    #[test]
    fn finite_triangle_area_matches_angle_defect() {
        let a = c(0.0, 1.0);
        let b = c(1.0, 1.5);
        let d = c(-0.5, 2.0);
        let pts = [a, b, d];
        let chain: Vec<HyperArc> = (0..3)
            .map(|k| {
                HyperArc::segment(
                    ModelPoint::Interior(pts[k]),
                    ModelPoint::Interior(pts[(k + 1) % 3]),
                )
            })
            .collect();
        let area = region_area(&chain, 1e-13);
        let angle = |p: Complex64, q: Complex64, r: Complex64| {
            let t1 = Geodesic::through(p, q).tangent(p);
            let t2 = Geodesic::through(p, r).tangent(p);
            (t1.re * t2.re + t1.im * t2.im).clamp(-1.0, 1.0).acos()
        };
        let defect = PI - angle(a, b, d) - angle(b, d, a) - angle(d, a, b);
        assert!((area - defect).abs() < 1e-9, "{area} vs {defect}");
    }
}
