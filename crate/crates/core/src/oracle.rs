//! Independent verification routes, compiled only with the `oracles`
//! feature. Each one reaches a quantity by a construction unrelated to the
//! closed form or algorithm it checks: explicit Lorentz matrices,
//! point-by-point hyperbolic geometry, exhaustive graph search and plain
//! integer arithmetic.

use std::collections::{HashMap, VecDeque};

/// Minkowski form `−x0·y0 + x1·y1 + x2·y2 + x3·y3` on the hyperboloid model
/// of hyperbolic 3-space.
fn minkowski(x: &[f64; 4], y: &[f64; 4]) -> f64 {
    -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]
}

type Mat4 = [[f64; 4]; 4];

fn mat_vec(m: &Mat4, v: &[f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, row) in m.iter().enumerate() {
        out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

/// Loxodromic isometry with axis the `x1`-geodesic through the base point:
/// a boost of rapidity `ell` in the `(x0, x1)` plane composed with a
/// rotation by `theta` in the `(x2, x3)` plane.
pub fn loxodromic(ell: f64, theta: f64) -> Mat4 {
    let (ch, sh) = (ell.cosh(), ell.sinh());
    let (c, s) = (theta.cos(), theta.sin());
    [
        [ch, sh, 0.0, 0.0],
        [sh, ch, 0.0, 0.0],
        [0.0, 0.0, c, -s],
        [0.0, 0.0, s, c],
    ]
}

/// Point at distance `r` from the axis, above the base point.
pub fn off_axis_point(r: f64) -> [f64; 4] {
    [r.cosh(), 0.0, r.sinh(), 0.0]
}

pub fn hyperboloid_distance(x: &[f64; 4], y: &[f64; 4]) -> f64 {
    let c = -minkowski(x, y);
    // acosh(c) computed as 2·asinh(sqrt((c − 1)/2)) keeps precision near c = 1.
    2.0 * ((c - 1.0).max(0.0) / 2.0).sqrt().asinh()
}

/// Displacement of a point at distance `r` from the axis of a pure
/// translation of length `ell`, by applying the matrix.
pub fn translation_displacement(ell: f64, r: f64) -> f64 {
    let p = off_axis_point(r);
    let q = mat_vec(&loxodromic(ell, 0.0), &p);
    // For large displacements the hyperboloid coordinates carry the error;
    // use the chordal form |p − q|² = 4·sinh²(d/2) instead of the raw form.
    let diff = [q[0] - p[0], q[1] - p[1], q[2] - p[2], q[3] - p[3]];
    let chord2 = minkowski(&diff, &diff);
    2.0 * (chord2.max(0.0).sqrt() / 2.0).asinh()
}

/// Length of the helix `s ↦ A(s·ell, s·theta)·p`, `s ∈ [0, 1]`, on the
/// surface at distance `t` from the axis, by Simpson quadrature of the
/// Minkowski speed. The speed is measured through the infinitesimal
/// generator applied to the moving point.
pub fn helix_length(ell: f64, theta: f64, t: f64, panels: usize) -> f64 {
    let p = off_axis_point(t);
    let generator: Mat4 = [
        [0.0, ell, 0.0, 0.0],
        [ell, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -theta],
        [0.0, 0.0, theta, 0.0],
    ];
    let speed = |s: f64| {
        let x = mat_vec(&loxodromic(s * ell, s * theta), &p);
        let v = mat_vec(&generator, &x);
        minkowski(&v, &v).max(0.0).sqrt()
    };
    let n = panels.max(2) & !1;
    let h = 1.0 / n as f64;
    let mut acc = speed(0.0) + speed(1.0);
    for k in 1..n {
        acc += speed(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

/// Distance in the upper half-plane.
fn uhp_distance(x1: f64, y1: f64, x2: f64, y2: f64) -> f64 {
    let num = (x1 - x2).powi(2) + (y1 - y2).powi(2);
    2.0 * (num.sqrt() / (2.0 * (y1 * y2).sqrt())).asinh()
}

/// Projection onto the imaginary axis of the geodesic ray tangent to the
/// `w`-equidistant curve, built point by point: walk distance `w` along the
/// unit circle from `i`, take the geodesic orthogonal to that circle there,
/// follow it to its ideal end `ξ` and project `ξ` to `i·ξ`.
pub fn collar_projection_construction(w: f64) -> f64 {
    // Point at distance w from i along the unit circle.
    let (x, y) = (w.tanh(), 1.0 / w.cosh());
    // Circle centred on the real axis through (x, y) meeting the unit circle
    // orthogonally: c² = 1 + R².
    let c = (x * x + y * y + 1.0) / (2.0 * x);
    let r = (c * c - 1.0).sqrt();
    let xi = c + r;
    uhp_distance(0.0, 1.0, 0.0, xi)
}

/// Distance from the centre of the ideal triangle `0, 1, ∞` to the horoball
/// of Euclidean diameter 1 at `0`, minimized over the horocycle by golden
/// section on its angle parameter.
pub fn horoball_gap_construction() -> f64 {
    let (cx, cy) = (0.5, 3f64.sqrt() / 2.0);
    let on_horocycle = |phi: f64| (0.5 * phi.sin(), 0.5 - 0.5 * phi.cos());
    let f = |phi: f64| {
        let (x, y) = on_horocycle(phi);
        uhp_distance(cx, cy, x, y)
    };
    let (mut a, mut b) = (0.1, std::f64::consts::PI);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let (c, d) = (b - g * (b - a), a + g * (b - a));
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    f(0.5 * (a + b))
}

/// Euclidean algorithm on machine integers.
pub fn euclid_cf(p: i128, q: i128) -> Vec<i128> {
    assert!(q > 0, "denominator must be positive");
    let (mut a, mut b) = (p, q);
    let mut out = Vec::new();
    while b != 0 {
        let t = a.div_euclid(b);
        out.push(t);
        let r = a - t * b;
        a = b;
        b = r;
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Slopes `r/s` with `|p·s − q·r| = 1` and `0 ≤ s ≤ bound`, by scanning
/// `s` and solving for `r` (all integers in range for `∞`).
fn neighbours((p, q): (i64, i64), bound: i64) -> Vec<(i64, i64)> {
    if q == 0 {
        return (-bound..=bound).map(|r| (r, 1)).collect();
    }
    let mut out = Vec::new();
    for s in 0..=bound {
        for sign in [1, -1] {
            let num = p * s - sign;
            if num % q != 0 {
                continue;
            }
            let w = if s == 0 { (1, 0) } else { (num / q, s) };
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

/// The Farey graph restricted to slopes with `|p|, |q| ≤ bound`, with
/// all-pairs distances by breadth-first search.
pub struct FareyBox {
    pub slopes: Vec<(i64, i64)>,
    index: HashMap<(i64, i64), usize>,
    adjacency: Vec<Vec<usize>>,
}

impl FareyBox {
    pub fn new(bound: i64) -> FareyBox {
        let mut slopes = vec![(1, 0)];
        for q in 1..=bound {
            for p in -bound..=bound {
                if gcd(p, q) == 1 {
                    slopes.push((p, q));
                }
            }
        }
        let index: HashMap<(i64, i64), usize> =
            slopes.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let adjacency = slopes
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                neighbours(a, bound)
                    .into_iter()
                    .filter_map(|w| index.get(&w).copied())
                    .filter(|&j| j != i)
                    .collect()
            })
            .collect();
        FareyBox {
            slopes,
            index,
            adjacency,
        }
    }

    pub fn index_of(&self, p: i64, q: i64) -> Option<usize> {
        self.index.get(&(p, q)).copied()
    }

    /// Distances from one slope to every slope in the box.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.slopes.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Exact sign of `x·φ + y` for the golden mean `φ = (1 + √5)/2`.
fn golden_sign(x: i128, y: i128) -> i32 {
    // 2(xφ + y) = u + x√5 with u = 2y + x.
    let u = 2 * y + x;
    let (su, sx) = (u.signum() as i32, x.signum() as i32);
    if sx == 0 || su == sx {
        su
    } else if su == 0 {
        sx
    } else if u * u > 5 * x * x {
        su
    } else {
        sx
    }
}

/// `⌊(aφ + b)/(cφ + d)⌋` for the golden mean, by exact quadratic-surd
/// comparisons.
pub fn golden_mobius_floor(a: i128, b: i128, c: i128, d: i128) -> i128 {
    let den = golden_sign(c, d);
    assert!(den != 0, "pole at the golden mean");
    // n ≤ value ⇔ sign((a − nc)φ + (b − nd)) agrees with the denominator.
    let ge = |n: i128| {
        let s = golden_sign(a - n * c, b - n * d);
        s == 0 || s == den
    };
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut n = ((a as f64 * phi + b as f64) / (c as f64 * phi + d as f64)).floor() as i128;
    while !ge(n) {
        n -= 1;
    }
    while ge(n + 1) {
        n += 1;
    }
    n
}

/// Number of Farey edges `(α, w)` that separate `β` from `γ`, with the
/// neighbours `w` of `α` found by scanning `r/s` with `|s| ≤ s_max`.
pub fn separating_fan_edges(
    alpha: (i64, i64),
    beta: (i64, i64),
    gamma: (i64, i64),
    s_max: i64,
) -> usize {
    let det = |u: (i64, i64), v: (i64, i64)| {
        (u.0 as i128) * (v.1 as i128) - (u.1 as i128) * (v.0 as i128)
    };
    let side = |u: (i64, i64), v: (i64, i64), x: (i64, i64)| (det(u, x) * det(x, v)).signum();
    neighbours(alpha, s_max)
        .into_iter()
        .filter(|&w| w != beta && w != gamma && side(alpha, w, beta) != side(alpha, w, gamma))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_floor_examples() {
        assert_eq!(golden_mobius_floor(1, 0, 0, 1), 1);
        assert_eq!(golden_mobius_floor(0, 1, 1, 0), 0);
        assert_eq!(golden_mobius_floor(-1, 0, 0, 1), -2);
        assert_eq!(golden_mobius_floor(5, -8, 0, 1), 0);
    }

    #[test]
    fn box_distances() {
        let b = FareyBox::new(5);
        let inf = b.index_of(1, 0).unwrap();
        let d = b.distances_from(inf);
        assert_eq!(d[b.index_of(0, 1).unwrap()], 1);
        assert_eq!(d[b.index_of(5, 2).unwrap()], 2);
        // 2/5 = [0; 2, 2]: ∞, 0, 1/2, 2/5.
        assert_eq!(d[b.index_of(2, 5).unwrap()], 3);
    }

    #[test]
    fn fan_edges_about_infinity() {
        // Integers strictly between 1/2 and 9/2 (as edges ∞–k): 1, 2, 3, 4.
        assert_eq!(separating_fan_edges((1, 0), (1, 2), (9, 2), 20), 4);
    }
}
