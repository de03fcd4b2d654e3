//! Explicit construction of a right-angled hexagon in the upper half-plane.
//!
//! The construction only uses the three alternating lengths: the lines
//! carrying the `C` sides are three pairwise ultraparallel geodesics at
//! prescribed mutual distances, placed by solving inversive-distance
//! equations; the `A` sides are their common perpendiculars. Nothing here
//! uses the hexagon side relation, so measured lengths are an independent
//! check of [`super::hexagon::hexagon_solve`].

use super::hexagon::{pair_index, pair_sides, HexagonGeometry};
use super::model::{point_distance, region_area, Geodesic, HyperArc, ModelPoint};

/// Quadrature tolerance for integrated quantities.
pub const AREA_TOL: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedHexagon {
    pub a: [f64; 3],
    /// Vertices in boundary order: `A1∩C13, A1∩C12, A2∩C12, A2∩C23, A3∩C23,
    /// A3∩C13`.
    pub vertices: [ModelPoint; 6],
    /// Lines carrying `C12, C23, C13`.
    pub c_lines: [Geodesic; 3],
    /// Lines carrying `A1, A2, A3` (`None` for an ideal side).
    pub a_lines: [Option<Geodesic>; 3],
    /// Measured side lengths in boundary order `A1, C12, A2, C23, A3, C13`.
    pub side_lengths: [f64; 6],
    /// Largest deviation from π/2 over finite vertices.
    pub max_angle_error: f64,
    /// Area by boundary quadrature.
    pub area: f64,
}

/// `(side, pair)` of each vertex in boundary order.
const VERTEX_LABELS: [(usize, usize); 6] = [(0, 2), (0, 0), (1, 0), (1, 1), (2, 1), (2, 2)];

fn vertex_slot(side: usize, pair: usize) -> usize {
    VERTEX_LABELS
        .iter()
        .position(|&l| l == (side, pair))
        .expect("side and pair are adjacent")
}

struct Construction {
    vertices: [ModelPoint; 6],
    c_lines: [Geodesic; 3],
    a_lines: [Option<Geodesic>; 3],
}

fn ideal(x: f64) -> ModelPoint {
    ModelPoint::Ideal(x)
}

fn perpendicular(g: &Geodesic, h: &Geodesic) -> (ModelPoint, ModelPoint, Geodesic) {
    let (p, q) = g
        .common_perpendicular(h)
        .expect("C lines are ultraparallel");
    (
        ModelPoint::Interior(p),
        ModelPoint::Interior(q),
        Geodesic::through(p, q),
    )
}

/// All sides positive: `C13` and `C12` are the concentric semicircles of
/// radius 1 and `e^{a1}`, so `A1` runs up the imaginary axis.
fn construct_generic(a: [f64; 3]) -> Construction {
    let big = a[0].exp();
    let radius = (big * big - 1.0) / (2.0 * (big * a[1].cosh() + a[2].cosh()));
    let power = 1.0 + 2.0 * radius * a[2].cosh();
    let centre = (power + radius * radius).sqrt();

    let c13 = Geodesic::new(ideal(-1.0), ideal(1.0));
    let c12 = Geodesic::new(ideal(-big), ideal(big));
    let c23 = Geodesic::new(ideal(centre - radius), ideal(centre + radius));

    let (v12_2, v23_2, a2) = perpendicular(&c12, &c23);
    let (v23_3, v13_3, a3) = perpendicular(&c23, &c13);
    let a1 = Geodesic::new(ideal(0.0), ModelPoint::Infinity);
    Construction {
        vertices: [
            ModelPoint::interior(0.0, 1.0),
            ModelPoint::interior(0.0, big),
            v12_2,
            v23_2,
            v23_3,
            v13_3,
        ],
        c_lines: [c12, c23, c13],
        a_lines: [Some(a1), Some(a2), Some(a3)],
    }
}

/// `a1 = 0`: `C13` and `C12` are vertical lines meeting at ∞.
fn construct_cusped(a: [f64; 3]) -> Construction {
    let centre = a[2].cosh();
    let width = centre + a[1].cosh();
    let c13 = Geodesic::new(ideal(0.0), ModelPoint::Infinity);
    let c12 = Geodesic::new(ideal(width), ModelPoint::Infinity);
    let c23 = Geodesic::new(ideal(centre - 1.0), ideal(centre + 1.0));

    let (v12_2, v23_2, a2) = if a[1] > 0.0 {
        let (p, q, g) = perpendicular(&c12, &c23);
        (p, q, Some(g))
    } else {
        (ideal(width), ideal(width), None)
    };
    let (v23_3, v13_3, a3) = if a[2] > 0.0 {
        let (p, q, g) = perpendicular(&c23, &c13);
        (p, q, Some(g))
    } else {
        (ideal(0.0), ideal(0.0), None)
    };
    Construction {
        vertices: [
            ModelPoint::Infinity,
            ModelPoint::Infinity,
            v12_2,
            v23_2,
            v23_3,
            v13_3,
        ],
        c_lines: [c12, c23, c13],
        a_lines: [None, a2, a3],
    }
}

/// Builds the hexagon with alternating sides `a` in the upper half-plane.
pub fn embed_sides(a: [f64; 3]) -> EmbeddedHexagon {
    // Rotate labels so that an ideal side, if any, comes first; otherwise the
    // longest side, which keeps the far vertices best conditioned.
    let longest = (0..3).fold(0, |m, i| if a[i] > a[m] { i } else { m });
    let shift = (0..3).find(|&i| a[i] == 0.0).unwrap_or(longest);
    let rotated = [a[shift], a[(shift + 1) % 3], a[(shift + 2) % 3]];
    let built = if rotated[0] == 0.0 {
        construct_cusped(rotated)
    } else {
        construct_generic(rotated)
    };

    let orig_side = |s: usize| (s + shift) % 3;
    let orig_pair = |p: usize| {
        let (x, y) = pair_sides(p);
        pair_index(orig_side(x), orig_side(y))
    };
    let mut vertices = [ModelPoint::Infinity; 6];
    for (slot, &(s, p)) in VERTEX_LABELS.iter().enumerate() {
        vertices[vertex_slot(orig_side(s), orig_pair(p))] = built.vertices[slot];
    }
    let mut c_lines = built.c_lines;
    let mut a_lines = built.a_lines;
    for p in 0..3 {
        c_lines[orig_pair(p)] = built.c_lines[p];
        a_lines[orig_side(p)] = built.a_lines[p];
    }

    let mut side_lengths = [0.0; 6];
    for (k, len) in side_lengths.iter_mut().enumerate() {
        let (p, q) = (vertices[k], vertices[(k + 1) % 6]);
        *len = if p == q && p.is_ideal() {
            0.0
        } else {
            point_distance(p, q)
        };
    }

    // Right angles at finite vertices.
    let mut max_angle_error: f64 = 0.0;
    for (slot, &(s, p)) in VERTEX_LABELS.iter().enumerate() {
        if let (ModelPoint::Interior(z), Some(al)) = (vertices[slot], a_lines[s]) {
            let t1 = al.tangent(z);
            let t2 = c_lines[p].tangent(z);
            let cos = (t1.re * t2.re + t1.im * t2.im).abs();
            max_angle_error = max_angle_error.max(cos.asin());
        }
    }

    let mut chain = Vec::with_capacity(6);
    for k in 0..6 {
        let (p, q) = (vertices[k], vertices[(k + 1) % 6]);
        if p == q && p.is_ideal() {
            continue;
        }
        chain.push(HyperArc::segment(p, q));
    }
    let area = region_area(&chain, AREA_TOL);

    EmbeddedHexagon {
        a,
        vertices,
        c_lines,
        a_lines,
        side_lengths,
        max_angle_error,
        area,
    }
}

/// Explicit upper-half-plane model of a solved hexagon.
pub fn hexagon_embed(hex: &HexagonGeometry) -> EmbeddedHexagon {
    embed_sides(hex.a)
}

impl EmbeddedHexagon {
    /// Vertex where `A_side` meets the `C` side with index `pair`.
    pub fn vertex(&self, side: usize, pair: usize) -> ModelPoint {
        self.vertices[vertex_slot(side, pair)]
    }

    /// Measured length of `A_i`.
    pub fn a_length(&self, i: usize) -> f64 {
        self.side_lengths[2 * i]
    }

    /// Measured length of the `C` side with index `pair`.
    pub fn c_length(&self, pair: usize) -> f64 {
        // Boundary order A1, C12, A2, C23, A3, C13.
        self.side_lengths[[1, 3, 5][pair]]
    }

    /// Point on `A_side` at distance `t` from its `C_pair` end.
    pub fn point_on_a(&self, side: usize, pair: usize, t: f64) -> ModelPoint {
        let from = self.vertex(side, pair);
        let other_pair = (0..3)
            .find(|&p| {
                p != pair && {
                    let (x, y) = pair_sides(p);
                    x == side || y == side
                }
            })
            .expect("each A side meets two C sides");
        let to = self.vertex(side, other_pair);
        match (from, to) {
            (ModelPoint::Interior(z), ModelPoint::Interior(w)) => {
                if t == 0.0 {
                    from
                } else {
                    ModelPoint::Interior(Geodesic::through(z, w).walk(z, t))
                }
            }
            _ => from,
        }
    }
}
