//! Right-angled hexagons and their band decompositions.
//!
//! Alternating sides `A_1, A_2, A_3` have lengths `a = [a1, a2, a3]`; the
//! remaining sides `C_ij` are the common perpendiculars of `A_i` and `A_j`,
//! stored as `c = [c12, c23, c13]`. A zero `a_i` is an ideal vertex.
//!
//! When every triangle inequality `a_i <= a_j + a_k` holds (Case 1) the
//! hexagon splits into three bands `B_ij`, each the `r_ij`-neighbourhood of
//! `C_ij`, and a central triangle `T` bounded by curves of constant curvature
//! `tanh r_ij` meeting at angle 0. When some `a_i > a_j + a_k` (Case 2) the
//! middle of `A_i` gets its own band `B_ii`, foliated by curves equidistant
//! from the common perpendicular `H_i` of `A_i` and the opposite side, and the
//! complement is two triangles with angles `0, 0, π/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};

use super::constants::{horoball_gap, tripod_lower_const};

/// Index into `c` of the side joining `A_i` and `A_j` (0-based).
pub fn pair_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (1, 2) => 1,
        (0, 2) => 2,
        _ => panic!("invalid side pair ({i}, {j})"),
    }
}

/// The two `A` sides joined by `C` side `p`.
pub fn pair_sides(p: usize) -> (usize, usize) {
    [(0, 1), (1, 2), (0, 2)][p]
}

/// The `A` side opposite to `C` side `p`.
pub fn opposite_side(p: usize) -> usize {
    [2, 0, 1][p]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HexagonCase {
    Case1,
    /// `a[dominant] > sum of the other two` (0-based index).
    Case2 {
        dominant: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BandLabel {
    /// Neighbourhood of `C_ij` (0-based sides).
    Pair(usize, usize),
    /// Middle band of the dominant side in Case 2.
    Middle(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandRecord {
    pub label: BandLabel,
    /// Width `r` of the band (`r_ii` for the middle band).
    pub r: f64,
    /// Length of the core: `c_ij`, or `h_i` for the middle band.
    pub core: f64,
    /// Curvature of the outer edge, `tanh r` (pair bands only).
    pub kappa: f64,
    pub area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeLabel {
    /// `E_ij`, the triangle edge on band `B_ij`.
    Band(usize, usize),
    /// `E_{ii,m}`, the edge on the middle band inside triangle `T_m`.
    Middle(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeRecord {
    pub label: EdgeLabel,
    pub length: f64,
    /// Geodesic curvature, positive when the curvature vector points out of
    /// the triangle.
    pub curvature: f64,
    /// Whether the length bounds apply (curved edges only).
    pub bounded: bool,
    pub lower: f64,
    pub upper: f64,
}

impl EdgeRecord {
    pub fn within_bounds(&self, slack: f64) -> bool {
        !self.bounded || (self.length >= self.lower - slack && self.length <= self.upper + slack)
    }
}

/// A complementary triangle of the band decomposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleRecord {
    pub edges: Vec<EdgeRecord>,
    pub area: f64,
    /// Gauss–Bonnet target `Σ e·κ + area`: π for `T`, π/2 for each `T_m`.
    pub target: f64,
}

impl TriangleRecord {
    /// `Σ e·κ + area − target` over edges with nonzero curvature.
    pub fn gauss_bonnet_residual(&self) -> f64 {
        let s: f64 = self
            .edges
            .iter()
            .filter(|e| e.curvature != 0.0)
            .map(|e| e.length * e.curvature)
            .sum();
        s + self.area - self.target
    }
}

/// Data of the Case-2 middle band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MiddleBand {
    pub dominant: usize,
    /// Length of the common perpendicular `H_i`.
    pub h: f64,
    /// Signed positions of the two ends of `J_ii` from the foot of `H_i`,
    /// positive toward `C_ik` (`k = i + 2 mod 3`): `[u_j, u_k]`.
    pub u: [f64; 2],
    /// Distance along `A_i` from its `C_ij` end to the foot of `H_i`.
    pub foot: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HexagonGeometry {
    pub a: [f64; 3],
    pub c: [f64; 3],
    pub case: HexagonCase,
    /// `r_ij` indexed like `c`.
    pub r: [f64; 3],
    pub bands: Vec<BandRecord>,
    pub middle: Option<MiddleBand>,
    /// Closed-form triangle data (one triangle in Case 1, two in Case 2).
    pub triangles: Vec<TriangleRecord>,
}

/// `cosh c_ij = (cosh a_k + cosh a_i cosh a_j) / (sinh a_i sinh a_j)`.
fn perpendicular_length(ai: f64, aj: f64, ak: f64) -> f64 {
    let den = ai.sinh() * aj.sinh();
    if den == 0.0 {
        return f64::INFINITY;
    }
    let ch = (ak.cosh() + ai.cosh() * aj.cosh()) / den;
    ch.acosh()
}

fn band_edge(i: usize, j: usize, core: f64, r: f64) -> EdgeRecord {
    let kappa = r.tanh();
    let length = if r == 0.0 { core } else { core * r.cosh() };
    EdgeRecord {
        label: EdgeLabel::Band(i, j),
        length,
        curvature: kappa,
        bounded: r > 0.0,
        lower: tripod_lower_const(),
        upper: if r > 0.0 { PI / kappa } else { f64::INFINITY },
    }
}

/// Upper bound for a middle-band edge at signed offset `u`.
pub fn middle_edge_upper(u: f64, r_mid: f64) -> f64 {
    let by_offset = if u == 0.0 {
        f64::INFINITY
    } else {
        FRAC_PI_2 / u.abs().tanh()
    };
    let by_width = if r_mid == 0.0 {
        f64::INFINITY
    } else {
        FRAC_PI_2 / (0.5 * r_mid).tanh()
    };
    by_offset.min(by_width)
}

pub fn hexagon_solve(a1: f64, a2: f64, a3: f64) -> Result<HexagonGeometry> {
    let a = [a1, a2, a3];
    if a.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(Error::domain(format!(
            "hexagon sides must be finite and nonnegative, got {a:?}"
        )));
    }
    let mut c = [0.0; 3];
    for (p, cp) in c.iter_mut().enumerate() {
        let (i, j) = pair_sides(p);
        *cp = perpendicular_length(a[i], a[j], a[opposite_side(p)]);
    }
    let dominant = (0..3).find(|&i| a[i] > a[(i + 1) % 3] + a[(i + 2) % 3]);
    match dominant {
        None => Ok(solve_case1(a, c)),
        Some(i) => Ok(solve_case2(a, c, i)),
    }
}

fn solve_case1(a: [f64; 3], c: [f64; 3]) -> HexagonGeometry {
    let mut r = [0.0; 3];
    let mut bands = Vec::with_capacity(3);
    let mut edges = Vec::with_capacity(3);
    for p in 0..3 {
        let (i, j) = pair_sides(p);
        let k = opposite_side(p);
        r[p] = (0.5 * (a[i] + a[j] - a[k])).max(0.0);
        let area = if r[p] == 0.0 { 0.0 } else { c[p] * r[p].sinh() };
        bands.push(BandRecord {
            label: BandLabel::Pair(i, j),
            r: r[p],
            core: c[p],
            kappa: r[p].tanh(),
            area,
        });
        edges.push(band_edge(i, j, c[p], r[p]));
    }
    let flux: f64 = edges
        .iter()
        .filter(|e| e.curvature != 0.0)
        .map(|e| e.length * e.curvature)
        .sum();
    HexagonGeometry {
        a,
        c,
        case: HexagonCase::Case1,
        r,
        bands,
        middle: None,
        triangles: vec![TriangleRecord {
            edges,
            area: PI - flux,
            target: PI,
        }],
    }
}

fn solve_case2(a: [f64; 3], c: [f64; 3], i: usize) -> HexagonGeometry {
    let j = (i + 1) % 3;
    let k = (i + 2) % 3;
    let (pij, pik, pjk) = (pair_index(i, j), pair_index(i, k), pair_index(j, k));
    let mut r = [0.0; 3];
    r[pij] = a[j];
    r[pik] = a[k];
    r[pjk] = 0.0;
    let r_mid = a[i] - a[j] - a[k];

    // Distance from A_i to the opposite side C_jk and the foot position, from
    // the two right-angled pentagons cut off by H_i.
    let (ca, cb, ci) = (a[j].cosh(), a[k].cosh(), a[i].cosh());
    let sinh_h = (ca * ca + cb * cb + 2.0 * ca * cb * ci).sqrt() / a[i].sinh();
    let h = sinh_h.asinh();
    let foot = (ca / sinh_h).asinh();
    let u = [a[j] - foot, a[i] - a[k] - foot];

    let bands = vec![
        BandRecord {
            label: BandLabel::Pair(i.min(j), i.max(j)),
            r: a[j],
            core: c[pij],
            kappa: a[j].tanh(),
            area: if a[j] == 0.0 {
                0.0
            } else {
                c[pij] * a[j].sinh()
            },
        },
        BandRecord {
            label: BandLabel::Pair(i.min(k), i.max(k)),
            r: a[k],
            core: c[pik],
            kappa: a[k].tanh(),
            area: if a[k] == 0.0 {
                0.0
            } else {
                c[pik] * a[k].sinh()
            },
        },
        BandRecord {
            label: BandLabel::Middle(i),
            r: r_mid,
            core: h,
            kappa: f64::NAN,
            area: h * (u[1].sinh() - u[0].sinh()),
        },
    ];

    let middle_edge = |m: usize, u: f64, outward: f64| EdgeRecord {
        label: EdgeLabel::Middle(m),
        length: h * u.cosh(),
        curvature: outward,
        bounded: true,
        lower: horoball_gap(),
        upper: middle_edge_upper(u, r_mid),
    };
    let tri = |side: usize, p: usize, mid: EdgeRecord| {
        let e = band_edge(i.min(side), i.max(side), c[p], a[side]);
        let flux: f64 = [e, mid]
            .iter()
            .filter(|x| x.curvature != 0.0)
            .map(|x| x.length * x.curvature)
            .sum();
        TriangleRecord {
            edges: vec![e, mid],
            area: FRAC_PI_2 - flux,
            target: FRAC_PI_2,
        }
    };
    let triangles = vec![
        tri(j, pij, middle_edge(j, u[0], -u[0].tanh())),
        tri(k, pik, middle_edge(k, u[1], u[1].tanh())),
    ];
    HexagonGeometry {
        a,
        c,
        case: HexagonCase::Case2 { dominant: i },
        r,
        bands,
        middle: Some(MiddleBand {
            dominant: i,
            h,
            u,
            foot,
        }),
        triangles,
    }
}

impl HexagonGeometry {
    /// Every bounded edge lies within its stated bounds.
    pub fn edge_bounds_hold(&self, slack: f64) -> bool {
        self.triangles
            .iter()
            .flat_map(|t| t.edges.iter())
            .all(|e| e.within_bounds(slack))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilateral_perpendiculars() {
        let h = hexagon_solve(1.0, 1.0, 1.0).unwrap();
        let expect = ((1f64.cosh() + 1f64.cosh().powi(2)) / 1f64.sinh().powi(2)).acosh();
        for c in h.c {
            assert!((c - expect).abs() < 1e-14);
            assert!((c - 1.704_912_832_358_014).abs() < 1e-12);
        }
        assert_eq!(h.case, HexagonCase::Case1);
        for r in h.r {
            assert!((r - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn ideal_triangle_limit() {
        let h = hexagon_solve(0.0, 0.0, 0.0).unwrap();
        assert_eq!(h.case, HexagonCase::Case1);
        assert_eq!(h.r, [0.0; 3]);
        assert!(h.c.iter().all(|c| c.is_infinite()));
        assert!((h.triangles[0].area - PI).abs() < 1e-15);
    }

    #[test]
    fn dominant_side_gives_case2() {
        let h = hexagon_solve(5.0, 1.0, 1.0).unwrap();
        assert_eq!(h.case, HexagonCase::Case2 { dominant: 0 });
        let band = h
            .bands
            .iter()
            .find(|b| b.label == BandLabel::Middle(0))
            .unwrap();
        assert!((band.r - 3.0).abs() < 1e-15);
        let m = h.middle.unwrap();
        assert!((m.u[1] - m.u[0] - 3.0).abs() < 1e-12);
        // Symmetric hexagon: the foot of H_1 is the midpoint of A_1.
        assert!((m.foot - 2.5).abs() < 1e-12);
    }

    #[test]
    fn triangle_inequality_equality_is_case1() {
        let h = hexagon_solve(2.0, 1.0, 1.0).unwrap();
        assert_eq!(h.case, HexagonCase::Case1);
        assert_eq!(h.r[pair_index(1, 2)], 0.0);
    }

    #[test]
    fn rejects_negative_sides() {
        assert!(matches!(
            hexagon_solve(-0.1, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(hexagon_solve(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn r_values_partition_sides_in_case1() {
        let h = hexagon_solve(1.3, 2.1, 1.7).unwrap();
        for i in 0..3 {
            let others: f64 = (0..3)
                .filter(|&j| j != i)
                .map(|j| h.r[pair_index(i, j)])
                .sum();
            assert!((others - h.a[i]).abs() < 1e-14);
        }
        assert!(h.edge_bounds_hold(0.0));
    }

    #[test]
    fn case2_pentagon_relation() {
        // cosh h = sinh c_ij · sinh a_j for the pentagon containing A_j.
        let h = hexagon_solve(4.0, 1.2, 0.7).unwrap();
        let m = h.middle.unwrap();
        let lhs = m.h.cosh();
        let rhs = h.c[pair_index(0, 1)].sinh() * 1.2f64.sinh();
        assert!((lhs - rhs).abs() < 1e-10 * lhs);
        assert!(h.edge_bounds_hold(0.0));
    }
}
