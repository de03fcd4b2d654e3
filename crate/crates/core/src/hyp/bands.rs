//! Band decomposition measured in the explicit model.
//!
//! Edge lengths and areas are integrated along the embedded curves; the
//! closed forms in [`HexagonGeometry`] are only used for labels and bounds.

use serde::Serialize;

use super::embed::{hexagon_embed, EmbeddedHexagon, AREA_TOL};
use super::hexagon::{
    middle_edge_upper, pair_index, BandLabel, BandRecord, EdgeLabel, HexagonCase, HexagonGeometry,
    TriangleRecord,
};
use super::model::{arc_length, region_area, Geodesic, HyperArc, ModelPoint};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandMeasurements {
    pub case: HexagonCase,
    pub bands: Vec<BandRecord>,
    pub triangles: Vec<TriangleRecord>,
    /// `|Σ e·κ + area(T) − π|`; in Case 2 each triangle is doubled across the
    /// side opposite the dominant one and the worse of the two is reported.
    pub residual: f64,
}

impl BandMeasurements {
    pub fn edge_bounds_hold(&self, slack: f64) -> bool {
        self.triangles
            .iter()
            .flat_map(|t| t.edges.iter())
            .all(|e| e.within_bounds(slack))
    }

    /// Measured length of an edge, if present.
    pub fn edge_length(&self, label: EdgeLabel) -> Option<f64> {
        self.triangles
            .iter()
            .flat_map(|t| t.edges.iter())
            .find(|e| e.label == label)
            .map(|e| e.length)
    }
}

fn segment(p: ModelPoint, q: ModelPoint) -> HyperArc {
    HyperArc::segment(p, q)
}

fn interior(p: ModelPoint) -> num_complex::Complex64 {
    p.as_interior().expect("finite vertex")
}

/// Embeds `hex` and measures its bands, triangle edges and triangle areas.
pub fn band_measurements(hex: &HexagonGeometry) -> BandMeasurements {
    measure_in(hex, &hexagon_embed(hex))
}

/// Measures bands, triangle edges and triangle areas in `model`.
pub fn measure_in(hex: &HexagonGeometry, model: &EmbeddedHexagon) -> BandMeasurements {
    match hex.case {
        HexagonCase::Case1 => measure_case1(hex, model),
        HexagonCase::Case2 { dominant } => measure_case2(hex, model, dominant),
    }
}

fn measure_case1(hex: &HexagonGeometry, model: &EmbeddedHexagon) -> BandMeasurements {
    // Triangle vertex on A_i, reached from the C_{i,i+1} end.
    let q: Vec<ModelPoint> = (0..3)
        .map(|i| {
            let p = pair_index(i, (i + 1) % 3);
            model.point_on_a(i, p, hex.r[p])
        })
        .collect();

    let sides = [(0, 1), (1, 2), (2, 0)];
    let mut chain = Vec::with_capacity(3);
    let mut lengths = [0.0; 3];
    let mut bands = hex.bands.clone();
    for &(i, j) in &sides {
        let p = pair_index(i, j);
        let edge = HyperArc::equidistant(&model.c_lines[p], q[i], q[j]);
        lengths[p] = arc_length(&edge, AREA_TOL);
        chain.push(edge);

        let band = bands
            .iter_mut()
            .find(|b| b.label == BandLabel::Pair(i.min(j), i.max(j)))
            .unwrap();
        band.area = if hex.r[p] == 0.0 {
            0.0
        } else {
            let (vi, vj) = (model.vertex(i, p), model.vertex(j, p));
            region_area(
                &[
                    HyperArc::equidistant(&model.c_lines[p], vi, vj),
                    segment(vj, q[j]),
                    HyperArc::equidistant(&model.c_lines[p], q[j], q[i]),
                    segment(q[i], vi),
                ],
                AREA_TOL,
            )
        };
        band.core = model.c_length(p);
    }
    let area = region_area(&chain, AREA_TOL);

    let mut tri = hex.triangles[0].clone();
    for e in tri.edges.iter_mut() {
        if let EdgeLabel::Band(i, j) = e.label {
            e.length = lengths[pair_index(i, j)];
        }
    }
    tri.area = area;
    let residual = tri.gauss_bonnet_residual().abs();
    BandMeasurements {
        case: hex.case,
        bands,
        triangles: vec![tri],
        residual,
    }
}

fn measure_case2(hex: &HexagonGeometry, model: &EmbeddedHexagon, i: usize) -> BandMeasurements {
    let j = (i + 1) % 3;
    let k = (i + 2) % 3;
    let (pij, pik, pjk) = (pair_index(i, j), pair_index(i, k), pair_index(j, k));
    let a = hex.a;

    let q_j = model.point_on_a(i, pij, a[j]);
    let q_k = model.point_on_a(i, pik, a[k]);
    let far_j = model.vertex(j, pjk);
    let far_k = model.vertex(k, pjk);

    // Common perpendicular H of A_i and the opposite side.
    let a_line = model.a_lines[i].expect("dominant side is finite");
    let (foot_a, foot_c) = a_line
        .common_perpendicular(&model.c_lines[pjk])
        .expect("dominant side is ultraparallel to its opposite side");
    let h_line = Geodesic::through(foot_a, foot_c);
    let to_h = h_line.to_axis();
    let from_h = to_h.inverse();
    let height = to_h.apply(foot_c).norm();
    let toward_k = to_h.apply(interior(model.vertex(i, pik))).re.signum();

    // Endpoint on the opposite side of the equidistant curve through q, and
    // q's signed offset from H (positive toward the C_ik end of A_i).
    let across = |q: ModelPoint| {
        let zeta = to_h.apply(interior(q));
        let r = ModelPoint::Interior(from_h.apply(zeta / zeta.norm() * height));
        let u = toward_k * (zeta.re / zeta.im).asinh();
        (r, u)
    };
    let (r_j, u_j) = across(q_j);
    let (r_k, u_k) = across(q_k);

    let e_ij = HyperArc::equidistant(&model.c_lines[pij], q_j, far_j);
    let e_ik = HyperArc::equidistant(&model.c_lines[pik], q_k, far_k);
    let mid_j = HyperArc::equidistant(&h_line, r_j, q_j);
    let mid_k = HyperArc::equidistant(&h_line, r_k, q_k);
    let t_j = [
        e_ij,
        HyperArc::equidistant(&model.c_lines[pjk], far_j, r_j),
        mid_j,
    ];
    let t_k = [
        e_ik,
        HyperArc::equidistant(&model.c_lines[pjk], far_k, r_k),
        mid_k,
    ];

    let measured = |edge_label: EdgeLabel| -> f64 {
        match edge_label {
            EdgeLabel::Band(x, y) if pair_index(x, y) == pij => arc_length(&e_ij, AREA_TOL),
            EdgeLabel::Band(_, _) => arc_length(&e_ik, AREA_TOL),
            EdgeLabel::Middle(m) if m == j => arc_length(&mid_j, AREA_TOL),
            EdgeLabel::Middle(_) => arc_length(&mid_k, AREA_TOL),
        }
    };
    let r_mid = a[i] - a[j] - a[k];
    let mut triangles = hex.triangles.clone();
    for (tri, (chain, u, sign)) in triangles
        .iter_mut()
        .zip([(&t_j, u_j, -1.0), (&t_k, u_k, 1.0)])
    {
        for e in tri.edges.iter_mut() {
            e.length = measured(e.label);
            if let EdgeLabel::Middle(_) = e.label {
                e.curvature = sign * u.tanh();
                e.upper = middle_edge_upper(u, r_mid);
            }
        }
        tri.area = region_area(chain.as_slice(), AREA_TOL);
    }
    let residual = triangles
        .iter()
        .map(|t| (2.0 * (t.gauss_bonnet_residual() + t.target) - PI).abs())
        .fold(0.0, f64::max);

    let mut bands = hex.bands.clone();
    for band in bands.iter_mut() {
        match band.label {
            BandLabel::Middle(_) => {
                band.core = super::model::distance(foot_a, foot_c);
                band.area = if r_mid == 0.0 {
                    0.0
                } else {
                    region_area(
                        &[
                            segment(q_j, q_k),
                            HyperArc::equidistant(&h_line, q_k, r_k),
                            HyperArc::equidistant(&model.c_lines[pjk], r_k, r_j),
                            HyperArc::equidistant(&h_line, r_j, q_j),
                        ],
                        AREA_TOL,
                    )
                };
            }
            BandLabel::Pair(x, y) => {
                let p = pair_index(x, y);
                let side = if p == pij { j } else { k };
                let (q, far) = if p == pij { (q_j, far_j) } else { (q_k, far_k) };
                band.core = model.c_length(p);
                band.area = if a[side] == 0.0 {
                    0.0
                } else {
                    let (vi, vs) = (model.vertex(i, p), model.vertex(side, p));
                    region_area(
                        &[
                            HyperArc::equidistant(&model.c_lines[p], vi, vs),
                            segment(vs, far),
                            HyperArc::equidistant(&model.c_lines[p], far, q),
                            segment(q, vi),
                        ],
                        AREA_TOL,
                    )
                };
            }
        }
    }
    BandMeasurements {
        case: hex.case,
        bands,
        triangles,
        residual,
    }
}
