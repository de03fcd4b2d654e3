//! Graphviz export of pants gluing graphs and Farey-graph balls.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::pants::{PantsDecomposition, Slot};
use crate::farey::{farey_distance, Slope};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per pants and per puncture, one edge per curve.
pub fn pants_dot(p: &PantsDecomposition) -> String {
    let mut out = String::from("graph pants {\n");
    for (i, pants) in p.pants().iter().enumerate() {
        let label = format!("({} {} {})", pants[0], pants[1], pants[2]);
        let _ = writeln!(out, "  p{i} [shape=box, label={}];", quote(&label));
    }
    for k in 0..p.surface().punctures {
        let _ = writeln!(
            out,
            "  cusp{k} [shape=point, xlabel={}];",
            quote(&format!("*{k}"))
        );
    }
    for c in p.curves() {
        let ends: Vec<usize> = p
            .pants()
            .iter()
            .enumerate()
            .flat_map(|(i, pants)| {
                pants
                    .iter()
                    .filter(|s| **s == Slot::Curve(c.clone()))
                    .map(move |_| i)
            })
            .collect();
        let _ = writeln!(
            out,
            "  p{} -- p{} [label={}];",
            ends[0],
            ends[1],
            quote(&c.to_string())
        );
    }
    for (i, pants) in p.pants().iter().enumerate() {
        for s in pants {
            if let Slot::Puncture(k) = s {
                let _ = writeln!(out, "  p{i} -- cusp{k} [style=dashed];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Slopes of height at most `max_height` within Farey distance `radius` of
/// `center`, with their Farey edges; edges along `path` are drawn bold red.
pub fn farey_ball_dot(center: &Slope, radius: usize, max_height: u32, path: &[Slope]) -> String {
    let mut vertices = vec![Slope::infinity()];
    let h = i64::from(max_height);
    for q in 1..=h {
        for p in -h..=h {
            if p.gcd(&q) == 1 {
                vertices.push(Slope::new(p, q).expect("nonzero"));
            }
        }
    }
    let mut kept: Vec<Slope> = vertices
        .into_iter()
        .filter(|s| farey_distance(center, s) <= radius)
        .collect();
    for s in path {
        if !kept.contains(s) {
            kept.push(s.clone());
        }
    }
    let on_path: BTreeSet<(String, String)> = path
        .windows(2)
        .flat_map(|w| {
            let (a, b) = (w[0].to_string(), w[1].to_string());
            [(a.clone(), b.clone()), (b, a)]
        })
        .collect();
    let mut out = String::from("graph farey {\n");
    for s in &kept {
        let style = if s == center {
            ", style=filled, fillcolor=lightgray"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {} [label={}{style}];",
            quote(&s.to_string()),
            quote(&s.to_string())
        );
    }
    for (i, a) in kept.iter().enumerate() {
        for b in &kept[i + 1..] {
            if a.det(b).abs() == BigInt::from(1) {
                let attrs = if on_path.contains(&(a.to_string(), b.to_string())) {
                    " [color=red, penwidth=3]"
                } else {
                    ""
                };
                let _ = writeln!(
                    out,
                    "  {} -- {}{attrs};",
                    quote(&a.to_string()),
                    quote(&b.to_string())
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
