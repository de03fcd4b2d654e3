//! Recomputes the annular-coefficient calibration sweep and compares it
//! with the recorded histogram.

use std::collections::BTreeMap;

use surfgeom::farey::{annular_coeff, Slope, ANNULAR_FUZZ};
use surfgeom::oracle::{separating_fan_edges, FareyBox};

const DATA: &str = include_str!("data/annular_calibration.csv");

fn recorded() -> (i64, i64, BTreeMap<u64, u64>) {
    let mut header = BTreeMap::new();
    let mut hist = BTreeMap::new();
    for line in DATA.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            if let Some((k, Ok(v))) = rest
                .split_once(" = ")
                .map(|(k, v)| (k, v.trim().parse::<i64>()))
            {
                header.insert(k.trim().to_string(), v);
            }
        } else if let Some((d, n)) = line.split_once(',') {
            if let (Ok(d), Ok(n)) = (d.parse(), n.parse()) {
                hist.insert(d, n);
            }
        }
    }
    (header["height"], header["fan_bound"], hist)
}

#[test]
fn sweep_matches_recorded_histogram() {
    let (height, fan_bound, expected) = recorded();
    let bx = FareyBox::new(height);
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for &a in &bx.slopes {
        let alpha = Slope::new(a.0, a.1).unwrap();
        for &b in &bx.slopes {
            for &c in &bx.slopes {
                if b == a || c == a || b == c {
                    continue;
                }
                let coarse = annular_coeff(
                    &alpha,
                    &Slope::new(b.0, b.1).unwrap(),
                    &Slope::new(c.0, c.1).unwrap(),
                )
                .unwrap();
                let edges = separating_fan_edges(a, b, c, fan_bound) as u64;
                let coarse = u64::try_from(coarse).unwrap();
                *hist.entry(coarse.abs_diff(edges)).or_default() += 1;
            }
        }
    }
    println!("{hist:?}");
    assert_eq!(hist, expected);
    let worst = *hist.keys().max().unwrap();
    assert!(worst <= u64::from(ANNULAR_FUZZ));
    assert!(worst <= 2);
}
