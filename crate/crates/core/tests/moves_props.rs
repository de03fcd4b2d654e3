use num_bigint::BigInt;
use proptest::prelude::*;
use surfgeom::farey::{Slope, SurfaceKind};
use surfgeom::moves::{
    apply_move, check_resolution_properties, generate_resolution_xi1, occupancy_intervals,
    predecessor_successor, resolve_bfs, CurveId, ElementaryMove, MoveSequence, MoveType,
    PantsDecomposition, SurfaceSig,
};

fn check_move(p: &PantsDecomposition, m: &ElementaryMove) -> PantsDecomposition {
    let q = apply_move(p, m).unwrap();
    let sig = p.surface();
    assert_eq!(q.curves().len() as i64, sig.complexity());
    assert_eq!(q.pants().len(), sig.pants_count());
    assert!(q.contains(&m.inserted) && !q.contains(&m.removed));
    for c in p.curves().iter().filter(|c| **c != m.removed) {
        assert!(q.contains(c), "{c} lost by {m}");
    }
    assert_eq!(q.support_type(&m.inserted), Some(m.move_type));
    assert_eq!(PantsDecomposition::new(sig, q.pants().to_vec()).unwrap(), q);
    assert_eq!(
        apply_move(&q, &m.inverse()).unwrap(),
        *p,
        "{m} does not invert"
    );
    q
}

/// Every move sequence of length at most `depth` with indices in `-1..=2`.
fn sweep(p: &PantsDecomposition, depth: usize, count: &mut usize) {
    if depth == 0 {
        return;
    }
    let fresh = CurveId::new(format!("y{depth}")).unwrap();
    for c in p.curves() {
        let kind = p.support_type(c).unwrap();
        let wrong = match kind {
            MoveType::TorusType => MoveType::SphereType,
            MoveType::SphereType => MoveType::TorusType,
        };
        assert!(apply_move(p, &ElementaryMove::new(c.clone(), fresh.clone(), wrong, 0)).is_err());
        for n in -1..=2 {
            let q = check_move(p, &ElementaryMove::new(c.clone(), fresh.clone(), kind, n));
            *count += 1;
            sweep(&q, depth - 1, count);
        }
    }
}

#[test]
fn moves_preserve_structure_exhaustively() {
    for (g, n) in [(0, 5), (1, 2), (0, 6), (2, 0)] {
        let sig = SurfaceSig::new(g, n).unwrap();
        let start = PantsDecomposition::standard(sig).unwrap();
        let depth = if sig.complexity() > 2 { 3 } else { 4 };
        let mut count = 0;
        sweep(&start, depth, &mut count);
        assert!(count > 0);
    }
}

#[test]
fn moves_on_absent_or_present_curves_are_rejected() {
    let d = PantsDecomposition::standard(SurfaceSig::new(0, 5).unwrap()).unwrap();
    let (a, b) = (d.curves()[0].clone(), d.curves()[1].clone());
    let ghost = CurveId::new("ghost").unwrap();
    assert!(apply_move(
        &d,
        &ElementaryMove::new(
            ghost.clone(),
            CurveId::new("z").unwrap(),
            MoveType::SphereType,
            0
        )
    )
    .is_err());
    assert!(apply_move(
        &d,
        &ElementaryMove::new(a.clone(), b, MoveType::SphereType, 0)
    )
    .is_err());
    assert!(apply_move(
        &d,
        &ElementaryMove::new(a.clone(), a, MoveType::SphereType, 0)
    )
    .is_err());
}

fn box_slopes(h: i64) -> Vec<Slope> {
    let mut v = vec![Slope::infinity()];
    for q in 1..=h {
        for p in -h..=h {
            if num_integer::Integer::gcd(&p, &q) == 1 {
                v.push(Slope::new(p, q).unwrap());
            }
        }
    }
    v
}

#[test]
fn resolutions_have_the_structural_properties() {
    let slopes = box_slopes(8);
    for sig in [
        SurfaceSig::once_punctured_torus(),
        SurfaceSig::four_holed_sphere(),
    ] {
        for p in &slopes {
            for q in &slopes {
                if p == q {
                    continue;
                }
                let seq = generate_resolution_xi1(sig, p, q).unwrap();
                seq.verify().unwrap();
                let r = check_resolution_properties(&seq, p, q).unwrap();
                assert!(r.structure_ok(), "{p} {q}: {r:?}");
                assert!(r.constants.delta <= 1u32.into(), "{p} {q}");
                assert!(occupancy_intervals(&seq).flagged.is_empty());
                for c in seq.occupancy().keys() {
                    predecessor_successor(&seq, c).unwrap();
                }
            }
        }
    }
}

#[test]
fn reversing_endpoints_reverses_the_resolution() {
    let slopes = box_slopes(9);
    let sig = SurfaceSig::once_punctured_torus();
    for (i, p) in slopes.iter().enumerate().step_by(3) {
        for q in slopes.iter().skip(i + 1).step_by(2) {
            let fwd =
                check_resolution_properties(&generate_resolution_xi1(sig, p, q).unwrap(), p, q)
                    .unwrap();
            let bwd =
                check_resolution_properties(&generate_resolution_xi1(sig, q, p).unwrap(), q, p)
                    .unwrap();
            let mut rev = bwd.vertices.clone();
            rev.reverse();
            assert_eq!(fwd.vertices, rev, "{p} {q}");
            let key = |r: &surfgeom::moves::ResolutionReport| {
                let mut v: Vec<_> = r
                    .deviations
                    .iter()
                    .map(|d| (d.vertex.clone(), d.local.clone(), d.global.clone()))
                    .collect();
                v.sort();
                v
            };
            assert_eq!(key(&fwd), key(&bwd), "{p} {q}");
            assert_eq!(fwd.constants.delta, bwd.constants.delta);
            assert_eq!(fwd.structure_ok(), bwd.structure_ok());
        }
    }
}

#[test]
fn resolutions_survive_the_text_format() {
    let (p, q): (Slope, Slope) = ("-7/3".parse().unwrap(), "19/8".parse().unwrap());
    for sig in [
        SurfaceSig::once_punctured_torus(),
        SurfaceSig::four_holed_sphere(),
    ] {
        let seq = generate_resolution_xi1(sig, &p, &q).unwrap();
        let back = MoveSequence::from_text(&seq.to_text()).unwrap();
        assert_eq!(back, seq);
        assert_eq!(back.endpoints(), Some(&(p.clone(), q.clone())));
    }
}

#[test]
fn breadth_first_search_reaches_shuffled_decompositions() {
    let sig = SurfaceSig::new(0, 6).unwrap();
    let start = PantsDecomposition::standard(sig).unwrap();
    let mut target = start.clone();
    for (k, n) in [(0usize, 1), (2, 0), (1, 1)] {
        let c = target.curves()[k % target.curves().len()].clone();
        let m = ElementaryMove::new(
            c,
            CurveId::new(format!("t{k}")).unwrap(),
            MoveType::SphereType,
            n,
        );
        target = apply_move(&target, &m).unwrap();
    }
    let seq = resolve_bfs(&start, &target, 3)
        .unwrap()
        .expect("within three moves");
    assert!(seq.len() <= 3);
    assert_eq!(seq.states().last().unwrap().shape_key(), target.shape_key());
    seq.verify().unwrap();
}

fn slope() -> impl Strategy<Value = Slope> {
    (-60i64..=60, 0i64..=60).prop_filter_map("nonzero", |(p, q)| Slope::new(p, q).ok())
}

proptest! {
    #[test]
    fn farey_index_inverts_farey_move(alpha in slope(), pred in slope(), toward in slope(), n in -6i64..=6) {
        prop_assume!(alpha != pred && alpha != toward);
        let m = ElementaryMove::farey(SurfaceKind::Torus1, &alpha, n, Some(&pred), &toward);
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        let inserted = m.inserted.as_slope().unwrap();
        prop_assert_eq!(alpha.det(&inserted).magnitude().clone(), 1u32.into());
        let back = ElementaryMove::farey_index(&alpha, &inserted, Some(&pred), &toward).unwrap();
        prop_assert_eq!(back, BigInt::from(n));
    }
}
