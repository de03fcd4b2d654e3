use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use surfgeom::farey::{
    coefficient_spectrum, farey_distance, farey_geodesic, CfStream, EndInvariant, Slope,
};
use surfgeom::hyp::{band_measurements, collar_profile, hexagon_solve, max_twist_ratio};
use surfgeom::moves::{
    apply_move, check_resolution_properties, generate_resolution_xi1, resolve_bfs, CurveId,
    ElementaryMove, MoveType, PantsDecomposition, SurfaceSig,
};

fn hyp(c: &mut Criterion) {
    c.bench_function("collar_profile", |b| {
        b.iter(|| collar_profile(black_box(0.7)).unwrap())
    });
    c.bench_function("hexagon_solve", |b| {
        b.iter(|| hexagon_solve(black_box(1.0), black_box(2.0), black_box(0.5)).unwrap())
    });
    let hex = hexagon_solve(1.0, 2.0, 0.5).unwrap();
    c.bench_function("band_measurements", |b| {
        b.iter(|| band_measurements(black_box(&hex)))
    });
    c.bench_function("max_twist_ratio", |b| b.iter(max_twist_ratio));
}

fn farey(c: &mut Criterion) {
    let mut g = c.benchmark_group("farey_distance");
    for (name, a, b) in [
        ("small", "3/7", "-11/5"),
        ("large", "832040/1346269", "-514229/317811"),
    ] {
        let (a, b): (Slope, Slope) = (a.parse().unwrap(), b.parse().unwrap());
        g.bench_with_input(BenchmarkId::from_parameter(name), &(a, b), |bch, (a, b)| {
            bch.iter(|| farey_distance(a, b))
        });
    }
    g.finish();
    let huge: Slope = format!("{}/{}", "7".repeat(60), "3".repeat(59) + "1")
        .parse()
        .unwrap();
    c.bench_function("farey_geodesic/bigint", |b| {
        b.iter(|| farey_geodesic(&Slope::infinity(), black_box(&huge)))
    });
    let golden = EndInvariant::CfStream(CfStream::golden());
    let inf = EndInvariant::RationalSlope(Slope::infinity());
    c.bench_function("coefficient_spectrum/golden", |b| {
        b.iter(|| coefficient_spectrum(black_box(&golden), &inf, 64).unwrap())
    });
}

fn moves(c: &mut Criterion) {
    let (p, q): (Slope, Slope) = ("-7/3".parse().unwrap(), "19/8".parse().unwrap());
    let sig = SurfaceSig::once_punctured_torus();
    c.bench_function("generate_resolution_xi1", |b| {
        b.iter(|| generate_resolution_xi1(sig, &p, &q).unwrap())
    });
    let seq = generate_resolution_xi1(sig, &p, &q).unwrap();
    c.bench_function("check_resolution_properties", |b| {
        b.iter(|| check_resolution_properties(&seq, &p, &q).unwrap())
    });

    let s06 = SurfaceSig::new(0, 6).unwrap();
    let start = PantsDecomposition::standard(s06).unwrap();
    let m = ElementaryMove::new(
        start.curves()[0].clone(),
        CurveId::new("t").unwrap(),
        MoveType::SphereType,
        1,
    );
    c.bench_function("apply_move/S0,6", |b| {
        b.iter(|| apply_move(black_box(&start), &m).unwrap())
    });
    let mut target = start.clone();
    for (k, n) in [(0usize, 1), (2, 0)] {
        let c = target.curves()[k].clone();
        target = apply_move(
            &target,
            &ElementaryMove::new(
                c,
                CurveId::new(format!("t{k}")).unwrap(),
                MoveType::SphereType,
                n,
            ),
        )
        .unwrap();
    }
    c.bench_function("resolve_bfs/S0,6", |b| {
        b.iter(|| resolve_bfs(&start, &target, 2).unwrap())
    });
}

criterion_group!(benches, hyp, farey, moves);
criterion_main!(benches);
