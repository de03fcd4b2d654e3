//! Closed forms checked against constructions in explicit models.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfgeom::hyp::{
    collar_crossing_projection, curve_shorten_displacement, equidistant_displacement, horoball_gap,
};
use surfgeom::oracle::{
    collar_projection_construction, helix_length, horoball_gap_construction,
    translation_displacement,
};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn shortening_matches_the_hyperboloid_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let (ell, r) = (rng.gen_range(0.0..6.0), rng.gen_range(0.0..6.0));
        let closed = curve_shorten_displacement(ell, r).unwrap();
        let model = translation_displacement(ell, r);
        assert!(
            close(closed, model, 1e-9),
            "ell {ell} r {r}: {closed} vs {model}"
        );
    }
}

#[test]
fn equidistant_displacement_matches_helix_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let (ell, theta, t) = (
            rng.gen_range(0.0..4.0),
            rng.gen_range(-3.1..3.1),
            rng.gen_range(0.0..3.0),
        );
        let closed = equidistant_displacement(ell, theta, t).unwrap();
        let model = helix_length(ell, theta, t, 64);
        assert!(
            close(closed, model, 1e-9),
            "ell {ell} theta {theta} t {t}: {closed} vs {model}"
        );
    }
}

#[test]
fn collar_projection_matches_the_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let w = rng.gen_range(0.01..8.0);
        let closed = collar_crossing_projection(w).unwrap();
        let model = collar_projection_construction(w);
        assert!(close(closed, model, 1e-9), "w {w}: {closed} vs {model}");
    }
}

#[test]
fn horoball_gap_matches_the_minimization() {
    assert!(close(horoball_gap(), horoball_gap_construction(), 1e-9));
}
