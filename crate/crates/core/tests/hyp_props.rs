use proptest::prelude::*;
use surfgeom::hyp::collar::full_width;
use surfgeom::hyp::twist::twist_ratio;
use surfgeom::hyp::{
    band_stretch_bilipschitz, collar_profile, curve_shorten_displacement, equidistant_displacement,
    half_space_juncture_diam, truncation_budget, tube_radius_lower, ConstantsProfile,
};

fn ell() -> impl Strategy<Value = f64> {
    (-13.8f64..3.0).prop_map(f64::exp)
}

proptest! {
    #[test]
    fn collar_profile_invariants(l in ell()) {
        let p = collar_profile(l).unwrap();
        prop_assert!((p.w0.sinh() * (0.5 * l).sinh() - 1.0).abs() < 1e-12);
        prop_assert_eq!(p.w, (p.w0 / 2.0).max(p.w0 - 1.0));
        prop_assert!((p.boundary_len_full - l * p.w0.cosh()).abs() < 1e-12 * p.boundary_len_full);
        prop_assert!(p.boundary_len_full >= 2.0 && p.boundary_len_full <= l + 2.0);
        prop_assert!(p.boundary_len_reduced <= p.boundary_len_full);
    }

    #[test]
    fn collar_width_decreases_and_boundary_grows(l in ell(), f in 1.001f64..3.0) {
        let (p, q) = (collar_profile(l).unwrap(), collar_profile(l * f).unwrap());
        prop_assert!(q.w0 < p.w0);
        prop_assert!(q.boundary_len_full > p.boundary_len_full);
        prop_assert_eq!(full_width(l), p.w0);
    }

    #[test]
    fn twist_ratio_stays_below_three_halves(l in ell()) {
        prop_assert!(twist_ratio(l) < 1.5);
    }

    #[test]
    fn shortening_never_shortens(l in 0.0f64..5.0, r in 0.0f64..5.0, dr in 0.001f64..1.0) {
        let s = curve_shorten_displacement(l, r).unwrap();
        prop_assert!(s >= l);
        prop_assert!(curve_shorten_displacement(l, r + dr).unwrap() >= s);
        prop_assert_eq!(curve_shorten_displacement(l, 0.0).unwrap(), l);
    }

    #[test]
    fn equidistant_displacement_limits(l in 0.0f64..5.0, th in -3.2f64..3.2, t in 0.0f64..4.0) {
        let d = equidistant_displacement(l, th, t).unwrap();
        prop_assert!(d >= l * t.cosh() - 1e-12 && d >= th.abs() * t.sinh() - 1e-12);
        prop_assert!((equidistant_displacement(l, th, 0.0).unwrap() - l).abs() < 1e-15);
        prop_assert!((equidistant_displacement(0.0, th, t).unwrap() - th.abs() * t.sinh()).abs() < 1e-12);
    }

    #[test]
    fn tube_radius_monotone(e1 in 1e-8f64..0.1, e2 in 1e-8f64..0.1) {
        let p = ConstantsProfile::default();
        let (r1, r2) = (tube_radius_lower(e1, &p).unwrap(), tube_radius_lower(e2, &p).unwrap());
        if e1 < e2 { prop_assert!(r1 >= r2) } else { prop_assert!(r2 >= r1) }
        let half = tube_radius_lower(e1 / 2.0, &p).unwrap();
        prop_assert!((half - r1 - 0.5 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn truncation_budget_is_linear(chi in -50i64..-1, eps in 1e-3f64..10.0) {
        let (l, l2) = truncation_budget(chi, eps).unwrap();
        let (ld, _) = truncation_budget(2 * chi, eps).unwrap();
        prop_assert!(l2 > 2.0 * l);
        prop_assert!((ld - 2.0 * l).abs() < 1e-12 * ld);
    }

    #[test]
    fn profiles_violating_ordering_are_rejected(eps0 in 0.01f64..1.0, k0 in 1.0f64..10.0, f in 0.0f64..3.0) {
        let eps1 = f * eps0 / k0;
        let built = ConstantsProfile::new(eps0, eps1, 6.0, k0, 0.0);
        prop_assert_eq!(built.is_ok(), eps1 > 0.0 && eps1 < eps0 / k0);
    }

    #[test]
    fn stretch_is_symmetric_and_at_least_one(
        r in 0.05f64..4.0, c in 0.05f64..4.0, r2 in 0.05f64..4.0, c2 in 0.05f64..4.0,
    ) {
        let k = band_stretch_bilipschitz(r, c, r2, c2).unwrap();
        let back = band_stretch_bilipschitz(r2, c2, r, c).unwrap();
        prop_assert!(k >= 1.0);
        prop_assert!(k >= (r2 / r).max(r / r2) - 1e-12);
        prop_assert!(k >= (c2 / c).max(c / c2) - 1e-12);
        prop_assert!((k - back).abs() < 1e-9 * k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn juncture_diameter_monotone(b in 0.1f64..3.0, db in 0.05f64..1.0, r0 in 0.1f64..3.0, dr in 0.05f64..1.0) {
        let d = half_space_juncture_diam(b, r0).unwrap();
        prop_assert!(d.is_finite());
        prop_assert!(half_space_juncture_diam(b + db, r0).unwrap() >= d - 1e-9);
        prop_assert!(half_space_juncture_diam(b, r0 + dr).unwrap() <= d + 1e-9);
    }
}
