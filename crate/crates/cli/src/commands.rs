//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use serde_json::json;
use surfgeom::farey::{
    cf_expand, coefficient_spectrum, decide_bounded_geometry, farey_distance, farey_geodesic,
    Decision, EndInvariant, Slope,
};
use surfgeom::hyp::{
    collar_profile, curve_shorten_displacement, equidistant_displacement, half_space_juncture_diam,
    hexagon_solve, max_twist_ratio, pair_sides, tube_radius_lower, HexagonCase,
};
use surfgeom::moves::{
    check_resolution_properties, farey_ball_dot, generate_resolution_xi1, occupancy_intervals,
    pants_dot, resolve_bfs, MoveSequence, PantsDecomposition, SurfaceSig,
};

use crate::args::{Command, DotTarget, FareyQuery, Format};
use crate::config::{Failure, Outcome, Settings};
use crate::output::{real, Report};

pub fn run(command: &Command, s: &Settings) -> Outcome<Report> {
    match command {
        Command::Collar { ell } => collar(ell),
        Command::Hex { a1, a2, a3 } => hex(*a1, *a2, *a3),
        Command::TwistRatio => Ok(twist_ratio()),
        Command::Shorten { ell, r } => shorten(*ell, *r),
        Command::Equidistant { ell, theta, t } => equidistant(*ell, *theta, *t),
        Command::Tube { eps } => tube(*eps, s),
        Command::Juncture { b, r0 } => juncture(*b, *r0),
        Command::Farey {
            query: FareyQuery::Dist { a, b, path },
        } => dist(a, b, *path),
        Command::Cf { x } => cf(x),
        Command::Coeffs {
            nu_plus,
            nu_minus,
            depth,
            k,
            summary,
        } => {
            let depth = s.check_depth(depth.unwrap_or(s.depth))?;
            let k = k.map(|k| s.check_threshold(k)).transpose()?;
            coeffs(nu_plus, nu_minus, depth, k, summary.as_deref())
        }
        Command::Decide {
            nu_plus,
            nu_minus,
            k,
            depth,
        } => {
            let depth = s.check_depth(depth.unwrap_or(s.depth))?;
            let k = s.check_threshold(k.unwrap_or(s.threshold))?;
            decide(nu_plus, nu_minus, k, depth)
        }
        Command::Resolve {
            from,
            to,
            surface,
            radius,
        } => resolve(from, to, surface.as_deref(), radius.unwrap_or(s.radius)),
        Command::CheckResolution { file } => check(file),
        Command::ExportDot { what } => export_dot(what, s),
        Command::Batch { .. } => Err(Failure::Parse("batch files cannot nest".into())),
    }
}

fn slope(text: &str) -> Outcome<Slope> {
    Ok(text.parse::<Slope>()?)
}

fn end(text: &str) -> Outcome<EndInvariant> {
    Ok(text.parse::<EndInvariant>()?)
}

fn collar(ells: &[f64]) -> Outcome<Report> {
    let mut r = Report::table(&["ell", "w0", "w", "boundary_len_full", "boundary_len_reduced"])
        .comment("collar about a closed geodesic of length ell: sinh(w0) sinh(ell/2) = 1, w = max(w0/2, w0 - 1)")
        .comment("boundary lengths ell cosh(w0) and ell cosh(w)");
    for &ell in ells {
        let c = collar_profile(ell)?;
        r.row(vec![
            real(c.ell),
            real(c.w0),
            real(c.w),
            real(c.boundary_len_full),
            real(c.boundary_len_reduced),
        ]);
    }
    Ok(r)
}

fn hex(a1: f64, a2: f64, a3: f64) -> Outcome<Report> {
    let h = hexagon_solve(a1, a2, a3)?;
    let side = |p: usize| {
        let (i, j) = pair_sides(p);
        format!("{}{}", i + 1, j + 1)
    };
    let mut cols: Vec<String> = vec!["a1".into(), "a2".into(), "a3".into()];
    cols.extend((0..3).map(|p| format!("c{}", side(p))));
    cols.extend((0..3).map(|p| format!("r{}", side(p))));
    cols.extend(["case".into(), "dominant".into()]);
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut r = Report::table(&col_refs)
        .comment("right-angled hexagon with alternate sides a1, a2, a3 (0 for a cusp)")
        .comment("c_ij: side joining a_i and a_j; r_ij: band radius about c_ij");
    let (case, dominant) = match h.case {
        HexagonCase::Case1 => ("1".to_string(), String::new()),
        HexagonCase::Case2 { dominant } => ("2".to_string(), format!("a{}", dominant + 1)),
    };
    let mut row: Vec<String> = h.a.iter().map(|&v| real(v)).collect();
    row.extend(h.c.iter().map(|&v| real(v)));
    row.extend(h.r.iter().map(|&v| real(v)));
    row.extend([case, dominant]);
    r.row(row);
    Ok(r)
}

fn twist_ratio() -> Report {
    let m = max_twist_ratio();
    let mut r = Report::table(&["ratio_max", "w0_argmax", "ell_argmax"])
        .comment("maximum over ell of p/ell, p the crossing projection of the reduced collar");
    r.row(vec![
        real(m.ratio_max),
        real(m.w0_argmax),
        real(m.ell_argmax),
    ]);
    r
}

fn shorten(ell: f64, rad: f64) -> Outcome<Report> {
    let d = curve_shorten_displacement(ell, rad)?;
    let mut r = Report::table(&["ell", "r", "displacement"])
        .comment("displacement 2 asinh(sinh(ell/2) cosh r) of a point at distance r from the axis");
    r.row(vec![real(ell), real(rad), real(d)]);
    Ok(r)
}

fn equidistant(ell: f64, theta: f64, t: f64) -> Outcome<Report> {
    let d = equidistant_displacement(ell, theta, t)?;
    let mut r = Report::table(&["ell", "theta", "t", "displacement"]).comment(
        "helical displacement sqrt(ell^2 cosh^2 t + theta^2 sinh^2 t) at distance t from the axis",
    );
    r.row(vec![real(ell), real(theta), real(t), real(d)]);
    Ok(r)
}

fn tube(eps: f64, s: &Settings) -> Outcome<Report> {
    let radius = tube_radius_lower(eps, &s.constants)?;
    let mut r = Report::table(&["eps", "radius_lower"])
        .comment("tube radius lower bound max(0, log(eps0/eps)/2 - c)")
        .comment(s.constants.note());
    r.row(vec![real(eps), real(radius)]);
    r.note("constants", json!(s.constants));
    Ok(r)
}

fn juncture(b: f64, r0: f64) -> Outcome<Report> {
    let d = half_space_juncture_diam(b, r0)?;
    let mut r = Report::table(&["b", "r0", "diameter"])
        .comment("diameter of the intersection of b-neighbourhoods of half-spaces at distance r0");
    r.row(vec![real(b), real(r0), real(d)]);
    Ok(r)
}

fn dist(a: &str, b: &str, with_path: bool) -> Outcome<Report> {
    let (a, b) = (slope(a)?, slope(b)?);
    let d = farey_distance(&a, &b);
    let cols: &[&str] = if with_path {
        &["a", "b", "distance", "geodesic"]
    } else {
        &["a", "b", "distance"]
    };
    let mut r = Report::table(cols).comment("distance in the Farey graph");
    let mut row = vec![a.to_string(), b.to_string(), d.to_string()];
    if with_path {
        let g: Vec<String> = farey_geodesic(&a, &b)
            .iter()
            .map(Slope::to_string)
            .collect();
        row.push(g.join(" "));
    }
    r.row(row);
    Ok(r)
}

fn cf(x: &str) -> Outcome<Report> {
    let x = slope(x)?;
    if x.is_infinite() {
        return Err(Failure::Domain("inf has no continued fraction".into()));
    }
    let mut r = Report::table(&["index", "term"]).comment(format!("continued fraction of {x}"));
    for (i, a) in cf_expand(&x).iter().enumerate() {
        r.row(vec![i.to_string(), a.to_string()]);
    }
    r.note("value", x.to_string());
    Ok(r)
}

fn decision_name(d: Decision) -> &'static str {
    match d {
        Decision::Bounded => "Bounded",
        Decision::Unbounded => "Unbounded",
        Decision::IndeterminateAtDepth => "IndeterminateAtDepth",
    }
}

fn coeffs(
    plus: &str,
    minus: &str,
    depth: usize,
    k: Option<u64>,
    summary: Option<&Path>,
) -> Outcome<Report> {
    let (p, m) = (end(plus)?, end(minus)?);
    let spectrum = coefficient_spectrum(&p, &m, depth)?;
    let decision = k
        .map(|k| decide_bounded_geometry(&p, &m, k, depth))
        .transpose()?;
    let mut r = Report::table(&["pivot", "coefficient"]).comment(format!(
        "annular coefficients about the pivots from {m} toward {p}"
    ));
    for (pivot, c) in spectrum.pivots.iter().zip(&spectrum.coeffs) {
        r.row(vec![pivot.to_string(), c.to_string()]);
    }
    let doc = json!({
        "nu_plus": p.to_string(),
        "nu_minus": m.to_string(),
        "sup": spectrum.sup.to_string(),
        "complete": spectrum.complete,
        "depth": depth,
        "threshold": k,
        "decision": decision.map(decision_name),
    });
    if let Some(path) = summary {
        let mut text = serde_json::to_string_pretty(&doc).expect("summary serializes");
        text.push('\n');
        crate::output::write_atomic(path, &text)?;
    }
    if let serde_json::Value::Object(map) = doc {
        r.summary = map;
    }
    Ok(r)
}

fn decide(plus: &str, minus: &str, k: u64, depth: usize) -> Outcome<Report> {
    let (p, m) = (end(plus)?, end(minus)?);
    let d = decide_bounded_geometry(&p, &m, k, depth)?;
    let spectrum = coefficient_spectrum(&p, &m, depth)?;
    let mut r = Report {
        text: Some(format!("{}\n", decision_name(d))),
        ..Report::default()
    };
    r.note("decision", decision_name(d));
    r.note("threshold", k);
    r.note("depth", depth);
    r.note("sup", spectrum.sup.to_string());
    r.note("complete", spectrum.complete);
    r.code = match d {
        Decision::Bounded => 0,
        Decision::Unbounded => 3,
        Decision::IndeterminateAtDepth => 4,
    };
    Ok(r)
}

fn surface(text: &str) -> Outcome<SurfaceSig> {
    let v: Vec<u32> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::Parse(format!("bad surface {text:?}")))
        })
        .collect::<Outcome<_>>()?;
    match v.as_slice() {
        [g, p] => Ok(SurfaceSig::new(*g, *p)?),
        _ => Err(Failure::Parse(format!(
            "surface needs genus and punctures, got {text:?}"
        ))),
    }
}

fn sequence_report(seq: &MoveSequence) -> Report {
    let mut r = Report {
        text: Some(seq.to_text()),
        ..Report::default()
    };
    r.note("moves", seq.len());
    r
}

fn resolve(from: &str, to: &str, surf: Option<&str>, radius: usize) -> Outcome<Report> {
    let sig = match surf {
        Some(t) => surface(t)?,
        None => SurfaceSig::once_punctured_torus(),
    };
    if sig.farey_kind().is_some() {
        let seq = generate_resolution_xi1(sig, &slope(from)?, &slope(to)?)?;
        return Ok(sequence_report(&seq));
    }
    let decomposition = |t: &str| -> Outcome<PantsDecomposition> {
        Ok(if t == "standard" {
            PantsDecomposition::standard(sig)?
        } else {
            PantsDecomposition::parse(sig, t)?
        })
    };
    let (a, b) = (decomposition(from)?, decomposition(to)?);
    match resolve_bfs(&a, &b, radius)? {
        Some(seq) => Ok(sequence_report(&seq)),
        None => Err(Failure::Domain(format!(
            "no move sequence within radius {radius}"
        ))),
    }
}

fn read_sequence(file: &Path) -> Outcome<MoveSequence> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))?;
    Ok(MoveSequence::from_text(&text)?)
}

fn check(file: &Path) -> Outcome<Report> {
    let seq = read_sequence(file)?;
    seq.verify()?;
    if seq.surface().farey_kind().is_none() {
        let occ = occupancy_intervals(&seq);
        let mut r = Report::table(&["curve", "intervals"]).comment(format!("{} moves", seq.len()));
        for (c, runs) in &occ.intervals {
            let runs: Vec<String> = runs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            r.row(vec![c.to_string(), runs.join(" ")]);
        }
        r.note("intervals_ok", occ.flagged.is_empty());
        r.code = if occ.flagged.is_empty() { 0 } else { 1 };
        return Ok(r);
    }
    let Some((p, q)) = seq.endpoints().cloned() else {
        return Err(Failure::Parse(
            "a complexity-one sequence needs an endpoints line".into(),
        ));
    };
    let rep = check_resolution_properties(&seq, &p, &q)?;
    let flags = format!(
        "endpoints {} geodesic {} intervals {} neighbours_meet {}",
        rep.endpoints_ok, rep.geodesic, rep.intervals_ok, rep.pred_succ_intersect
    );
    let consts = format!(
        "K {} a {} delta {} sup_projection {} expanded_length {}",
        real(rep.constants.k),
        real(rep.constants.a),
        rep.constants.delta,
        rep.sup_projection,
        rep.expanded_length
    );
    let mut r = Report::table(&["vertex", "local", "global", "deviation"])
        .comment(flags)
        .comment(consts);
    for d in &rep.deviations {
        r.row(vec![
            d.vertex.to_string(),
            d.local.to_string(),
            d.global.to_string(),
            d.deviation.to_string(),
        ]);
    }
    r.note("structure_ok", rep.structure_ok());
    r.note(
        "report",
        serde_json::to_value(&rep).expect("report serializes"),
    );
    r.code = if rep.structure_ok() { 0 } else { 1 };
    Ok(r)
}

fn dot_report(dot: String) -> Report {
    Report {
        dot: Some(dot),
        default_format: Some(Format::Dot),
        ..Report::default()
    }
}

fn export_dot(what: &DotTarget, s: &Settings) -> Outcome<Report> {
    match what {
        DotTarget::Pants {
            genus,
            punctures,
            decomposition,
        } => {
            let sig = SurfaceSig::new(*genus, *punctures)?;
            let d = match decomposition {
                Some(t) => PantsDecomposition::parse(sig, t)?,
                None => PantsDecomposition::standard(sig)?,
            };
            Ok(dot_report(pants_dot(&d)))
        }
        DotTarget::Farey {
            center,
            radius,
            height,
            to,
        } => {
            let c = slope(center)?;
            let path = match to {
                Some(t) => farey_geodesic(&c, &slope(t)?),
                None => Vec::new(),
            };
            Ok(dot_report(farey_ball_dot(
                &c,
                radius.unwrap_or(2),
                height.unwrap_or(s.height),
                &path,
            )))
        }
        DotTarget::Resolution { file } => {
            let seq = read_sequence(file)?;
            let path: Vec<Slope> = seq
                .states()
                .iter()
                .filter_map(PantsDecomposition::farey_curve)
                .collect();
            if path.len() != seq.states().len() {
                return Err(Failure::Domain("not a complexity-one sequence".into()));
            }
            Ok(dot_report(farey_ball_dot(&path[0], 1, s.height, &path)))
        }
    }
}
