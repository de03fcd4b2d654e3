//! Surfaces, pants decompositions as gluing patterns, and elementary moves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::{Mat2, Slope, SurfaceKind};

/// Genus and puncture count of a finite-type surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSig {
    /// Rejects surfaces without an essential non-peripheral curve.
    pub fn new(genus: u32, punctures: u32) -> Result<SurfaceSig> {
        let s = SurfaceSig { genus, punctures };
        if s.complexity() < 1 {
            return Err(Error::UnsupportedSurface(format!(
                "S({genus},{punctures}) has no pants curves"
            )));
        }
        Ok(s)
    }

    pub fn once_punctured_torus() -> SurfaceSig {
        SurfaceSig {
            genus: 1,
            punctures: 1,
        }
    }

    pub fn four_holed_sphere() -> SurfaceSig {
        SurfaceSig {
            genus: 0,
            punctures: 4,
        }
    }

    /// `3g − 3 + p`, the number of curves in a pants decomposition.
    pub fn complexity(&self) -> i64 {
        3 * i64::from(self.genus) - 3 + i64::from(self.punctures)
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.punctures)
    }

    pub fn pants_count(&self) -> usize {
        (-self.euler_characteristic()).max(0) as usize
    }

    /// The Farey model for the two surfaces of complexity one.
    pub fn farey_kind(&self) -> Option<SurfaceKind> {
        match (self.genus, self.punctures) {
            (1, 1) => Some(SurfaceKind::Torus1),
            (0, 4) => Some(SurfaceKind::Sphere4),
            _ => None,
        }
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.genus, self.punctures)
    }
}

/// Curve label: a slope on complexity-one surfaces, otherwise an opaque
/// name. Any name that reads as a slope is stored as one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveId {
    Slope(Slope),
    Name(String),
}

impl CurveId {
    pub fn new(label: impl Into<String>) -> Result<CurveId> {
        let label = label.into();
        let bad = label.is_empty()
            || label.starts_with('*')
            || label
                .chars()
                .any(|c| c.is_whitespace() || c == '(' || c == ')' || c == ':');
        if bad {
            return Err(Error::parse(format!("invalid curve label {label:?}")));
        }
        Ok(match label.parse::<Slope>() {
            Ok(s) => CurveId::Slope(s),
            Err(_) => CurveId::Name(label),
        })
    }

    pub fn from_slope(s: &Slope) -> CurveId {
        CurveId::Slope(s.clone())
    }

    pub fn as_slope(&self) -> Option<Slope> {
        self.slope().cloned()
    }

    pub fn slope(&self) -> Option<&Slope> {
        match self {
            CurveId::Slope(s) => Some(s),
            CurveId::Name(_) => None,
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::Slope(s) => write!(f, "{s}"),
            CurveId::Name(n) => f.write_str(n),
        }
    }
}

impl FromStr for CurveId {
    type Err = Error;
    fn from_str(s: &str) -> Result<CurveId> {
        CurveId::new(s)
    }
}

impl Serialize for CurveId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A boundary slot of a pair of pants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Curve(CurveId),
    Puncture(u32),
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Curve(c) => write!(f, "{c}"),
            Slot::Puncture(k) => write!(f, "*{k}"),
        }
    }
}

impl FromStr for Slot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Slot> {
        match s.strip_prefix('*') {
            Some(k) => k
                .parse()
                .map(Slot::Puncture)
                .map_err(|_| Error::parse(format!("bad puncture slot {s:?}"))),
            None => CurveId::new(s).map(Slot::Curve),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveType {
    /// Support is a one-holed torus; the curves meet once.
    TorusType,
    /// Support is a four-holed sphere; the curves meet twice.
    SphereType,
}

impl MoveType {
    pub fn letter(self) -> char {
        match self {
            MoveType::TorusType => 'T',
            MoveType::SphereType => 'S',
        }
    }

    pub fn from_letter(c: &str) -> Result<MoveType> {
        match c {
            "T" => Ok(MoveType::TorusType),
            "S" => Ok(MoveType::SphereType),
            _ => Err(Error::parse(format!("move type must be T or S, got {c:?}"))),
        }
    }

    pub fn of(kind: SurfaceKind) -> MoveType {
        match kind {
            SurfaceKind::Torus1 => MoveType::TorusType,
            SurfaceKind::Sphere4 => MoveType::SphereType,
        }
    }
}

/// Replacement of the pants curve `removed` by `inserted`.
///
/// On a general surface the index parity chooses the new pairing of the four
/// boundary slots of a sphere-type support; on complexity-one surfaces the
/// curves are slopes and the index locates `inserted` among the Farey
/// neighbours of `removed` (see [`ElementaryMove::farey`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ElementaryMove {
    pub removed: CurveId,
    pub inserted: CurveId,
    pub move_type: MoveType,
    #[serde(serialize_with = "serialize_display")]
    pub twist_index: BigInt,
}

fn serialize_display<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ElementaryMove {
    pub fn new(
        removed: CurveId,
        inserted: CurveId,
        move_type: MoveType,
        twist_index: impl Into<BigInt>,
    ) -> ElementaryMove {
        ElementaryMove {
            removed,
            inserted,
            move_type,
            twist_index: twist_index.into(),
        }
    }

    /// The move undoing this one. Torus-type indices are negated; sphere-type
    /// indices map to `−n − 1`, which flips parity back to the old pairing.
    pub fn inverse(&self) -> ElementaryMove {
        let twist_index = match self.move_type {
            MoveType::TorusType => -&self.twist_index,
            MoveType::SphereType => -&self.twist_index - 1,
        };
        ElementaryMove {
            removed: self.inserted.clone(),
            inserted: self.removed.clone(),
            move_type: self.move_type,
            twist_index,
        }
    }

    /// Move on a complexity-one surface from slope `removed` to the Farey
    /// neighbour selected by `twist_index`.
    ///
    /// Neighbours of `removed` are indexed by their twist coordinate about it.
    /// Index 0 is the Farey mediant toward `toward`: with a `predecessor`
    /// (the curve `removed` replaced), the neighbour next to the
    /// predecessor's position on the side of `toward`; without one, the
    /// neighbour at the floor of `toward`'s twist coordinate. Larger indices
    /// twist further toward `toward`.
    pub fn farey(
        kind: SurfaceKind,
        removed: &Slope,
        twist_index: impl Into<BigInt>,
        predecessor: Option<&Slope>,
        toward: &Slope,
    ) -> Result<ElementaryMove> {
        let n: BigInt = twist_index.into();
        let (base, sigma) = farey_frame(removed, predecessor, toward)?;
        let k = base + &sigma * &n;
        let inserted = Mat2::normalizing(removed)
            .inverse()
            .apply(&Slope::integer(k));
        Ok(ElementaryMove {
            removed: CurveId::from_slope(removed),
            inserted: CurveId::from_slope(&inserted),
            move_type: MoveType::of(kind),
            twist_index: n,
        })
    }

    /// Index of the Farey move `removed → inserted` under the convention of
    /// [`ElementaryMove::farey`].
    pub fn farey_index(
        removed: &Slope,
        inserted: &Slope,
        predecessor: Option<&Slope>,
        toward: &Slope,
    ) -> Result<BigInt> {
        if removed.det(inserted).abs() != BigInt::one() {
            return Err(Error::InvalidMove(format!(
                "{inserted} is not a Farey neighbour of {removed}"
            )));
        }
        let (base, sigma) = farey_frame(removed, predecessor, toward)?;
        let k = Mat2::normalizing(removed)
            .apply(inserted)
            .floor()
            .expect("neighbour maps to an integer");
        Ok((k - base) * sigma)
    }
}

/// Twist coordinate of index 0 and the direction of increasing index.
fn farey_frame(
    removed: &Slope,
    predecessor: Option<&Slope>,
    toward: &Slope,
) -> Result<(BigInt, BigInt)> {
    if removed == toward {
        return Err(Error::InvalidMove(format!(
            "target {toward} equals the removed curve"
        )));
    }
    let m = Mat2::normalizing(removed);
    let x = m.apply(toward);
    match predecessor {
        None => Ok((
            x.floor().expect("toward differs from removed"),
            BigInt::one(),
        )),
        Some(pred) => {
            let kp = m
                .apply(pred)
                .floor()
                .ok_or_else(|| Error::InvalidMove("predecessor equals removed".into()))?;
            let sigma = match x.cmp_real(&Slope::integer(kp.clone())) {
                std::cmp::Ordering::Less => -BigInt::one(),
                std::cmp::Ordering::Greater => BigInt::one(),
                std::cmp::Ordering::Equal => {
                    return Err(Error::InvalidMove(format!(
                        "target {toward} equals the predecessor"
                    )));
                }
            };
            Ok((kp + &sigma, sigma))
        }
    }
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "remove {} insert {} type {} index {}",
            self.removed,
            self.inserted,
            self.move_type.letter(),
            self.twist_index
        )
    }
}

/// A pants decomposition as a gluing pattern: each pair of pants lists its
/// three boundary slots, filled by curves (two slots each) or punctures (one
/// slot each). Stored in a normal form (slots sorted within each pants, pants
/// sorted) so that equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PantsDecomposition {
    surface: SurfaceSig,
    curves: Vec<CurveId>,
    pants: Vec<[Slot; 3]>,
}

impl PantsDecomposition {
    pub fn new(surface: SurfaceSig, pants: Vec<[Slot; 3]>) -> Result<PantsDecomposition> {
        let d = PantsDecomposition::from_layout(surface, pants);
        d.validate()?;
        Ok(d)
    }

    /// Normal form without validation, for layouts valid by construction.
    fn from_layout(surface: SurfaceSig, mut pants: Vec<[Slot; 3]>) -> PantsDecomposition {
        for p in &mut pants {
            p.sort();
        }
        pants.sort();
        let curves: BTreeSet<CurveId> = pants
            .iter()
            .flatten()
            .filter_map(|s| match s {
                Slot::Curve(c) => Some(c.clone()),
                Slot::Puncture(_) => None,
            })
            .collect();
        PantsDecomposition {
            surface,
            curves: curves.into_iter().collect(),
            pants,
        }
    }

    /// A fixed decomposition of any admissible surface: handle pants
    /// `(h, h, e)` strung with the punctures along a chain.
    pub fn standard(surface: SurfaceSig) -> Result<PantsDecomposition> {
        let surface = SurfaceSig::new(surface.genus, surface.punctures)?;
        let mut next = 0usize;
        let mut fresh = || {
            next += 1;
            Slot::Curve(CurveId::Name(format!("c{}", next - 1)))
        };
        if surface.genus == 1 && surface.punctures == 1 {
            let h = fresh();
            return PantsDecomposition::new(surface, vec![[h.clone(), h, Slot::Puncture(0)]]);
        }
        let mut pants = Vec::new();
        let mut ends = Vec::new();
        for _ in 0..surface.genus {
            let (h, e) = (fresh(), fresh());
            pants.push([h.clone(), h, e.clone()]);
            ends.push(e);
        }
        ends.extend((0..surface.punctures).map(Slot::Puncture));
        if ends.len() == 2 {
            // Two handles and nothing else: glue their ends together.
            let (keep, drop) = (ends[0].clone(), ends[1].clone());
            for p in &mut pants {
                for s in p.iter_mut() {
                    if *s == drop {
                        *s = keep.clone();
                    }
                }
            }
        } else {
            let mut left = ends[0].clone();
            let k = ends.len();
            for (i, b) in ends[1..k - 1].iter().enumerate() {
                let right = if i + 2 == k - 1 {
                    ends[k - 1].clone()
                } else {
                    fresh()
                };
                pants.push([left, b.clone(), right.clone()]);
                left = right;
            }
        }
        PantsDecomposition::new(surface, pants)
    }

    /// The decomposition `{alpha}` of a complexity-one surface. On the
    /// four-holed sphere the parity class of `alpha` fixes which punctures
    /// it separates: `0/1` cuts off `{0, 1}`, `1/0` cuts off `{0, 2}` and
    /// `1/1` cuts off `{0, 3}`.
    pub fn farey(kind: SurfaceKind, alpha: &Slope) -> PantsDecomposition {
        let c = Slot::Curve(CurveId::from_slope(alpha));
        let (surface, pants) = match kind {
            SurfaceKind::Torus1 => (
                SurfaceSig::once_punctured_torus(),
                vec![[c.clone(), c, Slot::Puncture(0)]],
            ),
            SurfaceKind::Sphere4 => {
                let odd = |v: &BigInt| v.is_odd();
                let partner = match (odd(alpha.p()), odd(alpha.q())) {
                    (false, true) => 1,
                    (true, false) => 2,
                    _ => 3,
                };
                let rest: Vec<u32> = (1..4).filter(|&k| k != partner).collect();
                (
                    SurfaceSig::four_holed_sphere(),
                    vec![
                        [c.clone(), Slot::Puncture(0), Slot::Puncture(partner)],
                        [c, Slot::Puncture(rest[0]), Slot::Puncture(rest[1])],
                    ],
                )
            }
        };
        let d = PantsDecomposition::from_layout(surface, pants);
        debug_assert!(d.validate().is_ok());
        d
    }

    pub fn surface(&self) -> SurfaceSig {
        self.surface
    }

    /// Curve labels in sorted order.
    pub fn curves(&self) -> &[CurveId] {
        &self.curves
    }

    pub fn pants(&self) -> &[[Slot; 3]] {
        &self.pants
    }

    pub fn contains(&self, c: &CurveId) -> bool {
        self.curves.binary_search(c).is_ok()
    }

    /// The single curve of a complexity-one decomposition, as a slope.
    pub fn farey_curve(&self) -> Option<Slope> {
        match self.curves.as_slice() {
            [c] if self.surface.farey_kind().is_some() => c.as_slope(),
            _ => None,
        }
    }

    /// Positions `(pants, slot)` filled by `c`.
    fn positions(&self, c: &CurveId) -> Vec<(usize, usize)> {
        let target = Slot::Curve(c.clone());
        let mut out = Vec::new();
        for (i, p) in self.pants.iter().enumerate() {
            for (j, s) in p.iter().enumerate() {
                if *s == target {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Type of the support of `c`: one pants glued to itself along `c`, or two
    /// distinct pants.
    pub fn support_type(&self, c: &CurveId) -> Option<MoveType> {
        match self.positions(c).as_slice() {
            [(a, _), (b, _)] if a == b => Some(MoveType::TorusType),
            [_, _] => Some(MoveType::SphereType),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let s = self.surface;
        let bad = |m: String| Err(Error::Structural(m));
        if self.pants.len() != s.pants_count() {
            return bad(format!(
                "{s} needs {} pants, found {}",
                s.pants_count(),
                self.pants.len()
            ));
        }
        if self.curves.len() as i64 != s.complexity() {
            return bad(format!(
                "{s} needs {} curves, found {}",
                s.complexity(),
                self.curves.len()
            ));
        }
        let mut fill: BTreeMap<&Slot, usize> = BTreeMap::new();
        for slot in self.pants.iter().flatten() {
            *fill.entry(slot).or_default() += 1;
        }
        for (slot, n) in &fill {
            match slot {
                Slot::Curve(c) if *n != 2 => return bad(format!("curve {c} fills {n} slots")),
                Slot::Puncture(k) if *k >= s.punctures => {
                    return bad(format!("puncture {k} out of range"))
                }
                Slot::Puncture(k) if *n != 1 => {
                    return bad(format!("puncture {k} fills {n} slots"))
                }
                _ => {}
            }
        }
        let punctures = fill
            .keys()
            .filter(|k| matches!(k, Slot::Puncture(_)))
            .count();
        if punctures != s.punctures as usize {
            return bad(format!(
                "{s} needs {} punctures, found {punctures}",
                s.punctures
            ));
        }
        // Connectivity through shared curves.
        let mut parent: Vec<usize> = (0..self.pants.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for c in &self.curves {
            let pos = self.positions(c);
            let (a, b) = (root(&mut parent, pos[0].0), root(&mut parent, pos[1].0));
            parent[a] = b;
        }
        let r0 = root(&mut parent, 0);
        if (0..self.pants.len()).any(|i| root(&mut parent, i) != r0) {
            return bad("pants do not glue to a connected surface".into());
        }
        Ok(())
    }

    /// Canonical form with curves renamed, for comparing gluing patterns
    /// regardless of labels. Tries every relabelling, so it is meant for
    /// small complexity.
    pub fn shape_key(&self) -> Vec<[Slot; 3]> {
        let n = self.curves.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<[Slot; 3]>> = None;
        loop {
            let rename = |s: &Slot| match s {
                Slot::Curve(c) => {
                    let i = self.curves.binary_search(c).expect("curve listed");
                    Slot::Curve(CurveId::Name(format!("#{}", perm[i])))
                }
                p => p.clone(),
            };
            let mut key: Vec<[Slot; 3]> = self
                .pants
                .iter()
                .map(|p| {
                    let mut q = [rename(&p[0]), rename(&p[1]), rename(&p[2])];
                    q.sort();
                    q
                })
                .collect();
            key.sort();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for PantsDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pants.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({} {} {})", p[0], p[1], p[2])?;
        }
        Ok(())
    }
}

impl PantsDecomposition {
    /// Parses the pants list written by `Display`, e.g. `(a a *0)`.
    pub fn parse(surface: SurfaceSig, text: &str) -> Result<PantsDecomposition> {
        let mut pants = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed pants in {text:?}")))?;
            let slots: Vec<Slot> = body[..close]
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_>>()?;
            let slots: [Slot; 3] = slots
                .try_into()
                .map_err(|_| Error::parse(format!("pants need three slots in {text:?}")))?;
            pants.push(slots);
            rest = body[close + 1..].trim_start();
        }
        PantsDecomposition::new(surface, pants)
    }
}

/// Applies an elementary move.
///
/// Torus-type moves relabel the curve in its self-glued pants. Sphere-type
/// moves re-pair the four boundary slots of the two pants meeting along
/// `removed`; on the four-holed sphere with slope labels the new pairing is
/// read off the inserted slope, elsewhere the index parity picks one of the
/// two other pairings.
pub fn apply_move(p: &PantsDecomposition, m: &ElementaryMove) -> Result<PantsDecomposition> {
    let invalid = |msg: String| Err(Error::InvalidMove(msg));
    if !p.contains(&m.removed) {
        return invalid(format!("{} is not a pants curve", m.removed));
    }
    if m.inserted == m.removed || p.contains(&m.inserted) {
        return invalid(format!("{} is already a pants curve", m.inserted));
    }
    let support = p
        .support_type(&m.removed)
        .expect("pants curves fill two slots");
    if support != m.move_type {
        return invalid(format!(
            "support of {} is {:?}, move is {:?}",
            m.removed, support, m.move_type
        ));
    }
    if let Some(kind) = p.surface.farey_kind() {
        let (a, b) = match (m.removed.as_slope(), m.inserted.as_slope()) {
            (Some(a), Some(b)) => (a, b),
            _ => return invalid("curves on this surface are slopes".into()),
        };
        if a.det(&b).abs() != BigInt::one() {
            return invalid(format!("{b} is not a Farey neighbour of {a}"));
        }
        return Ok(PantsDecomposition::farey(kind, &b));
    }
    let new = Slot::Curve(m.inserted.clone());
    let old = Slot::Curve(m.removed.clone());
    let mut pants = p.pants.clone();
    match support {
        MoveType::TorusType => {
            for s in pants.iter_mut().flatten() {
                if *s == old {
                    *s = new.clone();
                }
            }
        }
        MoveType::SphereType => {
            let pos = p.positions(&m.removed);
            let (ia, ib) = (pos[0].0, pos[1].0);
            let others = |i: usize| -> Vec<Slot> {
                let mut v: Vec<Slot> = p.pants[i].iter().filter(|s| **s != old).cloned().collect();
                v.sort();
                v
            };
            let mut four: Vec<Slot> = others(ia);
            four.extend(others(ib));
            let x = others(ia);
            // The distinct pairings of the sorted boundary, and the current
            // one. A curve filling two of the four slots makes two of the
            // three formal pairings coincide.
            let mut sorted = four.clone();
            sorted.sort();
            let halves = |q: &[usize; 4]| {
                let half = |i: usize, j: usize| {
                    let mut h = vec![sorted[i].clone(), sorted[j].clone()];
                    h.sort();
                    h
                };
                let mut both = [half(q[0], q[1]), half(q[2], q[3])];
                both.sort();
                both
            };
            let mut options: Vec<[usize; 4]> = Vec::new();
            for q in [[0usize, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]] {
                if options.iter().all(|o| halves(o) != halves(&q)) {
                    options.push(q);
                }
            }
            let current = options
                .iter()
                .position(|q| halves(q).contains(&x))
                .expect("current pairing is among the options");
            // Three options: the index parity picks the next or the one
            // after. Two options: every index switches to the other.
            let step = if options.len() == 2 || m.twist_index.is_even() {
                1
            } else {
                2
            };
            let q = options[(current + step) % options.len()];
            let mut rest: Vec<[Slot; 3]> = pants
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != ia && *i != ib)
                .map(|(_, s)| s.clone())
                .collect();
            rest.push([new.clone(), sorted[q[0]].clone(), sorted[q[1]].clone()]);
            rest.push([new, sorted[q[2]].clone(), sorted[q[3]].clone()]);
            pants = rest;
        }
    }
    PantsDecomposition::new(p.surface, pants)
}
