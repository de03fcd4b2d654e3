//! Move sequences, occupancy intervals and the line-oriented text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use super::pants::{apply_move, CurveId, ElementaryMove, MoveType, PantsDecomposition, SurfaceSig};
use crate::error::{Error, Result};
use crate::farey::Slope;

/// Decompositions `P_0, …, P_n` with the moves `P_j → P_{j+1}` between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    states: Vec<PantsDecomposition>,
    moves: Vec<ElementaryMove>,
    occupancy: BTreeMap<CurveId, BTreeSet<usize>>,
    /// Endpoint slopes of a complexity-one resolution, if recorded.
    endpoints: Option<(Slope, Slope)>,
}

impl MoveSequence {
    /// Builds the sequence by applying `moves` to `start` in order.
    pub fn replay(start: PantsDecomposition, moves: Vec<ElementaryMove>) -> Result<MoveSequence> {
        let mut states = vec![start];
        for m in &moves {
            let next = apply_move(states.last().expect("nonempty"), m)?;
            states.push(next);
        }
        let occupancy = occupancy_of(&states);
        Ok(MoveSequence {
            states,
            moves,
            occupancy,
            endpoints: None,
        })
    }

    pub fn with_endpoints(mut self, p: Slope, q: Slope) -> MoveSequence {
        self.endpoints = Some((p, q));
        self
    }

    pub fn endpoints(&self) -> Option<&(Slope, Slope)> {
        self.endpoints.as_ref()
    }

    pub fn surface(&self) -> SurfaceSig {
        self.states[0].surface()
    }

    pub fn states(&self) -> &[PantsDecomposition] {
        &self.states
    }

    pub fn moves(&self) -> &[ElementaryMove] {
        &self.moves
    }

    /// Number of moves `n`.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// `J_β = {j : β ∈ P_j}` for every curve that appears.
    pub fn occupancy(&self) -> &BTreeMap<CurveId, BTreeSet<usize>> {
        &self.occupancy
    }

    /// Checks that consecutive states differ by the recorded moves and that
    /// the stored occupancy matches a recomputation.
    pub fn verify(&self) -> Result<()> {
        for (j, m) in self.moves.iter().enumerate() {
            if apply_move(&self.states[j], m)? != self.states[j + 1] {
                return Err(Error::Structural(format!(
                    "step {j} does not match its move"
                )));
            }
        }
        if occupancy_of(&self.states) != self.occupancy {
            return Err(Error::Structural("stored occupancy is stale".into()));
        }
        Ok(())
    }

    /// Text form: a `surface` line, a `start` line, optional `endpoints`,
    /// then one `step k: remove <id> insert <id> type <T|S> index <n>` line
    /// per move.
    pub fn to_text(&self) -> String {
        let s = self.surface();
        let mut out = format!(
            "surface {} {}\nstart {}\n",
            s.genus, s.punctures, self.states[0]
        );
        if let Some((p, q)) = &self.endpoints {
            let _ = writeln!(out, "endpoints {p} {q}");
        }
        for (k, m) in self.moves.iter().enumerate() {
            let _ = writeln!(out, "step {k}: {m}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<MoveSequence> {
        let mut surface = None;
        let mut start = None;
        let mut endpoints = None;
        let mut moves = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |what: &str| Error::parse(format!("line {}: {what}: {line:?}", lineno + 1));
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("missing fields"))?;
            match key {
                "surface" => {
                    let v: Vec<u32> = rest
                        .split_whitespace()
                        .map(|x| x.parse().map_err(|_| err("bad surface")))
                        .collect::<Result<_>>()?;
                    match v.as_slice() {
                        [g, p] => surface = Some(SurfaceSig::new(*g, *p)?),
                        _ => return Err(err("surface needs genus and punctures")),
                    }
                }
                "start" => {
                    let sig = surface.ok_or_else(|| err("start before surface"))?;
                    start = Some(PantsDecomposition::parse(sig, rest)?);
                }
                "endpoints" => {
                    let v: Vec<&str> = rest.split_whitespace().collect();
                    match v.as_slice() {
                        [p, q] => endpoints = Some((p.parse::<Slope>()?, q.parse::<Slope>()?)),
                        _ => return Err(err("endpoints need two slopes")),
                    }
                }
                "step" => {
                    let (k, body) = rest.split_once(':').ok_or_else(|| err("missing ':'"))?;
                    let k: usize = k.trim().parse().map_err(|_| err("bad step number"))?;
                    if k != moves.len() {
                        return Err(err("steps out of order"));
                    }
                    let f: Vec<&str> = body.split_whitespace().collect();
                    match f.as_slice() {
                        ["remove", r, "insert", i, "type", t, "index", n] => {
                            let n: BigInt = n.parse().map_err(|_| err("bad index"))?;
                            moves.push(ElementaryMove::new(
                                r.parse()?,
                                i.parse()?,
                                MoveType::from_letter(t)?,
                                n,
                            ));
                        }
                        _ => return Err(err("malformed step")),
                    }
                }
                _ => return Err(err("unknown record")),
            }
        }
        let start = start.ok_or_else(|| Error::parse("missing start line"))?;
        let seq = MoveSequence::replay(start, moves)?;
        Ok(match endpoints {
            Some((p, q)) => seq.with_endpoints(p, q),
            None => seq,
        })
    }
}

fn occupancy_of(states: &[PantsDecomposition]) -> BTreeMap<CurveId, BTreeSet<usize>> {
    let mut occ: BTreeMap<CurveId, BTreeSet<usize>> = BTreeMap::new();
    for (j, p) in states.iter().enumerate() {
        for c in p.curves() {
            occ.entry(c.clone()).or_default().insert(j);
        }
    }
    occ
}

/// Maximal runs of each `J_β`, and the curves whose occupancy is not a
/// single interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OccupancyReport {
    pub intervals: BTreeMap<CurveId, Vec<(usize, usize)>>,
    pub flagged: Vec<CurveId>,
}

pub fn occupancy_intervals(seq: &MoveSequence) -> OccupancyReport {
    let mut intervals = BTreeMap::new();
    let mut flagged = Vec::new();
    for (c, js) in seq.occupancy() {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &j in js {
            match runs.last_mut() {
                Some((_, end)) if *end + 1 == j => *end = j,
                _ => runs.push((j, j)),
            }
        }
        if runs.len() > 1 {
            flagged.push(c.clone());
        }
        intervals.insert(c.clone(), runs);
    }
    OccupancyReport { intervals, flagged }
}

/// For `J_β = [k, l]`: the curve removed when `β` entered (if `k > 0`) and
/// the curve inserted when it left (if `l < n`).
pub fn predecessor_successor(
    seq: &MoveSequence,
    beta: &CurveId,
) -> Result<(Option<CurveId>, Option<CurveId>)> {
    let js = seq
        .occupancy()
        .get(beta)
        .ok_or_else(|| Error::Structural(format!("{beta} never occurs in the sequence")))?;
    let (k, l) = (
        *js.first().expect("nonempty"),
        *js.last().expect("nonempty"),
    );
    if l - k + 1 != js.len() {
        return Err(Error::Structural(format!(
            "occupancy of {beta} is not an interval"
        )));
    }
    let pred = (k > 0).then(|| seq.moves()[k - 1].removed.clone());
    let succ = (l < seq.len()).then(|| seq.moves()[l].inserted.clone());
    Ok((pred, succ))
}
