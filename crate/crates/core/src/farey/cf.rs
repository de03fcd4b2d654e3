//! Continued fractions, coefficient streams and end invariants.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::slope::Slope;
use crate::error::{Error, Result};

/// Canonical continued fraction `[a0; a1, …, an]` of a slope, with `ai >= 1`
/// for `i >= 1` and `an >= 2` when `n >= 1`. `∞` has the empty expansion.
pub fn cf_expand(x: &Slope) -> Vec<BigInt> {
    let (mut p, mut q) = (x.p().clone(), x.q().clone());
    let mut out = Vec::new();
    while !q.is_zero() {
        let (a, r) = p.div_mod_floor(&q);
        out.push(a);
        p = q;
        q = r;
    }
    out
}

/// Value of a finite coefficient list.
pub fn cf_value(terms: &[BigInt]) -> Slope {
    let mut conv = Convergents::new();
    let mut last = Slope::infinity();
    for t in terms {
        last = conv.push(t);
    }
    last
}

/// Running convergents `h_k/k_k` of a coefficient sequence, starting from
/// `c_{-1} = 1/0`.
#[derive(Debug, Clone)]
pub struct Convergents {
    h: (BigInt, BigInt),
    k: (BigInt, BigInt),
}

impl Convergents {
    pub fn new() -> Convergents {
        // (h_{-2}, h_{-1}) = (0, 1), (k_{-2}, k_{-1}) = (1, 0)
        Convergents {
            h: (BigInt::zero(), BigInt::one()),
            k: (BigInt::one(), BigInt::zero()),
        }
    }

    /// Feeds the next coefficient and returns the new convergent.
    pub fn push(&mut self, a: &BigInt) -> Slope {
        let h = a * &self.h.1 + &self.h.0;
        let k = a * &self.k.1 + &self.k.0;
        self.h = (std::mem::replace(&mut self.h.1, h.clone()), h.clone());
        self.k = (std::mem::replace(&mut self.k.1, k.clone()), k.clone());
        Slope::from_vector(h, k)
    }

    /// The most recent convergent.
    pub fn current(&self) -> Slope {
        Slope::from_vector(self.h.1.clone(), self.k.1.clone())
    }
}

impl Default for Convergents {
    fn default() -> Self {
        Convergents::new()
    }
}

/// A coefficient list `[a0; a1, …]` whose last `period.len()` terms (if any)
/// repeat forever. With an empty period it is a finite expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfStream {
    prefix: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl CfStream {
    pub fn new(prefix: Vec<BigInt>, period: Vec<BigInt>) -> Result<CfStream> {
        if prefix.is_empty() && period.is_empty() {
            return Err(Error::domain("empty coefficient list"));
        }
        let tail_start = usize::from(!prefix.is_empty());
        let tail = prefix
            .iter()
            .skip(tail_start)
            .chain(period.iter().skip(usize::from(prefix.is_empty())));
        if let Some(bad) = tail.clone().find(|a| !a.is_positive()) {
            return Err(Error::domain(format!(
                "coefficient {bad} after a0 must be positive"
            )));
        }
        let (mut prefix, mut period) = (prefix, period);
        if period.is_empty() {
            return Ok(CfStream { prefix, period });
        }
        // Shortest period, then fold repeated prefix terms into it (keeping a0).
        let n = period.len();
        if let Some(k) = (1..n).find(|&k| n % k == 0 && (k..n).all(|i| period[i] == period[i - k]))
        {
            period.truncate(k);
        }
        while prefix.len() > 1 && prefix.last() == period.last() {
            prefix.pop();
            period.rotate_right(1);
        }
        if prefix.is_empty() {
            prefix.push(period[0].clone());
            period.rotate_left(1);
        }
        Ok(CfStream { prefix, period })
    }

    /// The golden-mean stream `[1; 1, 1, …]`.
    pub fn golden() -> CfStream {
        CfStream {
            prefix: vec![BigInt::one()],
            period: vec![BigInt::one()],
        }
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Term `i`, or `None` past the end of a finite expansion.
    pub fn term(&self, i: usize) -> Option<&BigInt> {
        if i < self.prefix.len() {
            self.prefix.get(i)
        } else if self.period.is_empty() {
            None
        } else {
            self.period.get((i - self.prefix.len()) % self.period.len())
        }
    }

    /// First `n` terms (fewer for a short finite expansion).
    pub fn terms(&self, n: usize) -> Vec<BigInt> {
        (0..n).map_while(|i| self.term(i).cloned()).collect()
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[&BigInt]) -> fmt::Result {
    write!(f, "[")?;
    for (i, t) in terms.iter().enumerate() {
        match i {
            0 => write!(f, "{t}")?,
            1 => write!(f, ";{t}")?,
            _ => write!(f, ",{t}")?,
        }
    }
    Ok(())
}

impl fmt::Display for CfStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all: Vec<&BigInt> = self.prefix.iter().chain(&self.period).collect();
        write_terms(f, &all)?;
        write!(f, "]")?;
        if !self.period.is_empty() {
            write!(f, "(period:{})", self.period.len())?;
        }
        Ok(())
    }
}

/// Parsed form of `"[a0;a1,…]"`, `"[a0;a1,…](period:k)"` and `"[a0;a1,…,...]"`.
enum ParsedList {
    Finite(Vec<BigInt>),
    Periodic(Vec<BigInt>, usize),
    Open(Vec<BigInt>),
}

fn parse_list(s: &str) -> Result<ParsedList> {
    let s = s.trim();
    let body_end = s
        .find(']')
        .ok_or_else(|| Error::parse(format!("missing ']' in {s:?}")))?;
    let body = s
        .strip_prefix('[')
        .ok_or_else(|| Error::parse(format!("expected '[' in {s:?}")))?
        .get(..body_end - 1)
        .unwrap_or("");
    let suffix = s[body_end + 1..].trim();

    let mut items: Vec<&str> = Vec::new();
    let (head, rest) = match body.split_once(';') {
        Some((h, r)) => (h, Some(r)),
        None => (body, None),
    };
    items.push(head.trim());
    if let Some(rest) = rest {
        items.extend(rest.split(',').map(str::trim));
    }
    let open = items.last() == Some(&"...") || items.last() == Some(&"…");
    if open {
        items.pop();
    }
    let terms = items
        .iter()
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| Error::parse(format!("bad coefficient {t:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;

    if suffix.is_empty() {
        return Ok(if open {
            ParsedList::Open(terms)
        } else {
            ParsedList::Finite(terms)
        });
    }
    if open {
        return Err(Error::parse("an open list cannot also declare a period"));
    }
    let inner = suffix
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .and_then(|x| x.trim().strip_prefix("period"))
        .and_then(|x| x.trim().strip_prefix(':'))
        .ok_or_else(|| Error::parse(format!("bad period suffix {suffix:?}")))?;
    let k: usize = inner
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad period length {inner:?}")))?;
    if k == 0 || k >= terms.len() {
        return Err(Error::parse(format!(
            "period length {k} must be in 1..{}",
            terms.len()
        )));
    }
    Ok(ParsedList::Periodic(terms, k))
}

impl FromStr for CfStream {
    type Err = Error;

    fn from_str(s: &str) -> Result<CfStream> {
        let to_parse = |e: Error| match e {
            Error::Domain(m) => Error::Parse(m),
            other => other,
        };
        match parse_list(s)? {
            ParsedList::Finite(t) => CfStream::new(t, Vec::new()).map_err(to_parse),
            ParsedList::Periodic(mut t, k) => {
                let period = t.split_off(t.len() - k);
                CfStream::new(t, period).map_err(to_parse)
            }
            ParsedList::Open(_) => Err(Error::parse(
                "open coefficient lists are explicit coefficients, not streams",
            )),
        }
    }
}

impl Serialize for CfStream {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One end of a punctured-torus group, at the level of its combinatorial
/// description.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EndInvariant {
    /// A rational slope, used as a formal endpoint.
    RationalSlope(Slope),
    /// A finite or eventually periodic continued fraction.
    CfStream(CfStream),
    /// Known leading coefficients of an irrational whose tail is not given.
    ExplicitCoefficients(Vec<BigInt>),
}

impl EndInvariant {
    pub fn explicit(terms: Vec<BigInt>) -> Result<EndInvariant> {
        if terms.is_empty() {
            return Err(Error::domain("explicit coefficient list is empty"));
        }
        if let Some(bad) = terms.iter().skip(1).find(|a| !a.is_positive()) {
            return Err(Error::domain(format!(
                "coefficient {bad} after a0 must be positive"
            )));
        }
        Ok(EndInvariant::ExplicitCoefficients(terms))
    }

    /// The slope, when this end is rational.
    pub fn as_rational(&self) -> Option<Slope> {
        match self {
            EndInvariant::RationalSlope(s) => Some(s.clone()),
            EndInvariant::CfStream(c) if !c.is_periodic() => Some(cf_value(c.prefix())),
            _ => None,
        }
    }

    /// Term source for an irrational end.
    pub(crate) fn irrational(&self) -> Option<Irrational<'_>> {
        match self {
            EndInvariant::CfStream(c) if c.is_periodic() => Some(Irrational::Periodic(c)),
            EndInvariant::ExplicitCoefficients(t) => Some(Irrational::Prefix(t)),
            _ => None,
        }
    }
}

impl fmt::Display for EndInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndInvariant::RationalSlope(s) => write!(f, "{s}"),
            EndInvariant::CfStream(c) => write!(f, "{c}"),
            EndInvariant::ExplicitCoefficients(t) => {
                write_terms(f, &t.iter().collect::<Vec<_>>())?;
                write!(f, "{}...]", if t.len() == 1 { ";" } else { "," })
            }
        }
    }
}

impl FromStr for EndInvariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<EndInvariant> {
        let t = s.trim();
        if !t.starts_with('[') {
            return Ok(EndInvariant::RationalSlope(t.parse()?));
        }
        match parse_list(t)? {
            ParsedList::Open(terms) => {
                EndInvariant::explicit(terms).map_err(|e| Error::parse(e.to_string()))
            }
            _ => Ok(EndInvariant::CfStream(t.parse()?)),
        }
    }
}

impl Serialize for EndInvariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Coefficients of an irrational end: either an infinite periodic stream or a
/// known prefix of an unknown one.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Irrational<'a> {
    Periodic(&'a CfStream),
    Prefix(&'a [BigInt]),
}

/// Raised when the known coefficients of an end do not settle a question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OutOfTerms;

impl<'a> Irrational<'a> {
    pub(crate) fn term(&self, i: usize) -> Option<&'a BigInt> {
        match *self {
            Irrational::Periodic(c) => c.term(i),
            Irrational::Prefix(t) => t.get(i),
        }
    }

    /// Compares the irrational value with a rational slope. `∞` counts as
    /// larger than every real.
    pub(crate) fn cmp_rational(&self, r: &Slope) -> std::result::Result<Ordering, OutOfTerms> {
        if r.is_infinite() {
            return Ok(Ordering::Less);
        }
        let b = cf_expand(r);
        let last = b.len() - 1;
        for (i, bi) in b.iter().enumerate() {
            let t = self.term(i).ok_or(OutOfTerms)?;
            // Complete quotient of x at i lies in (t, t + 1); that of r lies in
            // (b_i, b_i + 1) for i < last and equals b_i at i = last.
            let ord = if i == last {
                if t >= bi {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            } else {
                match t.cmp(bi) {
                    Ordering::Equal => continue,
                    o => o,
                }
            };
            return Ok(if i % 2 == 0 { ord } else { ord.reverse() });
        }
        unreachable!("loop returns at the last coefficient")
    }

    /// Convergent `c_k` for `k >= 0`.
    pub(crate) fn convergents(&self) -> ConvergentIter<'a> {
        ConvergentIter {
            source: *self,
            index: 0,
            conv: Convergents::new(),
        }
    }
}

pub(crate) struct ConvergentIter<'a> {
    source: Irrational<'a>,
    index: usize,
    conv: Convergents,
}

impl Iterator for ConvergentIter<'_> {
    type Item = Slope;

    fn next(&mut self) -> Option<Slope> {
        let t = self.source.term(self.index)?;
        self.index += 1;
        Some(self.conv.push(t))
    }
}
