//! Slopes on the once-punctured torus as extended rationals, and the integer
//! unimodular group acting on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A slope `p/q` in lowest terms with `q >= 0`; `1/0` is the slope `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `p/q` to canonical form. `0/0` is rejected.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::domain("0/0 is not a slope"));
        }
        Ok(Slope::from_vector(p, q))
    }

    /// Canonical slope of a nonzero integer vector.
    pub(crate) fn from_vector(p: BigInt, q: BigInt) -> Slope {
        debug_assert!(!(p.is_zero() && q.is_zero()));
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Slope { p, q }
    }

    /// Canonical slope of a vector already known to be primitive with
    /// `q > 0` or `(p, q) = (1, 0)`, skipping the gcd.
    pub(crate) fn from_primitive(p: BigInt, q: BigInt) -> Slope {
        debug_assert!(p.gcd(&q).is_one() && (q.is_positive() || (q.is_zero() && p.is_one())));
        Slope { p, q }
    }

    pub fn infinity() -> Slope {
        Slope {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Slope {
        Slope {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    /// `p·s − q·r` for `self = p/q`, `other = r/s`.
    pub fn det(&self, other: &Slope) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    /// `⌊p/q⌋`; `None` for `∞`.
    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            None
        } else {
            Some(self.p.div_floor(&self.q))
        }
    }

    /// The two slopes completing the Farey triangles on the edge `self, other`
    /// (vector sum and difference). Requires `|det| = 1`.
    pub(crate) fn triangle_apexes(&self, other: &Slope) -> (Slope, Slope) {
        (
            Slope::from_vector(&self.p + &other.p, &self.q + &other.q),
            Slope::from_vector(&self.p - &other.p, &self.q - &other.q),
        )
    }

    /// `max(|p|, |q|)`.
    pub fn height(&self) -> BigInt {
        self.p.abs().max(self.q.clone())
    }

    /// Order on the real line with `∞` above every finite slope.
    pub fn cmp_real(&self, other: &Slope) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => match small([&self.p, &self.q, &other.p, &other.q]) {
                Some([a, b, c, d]) => (a * d).cmp(&(c * b)),
                None => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
            },
        }
    }

    /// Approximate value; `∞` maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.is_infinite() {
            return f64::INFINITY;
        }
        match (self.p.to_f64(), self.q.to_f64()) {
            (Some(p), Some(q)) if p.is_finite() && q.is_finite() && q != 0.0 => p / q,
            _ => {
                // Scale both down before dividing.
                let shift = self.q.bits().saturating_sub(900);
                let p = (&self.p >> shift).to_f64().unwrap_or(f64::NAN);
                let q = (&self.q >> shift).to_f64().unwrap_or(f64::NAN);
                p / q
            }
        }
    }
}

/// Total order by value, with `∞` last.
impl Ord for Slope {
    fn cmp(&self, other: &Slope) -> Ordering {
        self.cmp_real(other)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Slope) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if s == "inf" || s == "∞" || s == "1/0" {
            return Ok(Slope::infinity());
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p
            .parse()
            .map_err(|_| Error::parse(format!("bad slope numerator in {s:?}")))?;
        let q: BigInt = q
            .parse()
            .map_err(|_| Error::parse(format!("bad slope denominator in {s:?}")))?;
        Slope::new(p, q).map_err(|_| Error::parse(format!("{s:?} is not a slope")))
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Integer 2×2 matrix of determinant ±1 acting by `p/q ↦ (ap + bq)/(cp + dq)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Mat2> {
        let m = Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        if m.det().abs() != BigInt::one() {
            return Err(Error::domain(format!("matrix {m} is not unimodular")));
        }
        Ok(m)
    }

    pub fn identity() -> Mat2 {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Entries `(a, b, c, d)`.
    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// Image of a slope. A unimodular matrix keeps vectors primitive, so
    /// only the sign needs fixing.
    pub fn apply(&self, s: &Slope) -> Slope {
        if let Some([a, b, c, d, p, q]) = small([&self.a, &self.b, &self.c, &self.d, &s.p, &s.q]) {
            let (x, y) = (a * p + b * q, c * p + d * q);
            let (x, y) = if y < 0 || (y == 0 && x < 0) {
                (-x, -y)
            } else {
                (x, y)
            };
            return Slope::from_primitive(BigInt::from(x), BigInt::from(y));
        }
        let (x, y) = (
            &self.a * &s.p + &self.b * &s.q,
            &self.c * &s.p + &self.d * &s.q,
        );
        if y.is_negative() || (y.is_zero() && x.is_negative()) {
            Slope::from_primitive(-x, -y)
        } else {
            Slope::from_primitive(x, y)
        }
    }

    pub fn compose(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> Mat2 {
        let det = self.det();
        Mat2 {
            a: &det * &self.d,
            b: -(&det * &self.b),
            c: -(&det * &self.c),
            d: &det * &self.a,
        }
    }

    /// The determinant-one matrix sending `alpha` to `∞`, with rows
    /// `(s, −r)` and `(−q, p)` where `(s, r)` is the extended-gcd solution of
    /// `p·s − q·r = 1`. For `alpha = ∞` this is the identity.
    pub fn normalizing(alpha: &Slope) -> Mat2 {
        if let Some([p, q]) = small([&alpha.p, &alpha.q]) {
            let (s, r) = machine_normalizer(p, q);
            return Mat2 {
                a: s.into(),
                b: (-r).into(),
                c: (-q).into(),
                d: p.into(),
            };
        }
        let e = alpha.p.extended_gcd(&alpha.q);
        // e.x·p + e.y·q = gcd = 1 (gcd is nonnegative and the slope is reduced).
        let (s, r) = (e.x, -e.y);
        Mat2 {
            a: s,
            b: -r,
            c: -alpha.q.clone(),
            d: alpha.p.clone(),
        }
    }

    /// Positive Dehn twist about `alpha`: conjugate of `z ↦ z + 1` by
    /// [`Mat2::normalizing`].
    pub fn dehn_twist(alpha: &Slope) -> Mat2 {
        let m = Mat2::normalizing(alpha);
        let t = Mat2 {
            a: BigInt::one(),
            b: BigInt::one(),
            c: BigInt::zero(),
            d: BigInt::one(),
        };
        m.inverse().compose(&t).compose(&m)
    }
}

/// The values as `i128` when each fits in `i64`, so that products of two
/// and sums of two products cannot overflow.
pub(crate) fn small<const N: usize>(xs: [&BigInt; N]) -> Option<[i128; N]> {
    let mut out = [0i128; N];
    for (o, x) in out.iter_mut().zip(xs) {
        *o = i128::from(x.to_i64()?);
    }
    Some(out)
}

/// `(s, r)` with `p·s − q·r = 1` for a reduced slope `p/q`, matching the
/// extended-gcd choice of [`Mat2::normalizing`].
pub(crate) fn machine_normalizer(p: i128, q: i128) -> (i128, i128) {
    // Same recurrence and truncating division as the big-integer routine,
    // so both produce identical matrices.
    let (mut r, mut s, mut t) = ((q, p), (0i128, 1i128), (1i128, 0i128));
    while r.0 != 0 {
        let k = r.1 / r.0;
        r = (r.1 - k * r.0, r.0);
        s = (s.1 - k * s.0, s.0);
        t = (t.1 - k * t.0, t.0);
    }
    let sign = if r.1 >= 0 { 1 } else { -1 };
    // x·p + y·q = 1 with x = s.1, y = t.1.
    (sign * s.1, -sign * t.1)
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
