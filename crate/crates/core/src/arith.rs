//! Exact arithmetic substrate: extended rationals (with the single point at
//! infinity `1/0`) and 2x2 integer matrices acting by Möbius transformations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An irreducible fraction `num/den` with `den >= 0`, or infinity `1/0`.
///
/// The sign is carried by the numerator, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigInt,
    den: BigInt,
}

impl ExtRational {
    /// Builds the reduced fraction `num/den`. Any `k/0` with `k != 0`
    /// collapses to `1/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self::infinity());
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        ExtRational { num, den }
    }

    pub fn infinity() -> Self {
        ExtRational {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExtRational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// Builds a fraction from a vector `(x, y)` read as the slope `x/y`.
    pub fn from_vector(x: BigInt, y: BigInt) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        Self::new(x, y)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// True for `0/1`, positive fractions and `1/0`.
    pub fn is_non_negative(&self) -> bool {
        !self.num.is_negative()
    }

    /// `num * other.den - den * other.num`.
    pub fn cross(&self, other: &ExtRational) -> BigInt {
        &self.num * &other.den - &self.den * &other.num
    }

    /// Farey adjacency: `|ps - qr| = 1`.
    pub fn is_farey_neighbor(&self, other: &ExtRational) -> bool {
        self.cross(other).abs().is_one()
    }

    /// Lossy conversion used only by renderers; infinity maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        ratio_to_f64(&self.num, &self.den)
    }
}

pub(crate) fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    match (num.to_f64(), den.to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both down so the quotient stays representable.
            let shift = num.bits().max(den.bits()).saturating_sub(1000);
            let n = (num >> shift).to_f64().unwrap_or(0.0);
            let d = (den >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let offset = s.len() - s.trim_start().len();
        match trimmed.split_once('/') {
            Some((p, q)) => {
                let num = parse_bigint(p, offset)?;
                let den = parse_bigint(q, offset + p.len() + 1)?;
                Self::new(num, den)
            }
            None => Ok(Self::integer(parse_bigint(trimmed, offset)?)),
        }
    }
}

pub(crate) fn parse_bigint(s: &str, position: usize) -> Result<BigInt> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    if t.is_empty() {
        return Err(Error::parse(position, "expected an integer"));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::parse(position + lead, format!("invalid integer {t:?}")))
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Farey sum `(p + r)/(q + s)`.
///
/// Both arguments must be non-negative (or infinite) and distinct.
pub fn mediant(x: &ExtRational, y: &ExtRational) -> Result<ExtRational> {
    if x == y {
        return Err(Error::UndefinedMediant(format!("{x} (+) {y}: equal arguments")));
    }
    if !x.is_non_negative() || !y.is_non_negative() {
        return Err(Error::UndefinedMediant(format!(
            "{x} (+) {y}: arguments must be non-negative"
        )));
    }
    let num = &x.num + &y.num;
    let den = &x.den + &y.den;
    if x.is_farey_neighbor(y) {
        // already coprime
        Ok(ExtRational { num, den })
    } else {
        ExtRational::new(num, den)
    }
}

/// A 2x2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn minus_identity() -> Self {
        Self::new(-1, 0, 0, -1)
    }

    /// `R = [[1, 1], [0, 1]]`, the map `z -> z + 1`.
    pub fn r() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `L = [[1, 0], [1, 1]]`.
    pub fn l() -> Self {
        Self::new(1, 0, 1, 1)
    }

    /// `S = [[0, -1], [1, 0]]`, the map `z -> -1/z`.
    pub fn s() -> Self {
        Self::new(0, -1, 1, 0)
    }

    pub fn r_pow(k: impl Into<BigInt>) -> Self {
        Self::new(1, k, 0, 1)
    }

    pub fn l_pow(k: impl Into<BigInt>) -> Self {
        Self::new(1, 0, k, 1)
    }

    /// `[[c, -1], [1, 0]]`, one factor of a negative continued fraction matrix.
    pub fn negative_factor(c: impl Into<BigInt>) -> Self {
        Self::new(c, -1, 1, 0)
    }

    /// `[[a, 1], [1, 0]]`, one factor of a positive continued fraction matrix.
    pub fn positive_factor(a: impl Into<BigInt>) -> Self {
        Self::new(a, 1, 1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == Self::minus_identity()
    }

    /// Inverse of a unimodular matrix. Returns `None` unless `det = ±1`.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return None;
        }
        Some(Mat2 {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }

    /// Integer power; negative exponents require a unimodular matrix.
    pub fn pow(&self, exp: &BigInt) -> Option<Self> {
        let (mut base, mut e) = if exp.is_negative() {
            (self.inverse()?, -exp)
        } else {
            (self.clone(), exp.clone())
        };
        let mut acc = Self::identity();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if e.is_odd() {
                acc = &acc * &base;
            }
            base = &base * &base;
            e /= &two;
        }
        Some(acc)
    }

    pub fn apply_vector(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (
            &self.a * x + &self.b * y,
            &self.c * x + &self.d * y,
        )
    }

    pub fn first_column(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.c.clone())
    }

    /// Equality in PSL2: entrywise up to a global sign.
    pub fn psl_eq(&self, other: &Mat2) -> bool {
        self == other || *self == -other.clone()
    }

    /// Canonical PSL2 representative: the first non-zero entry among
    /// `(a, c, b, d)` is positive.
    pub fn psl_canonical(&self) -> Mat2 {
        let lead = [&self.a, &self.c, &self.b, &self.d]
            .into_iter()
            .find(|x| !x.is_zero());
        match lead {
            Some(x) if x.is_negative() => -self.clone(),
            _ => self.clone(),
        }
    }

    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }
}

/// Product of a sequence of matrices, left to right.
pub fn product<I: IntoIterator<Item = Mat2>>(factors: I) -> Mat2 {
    factors
        .into_iter()
        .fold(Mat2::identity(), |acc, m| &acc * &m)
}

/// Exact matrix product.
pub fn mat_mul(m1: &Mat2, m2: &Mat2) -> Mat2 {
    Mat2 {
        a: &m1.a * &m2.a + &m1.b * &m2.c,
        b: &m1.a * &m2.b + &m1.b * &m2.d,
        c: &m1.c * &m2.a + &m1.d * &m2.c,
        d: &m1.c * &m2.b + &m1.d * &m2.d,
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        mat_mul(self, rhs)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        mat_mul(&self, &rhs)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

/// Möbius action `z -> (az + b)/(cz + d)` on the rational absolute.
pub fn apply_moebius(m: &Mat2, x: &ExtRational) -> Result<ExtRational> {
    let (p, q) = m.apply_vector(x.num(), x.den());
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateImage(x.to_string()));
    }
    ExtRational::new(p, q)
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Parses `[[a,b],[c,d]]` (whitespace tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::with_capacity(4);
        let mut depth = 0usize;
        let mut start = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '[' => {
                    depth += 1;
                    if depth > 2 {
                        return Err(Error::parse(i, "too many nested brackets"));
                    }
                }
                ']' | ',' => {
                    if let Some(st) = start.take() {
                        entries.push(parse_bigint(&s[st..i], st)?);
                    }
                    if ch == ']' {
                        depth = depth
                            .checked_sub(1)
                            .ok_or_else(|| Error::parse(i, "unbalanced ']'"))?;
                    }
                }
                c if c.is_whitespace() => {}
                _ => {
                    if depth != 2 {
                        return Err(Error::parse(i, "entry outside a matrix row"));
                    }
                    if start.is_none() {
                        start = Some(i);
                    }
                }
            }
        }
        if depth != 0 {
            return Err(Error::parse(s.len(), "unbalanced '['"));
        }
        let [a, b, c, d]: [BigInt; 4] = entries
            .try_into()
            .map_err(|v: Vec<BigInt>| Error::parse(0, format!("expected 4 entries, got {}", v.len())))?;
        Ok(Mat2 { a, b, c, d })
    }
}

fn bigint_to_json(x: &BigInt) -> serde_json::Number {
    x.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [
            [bigint_to_json(&self.a), bigint_to_json(&self.b)],
            [bigint_to_json(&self.c), bigint_to_json(&self.d)],
        ];
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[serde_json::Number; 2]; 2]>::deserialize(deserializer)?;
        let conv = |n: &serde_json::Number| {
            n.to_string()
                .parse::<BigInt>()
                .map_err(|_| D::Error::custom(format!("matrix entry {n} is not an integer")))
        };
        Ok(Mat2 {
            a: conv(&rows[0][0])?,
            b: conv(&rows[0][1])?,
            c: conv(&rows[1][0])?,
            d: conv(&rows[1][1])?,
        })
    }
}
