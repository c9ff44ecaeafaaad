//! Positive and negative continued fractions, their convergents and
//! matrices, the conversion between the two, and the bamboo triangulation
//! of a fraction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{parse_bigint, product, ExtRational, Mat2};
use crate::error::{Error, Result};
use crate::triangulation::{dual_tree, farey_labels, quiddity_of, Triangle, Triangulation};

/// `[a_1, ..., a_{2m}]` with every `a_i >= 1` and an even number of terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveCF(Vec<BigInt>);

/// `[[c_1, ..., c_k]]` with every `c_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegativeCF(Vec<BigInt>);

impl PositiveCF {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() % 2 == 1 {
            return Err(Error::MalformedContinuedFraction(format!(
                "positive expansion needs an even number of terms, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|a| !a.is_positive()) {
            return Err(Error::MalformedContinuedFraction("terms must be at least 1".into()));
        }
        Ok(PositiveCF(coeffs))
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| x.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl NegativeCF {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::MalformedContinuedFraction("empty negative expansion".into()));
        }
        if coeffs.iter().any(|c| c < &BigInt::from(2)) {
            return Err(Error::MalformedContinuedFraction("terms must be at least 2".into()));
        }
        Ok(NegativeCF(coeffs))
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| x.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn join(xs: &[BigInt]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for PositiveCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.0))
    }
}

impl fmt::Display for NegativeCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}]]", join(&self.0))
    }
}

fn parse_bracketed(s: &str, open: &str, close: &str) -> Result<Vec<BigInt>> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let inner = t
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::parse(lead, format!("expected {open}...{close}")))?;
    let mut offset = lead + open.len();
    let mut out = Vec::new();
    if inner.trim().is_empty() {
        return Ok(out);
    }
    for part in inner.split(',') {
        let pad = part.len() - part.trim_start().len();
        out.push(parse_bigint(part.trim(), offset + pad)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

impl FromStr for PositiveCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with("[[") {
            return Err(Error::parse(0, "negative expansion where a positive one was expected"));
        }
        PositiveCF::new(parse_bracketed(s, "[", "]")?)
    }
}

impl FromStr for NegativeCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NegativeCF::new(parse_bracketed(s, "[[", "]]")?)
    }
}

fn require_above_one(x: &ExtRational) -> Result<()> {
    if x.is_infinite() || x.num() <= x.den() {
        return Err(Error::OutOfDomain(x.to_string()));
    }
    Ok(())
}

/// Euclidean expansion, with an odd-length tail `a_n` rewritten as `a_n - 1, 1`.
pub fn expand_positive(x: &ExtRational) -> Result<PositiveCF> {
    require_above_one(x)?;
    let (mut p, mut q) = (x.num().clone(), x.den().clone());
    let mut a = Vec::new();
    while !q.is_zero() {
        let (t, r) = p.div_rem(&q);
        a.push(t);
        p = q;
        q = r;
    }
    if a.len() % 2 == 1 {
        let last = a.pop().unwrap();
        a.push(last - 1);
        a.push(BigInt::one());
    }
    PositiveCF::new(a)
}

/// Ceiling expansion `x = c_1 - 1/(c_2 - 1/...)`.
pub fn expand_negative(x: &ExtRational) -> Result<NegativeCF> {
    require_above_one(x)?;
    let (mut p, mut q) = (x.num().clone(), x.den().clone());
    let mut c = Vec::new();
    loop {
        let (t, r) = p.div_rem(&q);
        if r.is_zero() {
            c.push(t);
            break;
        }
        let ceil = t + 1;
        // 1/(c - p/q) = q/(cq - p)
        let next_p = q.clone();
        q = &ceil * &q - &p;
        p = next_p;
        c.push(ceil);
    }
    NegativeCF::new(c)
}

/// Value of `[a_1, ..., a_n]` for any positive terms, odd lengths included.
pub fn evaluate_positive(a: &[BigInt]) -> Result<ExtRational> {
    if a.is_empty() || a.iter().any(|x| !x.is_positive()) {
        return Err(Error::MalformedContinuedFraction(format!("[{}]", join(a))));
    }
    let (p, q) = matrix_positive(a).first_column();
    ExtRational::new(p, q)
}

/// Value of the tower `c_1 - 1/(c_2 - 1/(... - 1/c_k))` for any integers.
///
/// Fails with the 1-based level whose tail vanishes.
pub fn evaluate_negative(c: &[BigInt]) -> Result<ExtRational> {
    let Some(last) = c.last() else {
        return Err(Error::MalformedContinuedFraction("[[]]".into()));
    };
    let mut value = BigRational::from_integer(last.clone());
    for level in (1..c.len()).rev() {
        if value.is_zero() {
            return Err(Error::DivisionByZeroTower(level + 1));
        }
        value = BigRational::from_integer(c[level - 1].clone()) - value.recip();
    }
    ExtRational::new(value.numer().clone(), value.denom().clone())
}

/// `p_i/q_i` from `p_i = a_i p_{i-1} + p_{i-2}`, `q_i = a_i q_{i-1} + q_{i-2}`.
pub fn convergents_positive(cf: &PositiveCF) -> Vec<ExtRational> {
    convergent_pairs(cf.coeffs(), true)
        .into_iter()
        .map(|(p, q)| ExtRational::new(p, q).expect("convergents are nonzero"))
        .collect()
}

/// `p~_i/q~_i` from `p~_i = c_i p~_{i-1} - p~_{i-2}` and the same for `q~`.
pub fn convergents_negative(cf: &NegativeCF) -> Vec<ExtRational> {
    convergent_pairs(cf.coeffs(), false)
        .into_iter()
        .map(|(p, q)| ExtRational::new(p, q).expect("convergents are nonzero"))
        .collect()
}

/// Unreduced numerator/denominator pairs of the convergents.
pub fn convergent_pairs(a: &[BigInt], positive: bool) -> Vec<(BigInt, BigInt)> {
    let sign = if positive { BigInt::one() } else { -BigInt::one() };
    let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
    let (mut q2, mut q1) = (sign.clone(), BigInt::zero());
    let mut out = Vec::with_capacity(a.len());
    for x in a {
        let p = x * &p1 + &sign * &p2;
        let q = x * &q1 + &sign * &q2;
        p2 = std::mem::replace(&mut p1, p.clone());
        q2 = std::mem::replace(&mut q1, q.clone());
        out.push((p, q));
    }
    out
}

/// `prod [[a_i, 1], [1, 0]]`.
pub fn matrix_positive(a: &[BigInt]) -> Mat2 {
    product(a.iter().cloned().map(Mat2::positive_factor))
}

/// `prod [[c_i, -1], [1, 0]]` for any integers.
pub fn matrix_negative(c: &[BigInt]) -> Mat2 {
    product(c.iter().cloned().map(Mat2::negative_factor))
}

/// `M+(a) = M(c) R` for the two expansions of `x`.
pub fn check_mplus_equals_m_r(x: &ExtRational) -> Result<bool> {
    let plus = matrix_positive(expand_positive(x)?.coeffs());
    let minus = matrix_negative(expand_negative(x)?.coeffs());
    Ok(plus == minus * Mat2::r())
}

/// `(a_1 + 1, 2^(a_2 - 1), a_3 + 2, 2^(a_4 - 1), ...)` where `2^(t)` is a run
/// of `t` twos.
pub fn positive_to_negative(cf: &PositiveCF) -> NegativeCF {
    let two = BigInt::from(2);
    let mut c = Vec::new();
    for (i, pair) in cf.coeffs().chunks(2).enumerate() {
        let bump: i32 = if i == 0 { 1 } else { 2 };
        c.push(&pair[0] + bump);
        let mut run: BigInt = &pair[1] - 1;
        while run.is_positive() {
            c.push(two.clone());
            run -= 1;
        }
    }
    NegativeCF::new(c).expect("conversion yields terms >= 2")
}

/// Read `c` back as heads `a_odd + 2` (the first one `+ 1`), each followed by
/// a run of twos of length `a_even - 1`.
pub fn negative_to_positive(cf: &NegativeCF) -> PositiveCF {
    let two = BigInt::from(2);
    let c = cf.coeffs();
    let mut a = Vec::new();
    let mut i = 0;
    while i < c.len() {
        let bump: i32 = if i == 0 { 1 } else { 2 };
        a.push(&c[i] - bump);
        i += 1;
        let start = i;
        while i < c.len() && c[i] == two {
            i += 1;
        }
        a.push(BigInt::from(i - start + 1));
    }
    PositiveCF::new(a).expect("every negative expansion parses")
}

/// The bamboo triangulation of `[a_1, ..., a_{2m}]` with its Farey labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bamboo {
    pub triangulation: Triangulation,
    /// Labels by vertex, `1/0` at vertex 1 and `0/1` at vertex `n`.
    pub labels: Vec<ExtRational>,
    /// Number of upper vertices after vertex 1; vertex `k + 1` is the
    /// second ear and carries the value of the fraction.
    pub k: usize,
}

impl Bamboo {
    pub fn n(&self) -> usize {
        self.triangulation.n()
    }

    pub fn value(&self) -> &ExtRational {
        &self.labels[self.k]
    }

    /// Labels at vertices `2..=k+1`.
    pub fn upper_labels(&self) -> &[ExtRational] {
        &self.labels[1..=self.k]
    }
}

/// Start from the segment `1/0 -- 0/1`; the `a_1` triangles of the first
/// group pivot on the upper vertex and add lower vertices, the `a_2` of the
/// next pivot on the newest lower vertex and add upper vertices, and so on.
/// Upper vertex `U_j` is numbered `j + 1`, lower vertex `D_j` is `n - j`.
pub fn bamboo_triangulation(cf: &PositiveCF) -> Result<Bamboo> {
    if cf.is_empty() {
        return Err(Error::MalformedContinuedFraction("[]".into()));
    }
    let total: BigInt = cf.coeffs().iter().sum();
    let total = usize::try_from(total)
        .map_err(|_| Error::OutOfDomain(format!("{cf} is too long to triangulate")))?;
    let n = total + 2;
    let (mut upper, mut lower) = (0usize, 0usize);
    let mut tris: Vec<Triangle> = Vec::with_capacity(n - 2);
    for (i, a) in cf.coeffs().iter().enumerate() {
        let count = a.to_usize().expect("bounded by the total");
        for _ in 0..count {
            if i % 2 == 0 {
                tris.push([upper + 1, n - lower, n - lower - 1]);
                lower += 1;
            } else {
                tris.push([n - lower, upper + 1, upper + 2]);
                upper += 1;
            }
        }
    }
    let triangulation = Triangulation::new(n, tris)?;
    let labels = farey_labels(&triangulation, (1, n))?;
    Ok(Bamboo {
        triangulation,
        labels,
        k: upper,
    })
}

/// Convergents read off the zigzag of a bamboo with `1/0` at vertex 1 and
/// `0/1` at vertex `n`.
///
/// Walking the dual path from the triangle on side `(1, n)`, each triangle
/// adds one vertex; a vertex is a convergent when the next added vertex lies
/// on the other side, and the last one always is.
pub fn zigzag_convergents(t: &Triangulation) -> Result<Vec<ExtRational>> {
    let tree = dual_tree(t);
    if !tree.is_bamboo() {
        return Err(Error::NotBamboo);
    }
    let n = t.n();
    let q = quiddity_of(t);
    let ear = (2..n)
        .find(|&v| q.get(v as i64).is_one())
        .ok_or_else(|| Error::InvalidTriangulation("no ear away from vertex n".into()))?;
    let labels = farey_labels(t, (1, n))?;
    let mut node = (0..tree.nodes.len())
        .find(|&i| tree.nodes[i].contains(&1) && tree.nodes[i].contains(&n))
        .expect("side (1, n) lies in a triangle");
    let mut known = vec![1, n];
    let mut added = Vec::new();
    let mut prev = usize::MAX;
    loop {
        let tri = tree.nodes[node];
        let apex = tri.iter().copied().find(|v| !known.contains(v)).unwrap();
        known.push(apex);
        added.push(apex);
        match tree.neighbours(node).into_iter().find(|&j| j != prev) {
            Some(next) => {
                prev = node;
                node = next;
            }
            None => break,
        }
    }
    let is_upper = |v: usize| v <= ear;
    if is_upper(added[0]) {
        return Err(Error::InvalidTriangulation(
            "first triangle must add a lower vertex".into(),
        ));
    }
    let mut out = Vec::new();
    for w in added.windows(2) {
        if is_upper(w[0]) != is_upper(w[1]) {
            out.push(labels[w[0] - 1].clone());
        }
    }
    out.push(labels[added[added.len() - 1] - 1].clone());
    Ok(out)
}
