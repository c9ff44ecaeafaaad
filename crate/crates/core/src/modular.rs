//! Words in the generators `R`, `L`, `S` of `SL_2(Z)`, Stern–Brocot
//! navigation, the Farey graph, the rotation operator and 3d-dissections.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{apply_moebius, mediant, ExtRational, Mat2};
use crate::contfrac::matrix_negative;
use crate::error::{Error, Result};
use crate::triangulation::{noncrossing, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    R,
    L,
    S,
}

impl Letter {
    fn symbol(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
            Letter::S => 'S',
        }
    }

    fn power(self, e: &BigInt) -> Mat2 {
        match self {
            Letter::R => Mat2::r_pow(e.clone()),
            Letter::L => Mat2::l_pow(e.clone()),
            Letter::S => Mat2::s().pow(e).expect("S is invertible"),
        }
    }
}

/// A product of generator powers. Neighbouring powers of the same letter
/// are merged and zero exponents dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    tokens: Vec<(Letter, BigInt)>,
}

impl GroupWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, letter: Letter, exp: impl Into<BigInt>) {
        let exp = exp.into();
        if exp.is_zero() {
            return;
        }
        if let Some((last, e)) = self.tokens.last_mut() {
            if *last == letter {
                *e += exp;
                if e.is_zero() {
                    self.tokens.pop();
                }
                return;
            }
        }
        self.tokens.push((letter, exp));
    }

    pub fn with(mut self, letter: Letter, exp: impl Into<BigInt>) -> Self {
        self.push(letter, exp);
        self
    }

    pub fn tokens(&self) -> &[(Letter, BigInt)] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Total number of letters counted with multiplicity.
    pub fn letter_count(&self) -> BigInt {
        self.tokens.iter().map(|(_, e)| e.abs()).sum()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for (l, e) in &other.tokens {
            out.push(*l, e.clone());
        }
        out
    }

    /// Letters written out one by one, e.g. `RLL`; exponents must be positive.
    pub fn to_compact(&self) -> Option<String> {
        let mut out = String::new();
        for (l, e) in &self.tokens {
            let k: usize = e.try_into().ok()?;
            out.extend(std::iter::repeat_n(l.symbol(), k));
        }
        Some(out)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, e)) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.symbol())?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Letters `R`, `L`, `S`, each optionally followed by `^k`; whitespace
    /// between tokens is optional, so `R^2 L S` and `RRLS` both parse.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut word = GroupWord::new();
        let mut i = 0;
        while i < bytes.len() {
            let letter = match bytes[i] {
                b' ' | b'\t' => {
                    i += 1;
                    continue;
                }
                b'R' => Letter::R,
                b'L' => Letter::L,
                b'S' => Letter::S,
                _ => return Err(Error::parse(i, "expected R, L or S")),
            };
            i += 1;
            let mut exp = BigInt::one();
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "expected an exponent"))?;
            }
            word.push(letter, exp);
        }
        Ok(word)
    }
}

pub fn word_to_matrix(w: &GroupWord) -> Mat2 {
    w.tokens
        .iter()
        .fold(Mat2::identity(), |acc, (l, e)| acc * l.power(e))
}

/// `R^{a_1} L^{a_2} ... L^{a_{2m}}`.
pub fn word_from_positive_cf(a: &[BigInt]) -> GroupWord {
    let mut w = GroupWord::new();
    for (i, x) in a.iter().enumerate() {
        w.push(if i % 2 == 0 { Letter::R } else { Letter::L }, x.clone());
    }
    w
}

/// `R^{c_1} S R^{c_2} S ... R^{c_k} S`.
pub fn word_from_negative_cf(c: &[BigInt]) -> GroupWord {
    let mut w = GroupWord::new();
    for x in c {
        w.push(Letter::R, x.clone());
        w.push(Letter::S, 1);
    }
    w
}

fn require_positive_fraction(x: &ExtRational) -> Result<()> {
    if x.is_infinite() || !x.num().is_positive() {
        return Err(Error::OutOfDomain(x.to_string()));
    }
    Ok(())
}

/// Position of `x` in the Stern–Brocot tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    /// First sequence index containing `x`; the root `1/1` has depth 0.
    pub depth: usize,
    pub left: ExtRational,
    pub right: ExtRational,
    /// Turns taken from the root: `R` towards larger, `L` towards smaller.
    pub path: GroupWord,
}

/// Descend from `1/1` between `0/1` and `1/0` by mediants; the descent takes
/// at most `p + q` steps.
pub fn stern_brocot_locate(x: &ExtRational) -> Result<Location> {
    require_positive_fraction(x)?;
    let fuel = x.num() + x.den();
    let (mut left, mut right) = (ExtRational::zero(), ExtRational::infinity());
    let mut mid = ExtRational::one();
    let mut path = GroupWord::new();
    let mut depth = 0usize;
    while &mid != x {
        assert!(BigInt::from(depth) <= fuel, "descent exceeded p + q steps");
        if x > &mid {
            left = mid;
            path.push(Letter::R, 1);
        } else {
            right = mid;
            path.push(Letter::L, 1);
        }
        mid = mediant(&left, &right)?;
        depth += 1;
    }
    Ok(Location {
        depth,
        left,
        right,
        path,
    })
}

/// The Stern–Brocot path of `x`: `R` for each step towards larger values,
/// `L` towards smaller ones. Applied to `(1, 1)` its matrix gives `(p, q)`.
pub fn rl_word_from_fraction(x: &ExtRational) -> Result<GroupWord> {
    if x == &ExtRational::one() {
        return Err(Error::OutOfDomain(x.to_string()));
    }
    Ok(stern_brocot_locate(x)?.path)
}

/// The path word followed by one `L`; for `x > 1` this is
/// `R^{a_1} L^{a_2} ... L^{a_{2m}}` and its matrix has first column `(p, q)`.
pub fn stern_word(x: &ExtRational) -> Result<GroupWord> {
    Ok(rl_word_from_fraction(x)?.with(Letter::L, 1))
}

/// Sequence `k`: start from `(0/1, 1/1, 1/0)` and insert mediants `k` times.
pub fn stern_brocot_sequence(k: u32) -> Vec<ExtRational> {
    let mut seq = vec![ExtRational::zero(), ExtRational::one(), ExtRational::infinity()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(2 * seq.len() - 1);
        for w in seq.windows(2) {
            next.push(w[0].clone());
            next.push(mediant(&w[0], &w[1]).expect("neighbours are distinct"));
        }
        next.push(seq[seq.len() - 1].clone());
        seq = next;
    }
    seq
}

/// `|p s - q r| = 1`.
pub fn farey_edge(x: &ExtRational, y: &ExtRational) -> bool {
    x.is_farey_neighbor(y)
}

/// Third vertex of the Farey triangle on the edge `(x, y)` towards the mediant.
pub fn farey_triangle_complete(x: &ExtRational, y: &ExtRational) -> Result<ExtRational> {
    if !farey_edge(x, y) {
        return Err(Error::NotAdjacent(x.to_string(), y.to_string()));
    }
    mediant(x, y)
}

/// Apply `[[c_1, -1], [1, 0]]` to every label.
///
/// Labels are listed from the vertex carrying `0` round to the vertex
/// carrying `1/0`, and `c_1` is the quiddity entry at the `0` vertex; the
/// first two labels go to `1/0` and `0`.
pub fn rotate_labels(c1: &BigInt, labels: &[ExtRational]) -> Result<Vec<ExtRational>> {
    let m = Mat2::negative_factor(c1.clone());
    labels.iter().map(|x| apply_moebius(&m, x)).collect()
}

/// One rotation step with the bookkeeping done: returns the rotated quiddity
/// `(c_2, ..., c_n, c_1)` and the labels `(beta_2, ..., beta_n, beta_1)`,
/// which again run from `0` to `1/0`.
pub fn rotate_polygon(quiddity: &[BigInt], labels: &[ExtRational]) -> Result<(Vec<BigInt>, Vec<ExtRational>)> {
    if quiddity.is_empty() || quiddity.len() != labels.len() {
        return Err(Error::IndexRange("one quiddity entry per label".into()));
    }
    let mut beta = rotate_labels(&quiddity[0], labels)?;
    beta.rotate_left(1);
    let mut q = quiddity.to_vec();
    q.rotate_left(1);
    Ok((q, beta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    MinusI,
    PlusI,
    Other,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::MinusI => "-I",
            Verdict::PlusI => "+I",
            Verdict::Other => "other",
        })
    }
}

/// Classify `M(c_1, ..., c_n)` as `-I`, `+I` or neither.
pub fn verify_quiddity_identity(c: &[BigInt]) -> Verdict {
    let m = matrix_negative(c);
    if m.is_minus_identity() {
        Verdict::MinusI
    } else if m.is_identity() {
        Verdict::PlusI
    } else {
        Verdict::Other
    }
}

/// Splice `1, 1, 1` in before position `k`; since `M(1,1,1) = -I` this
/// flips the sign of a `±I` verdict.
pub fn insert_three_ones(c: &[BigInt], k: usize) -> Result<Vec<BigInt>> {
    let n = c.len();
    if n == 0 || k == 0 || k > n {
        return Err(Error::IndexRange(format!("position {k} outside 1..={n}")));
    }
    let mut out = c.to_vec();
    out.splice(k - 1..k - 1, [BigInt::one(), BigInt::one(), BigInt::one()]);
    Ok(out)
}

/// A dissection of the `n`-gon into cells whose sizes are multiples of 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDissection", into = "RawDissection")]
pub struct Dissection3d {
    n: usize,
    cells: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawDissection {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl TryFrom<RawDissection> for Dissection3d {
    type Error = Error;
    fn try_from(raw: RawDissection) -> Result<Self> {
        Dissection3d::new(raw.n, raw.cells)
    }
}

impl From<Dissection3d> for RawDissection {
    fn from(d: Dissection3d) -> Self {
        RawDissection {
            n: d.n,
            cells: d.cells,
        }
    }
}

fn cell_edges(cell: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let k = cell.len();
    (0..k).map(move |i| {
        let (a, b) = (cell[i], cell[(i + 1) % k]);
        (a.min(b), a.max(b))
    })
}

impl Dissection3d {
    /// Cells list their vertices in cyclic order; each is stored sorted,
    /// which for a convex polygon is the same cyclic order.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidDissection(msg));
        if n < 3 {
            return bad(format!("polygon needs at least 3 vertices, got {n}"));
        }
        let mut sorted_cells = Vec::with_capacity(cells.len());
        for cell in cells {
            let mut c = cell.clone();
            c.sort_unstable();
            if c.len() < 3 || c.len() % 3 != 0 {
                return bad(format!("cell {cell:?} has {} vertices", cell.len()));
            }
            if c[0] == 0 || c[c.len() - 1] > n || c.windows(2).any(|w| w[0] == w[1]) {
                return bad(format!("cell {cell:?} has bad vertices"));
            }
            let start = cell.iter().position(|v| *v == c[0]).unwrap();
            let mut rotated = cell.clone();
            rotated.rotate_left(start);
            let reversed: Vec<usize> = std::iter::once(c[0]).chain(rotated[1..].iter().rev().copied()).collect();
            if rotated != c && reversed != c {
                return bad(format!("cell {cell:?} is not in cyclic order"));
            }
            sorted_cells.push(c);
        }
        let area: usize = sorted_cells.iter().map(|c| c.len() - 2).sum();
        if area != n - 2 {
            return bad(format!("cells cover {area} triangles' worth, need {}", n - 2));
        }
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in &sorted_cells {
            for e in cell_edges(c) {
                *counts.entry(e).or_default() += 1;
            }
        }
        let is_side = |(a, b): (usize, usize)| b == a + 1 || (a == 1 && b == n);
        for i in 1..=n {
            let side = (i.min(i % n + 1), i.max(i % n + 1));
            if counts.get(&side) != Some(&1) {
                return bad(format!("side {side:?} must lie in exactly one cell"));
            }
        }
        let mut diagonals = Vec::new();
        for (&e, &c) in counts.iter().filter(|(e, _)| !is_side(**e)) {
            if c != 2 {
                return bad(format!("diagonal {e:?} must lie in exactly two cells"));
            }
            diagonals.push(e);
        }
        if !noncrossing(n, &diagonals) {
            return bad("diagonals cross".into());
        }
        sorted_cells.sort();
        Ok(Dissection3d {
            n,
            cells: sorted_cells,
        })
    }

    pub fn from_triangulation(t: &Triangulation) -> Self {
        Dissection3d {
            n: t.n(),
            cells: t.triangles().iter().map(|tri| tri.to_vec()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn even_cell_count(&self) -> usize {
        self.cells.iter().filter(|c| c.len() % 2 == 0).count()
    }
}

/// `c_i` = number of cells at vertex `i`.
pub fn dissection_quiddity(d: &Dissection3d) -> Vec<BigInt> {
    let mut c = vec![0u64; d.n];
    for cell in &d.cells {
        for &v in cell {
            c[v - 1] += 1;
        }
    }
    c.into_iter().map(BigInt::from).collect()
}

/// `-I` when the number of even-sided cells is even, `+I` otherwise.
pub fn expected_verdict(d: &Dissection3d) -> Verdict {
    if d.even_cell_count().is_multiple_of(2) {
        Verdict::MinusI
    } else {
        Verdict::PlusI
    }
}

pub fn check_ovsienko_sign(d: &Dissection3d) -> bool {
    verify_quiddity_identity(&dissection_quiddity(d)) == expected_verdict(d)
}

/// `[[p, r], [q, s]]` sending the edge `(1/0, 0/1)` to `(p/q, r/s)`.
pub fn edge_transport(x: &ExtRational, y: &ExtRational) -> Result<Mat2> {
    if !farey_edge(x, y) {
        return Err(Error::NotAdjacent(x.to_string(), y.to_string()));
    }
    let m = Mat2::new(x.num().clone(), y.num().clone(), x.den().clone(), y.den().clone());
    // flip the second column if needed to land in SL_2
    if m.det().is_negative() {
        let [[a, b], [c, d]] = m.entries();
        return Ok(Mat2::new(a.clone(), -b.clone(), c.clone(), -d.clone()));
    }
    Ok(m)
}
