//! Frieze patterns: construction from a second row, direct indexing by
//! continuants, symmetry checks and the downward sign-flip extension.
//!
//! Row `k` (1-based) of an order-`n` frieze holds `a_{i,i+k-2}` at position
//! `i`, so row 1 is all ones, row 2 is the quiddity and row `n - 1` is all
//! ones again. `a_{ij}` is the continuant of `a_i, ..., a_j` read cyclically.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{product, Mat2};
use crate::continuants::continuant;
use crate::error::{Error, Result};

/// Environment variable overriding the default closure bound.
pub const MAX_ROWS_ENV: &str = "FRIEZE_MAX_ROWS";

/// Second row of an integer frieze, indexed cyclically from 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiddity {
    entries: Vec<BigInt>,
}

impl Quiddity {
    /// Positive integers; for length at least 4 no two cyclic neighbours
    /// may both be 1.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidQuiddity("empty sequence".into()));
        }
        if let Some((i, x)) = entries.iter().enumerate().find(|(_, x)| !x.is_positive()) {
            return Err(Error::InvalidQuiddity(format!(
                "entry {} at position {} is not positive",
                x,
                i + 1
            )));
        }
        let n = entries.len();
        if n >= 4 {
            if let Some(i) = (0..n).find(|&i| entries[i].is_one() && entries[(i + 1) % n].is_one()) {
                return Err(Error::AdjacentOnes(i + 1, (i + 1) % n + 1));
            }
        }
        Ok(Quiddity { entries })
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `a_i` with `i` read modulo the length.
    pub fn get(&self, i: i64) -> &BigInt {
        let n = self.entries.len() as i64;
        &self.entries[((i - 1).rem_euclid(n)) as usize]
    }

    /// `a_i, a_{i+1}, ..., a_{i+len-1}` cyclically.
    pub fn window(&self, i: i64, len: usize) -> Vec<BigInt> {
        (0..len as i64).map(|t| self.get(i + t).clone()).collect()
    }

    pub fn rotated(&self, by: usize) -> Quiddity {
        let mut entries = self.entries.clone();
        entries.rotate_left(by % self.len());
        Quiddity { entries }
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Quiddity {
    type Err = Error;

    /// Comma-separated integers, optionally in parentheses: `2,1,4` or `(2,1,4)`.
    fn from_str(s: &str) -> Result<Self> {
        Quiddity::new(parse_sequence(s)?)
    }
}

/// Parse `a,b,c` (optionally wrapped in parentheses) into integers.
pub fn parse_sequence(s: &str) -> Result<Vec<BigInt>> {
    parse_items(s, crate::arith::parse_bigint)
}

/// Parse `a,b/c,...` into exact rationals.
pub fn parse_rational_sequence(s: &str) -> Result<Vec<BigRational>> {
    parse_items(s, |item, pos| match item.split_once('/') {
        Some((p, q)) => {
            let num = crate::arith::parse_bigint(p, pos)?;
            let den = crate::arith::parse_bigint(q, pos + p.len() + 1)?;
            if den.is_zero() {
                return Err(Error::parse(pos, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(crate::arith::parse_bigint(item, pos)?)),
    })
}

fn parse_items<T>(s: &str, item: impl Fn(&str, usize) -> Result<T>) -> Result<Vec<T>> {
    let trimmed_start = s.len() - s.trim_start().len();
    let mut body = s.trim();
    let mut offset = trimmed_start;
    if let Some(inner) = body.strip_prefix('(') {
        body = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(s.len(), "missing closing parenthesis"))?;
        offset += 1;
    }
    if body.trim().is_empty() {
        return Err(Error::parse(offset, "empty sequence"));
    }
    let mut out = Vec::new();
    for part in body.split(',') {
        let lead = part.len() - part.trim_start().len();
        out.push(item(part.trim(), offset + lead)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// A closed frieze of order `n`: rows `1..n-1`, each of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frieze {
    order: usize,
    rows: Vec<Vec<BigRational>>,
}

/// Rows computed before the closure bound was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezePrefix {
    pub rows: Vec<Vec<BigRational>>,
    pub max_rows: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FriezeBuild {
    Closed(Frieze),
    NonClosing(FriezePrefix),
}

impl FriezeBuild {
    pub fn closed(self) -> Option<Frieze> {
        match self {
            FriezeBuild::Closed(f) => Some(f),
            FriezeBuild::NonClosing(_) => None,
        }
    }
}

fn all_ones(row: &[BigRational]) -> bool {
    row.iter().all(|x| x.is_one())
}

/// `4p + 4` for a second row of period `p`, unless `FRIEZE_MAX_ROWS` is set.
pub fn default_max_rows(period: usize) -> usize {
    std::env::var(MAX_ROWS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(4 * period + 4)
}

/// Iterate `c = (ad - 1)/b` row by row until an all-ones row appears.
///
/// `second_row` is one period of the second row; `max_rows` counts the top
/// row of ones too.
pub fn build_frieze(second_row: &[BigRational], max_rows: usize) -> Result<FriezeBuild> {
    let p = second_row.len();
    if p == 0 {
        return Err(Error::EmptyRow);
    }
    if let Some((i, x)) = second_row.iter().enumerate().find(|(_, x)| !x.is_positive()) {
        return Err(Error::NonPositiveEntry {
            row: 2,
            position: i + 1,
            value: x.to_string(),
        });
    }
    let ones = vec![BigRational::one(); p];
    if all_ones(second_row) {
        return Ok(FriezeBuild::Closed(Frieze::expand(3, vec![ones, second_row.to_vec()])));
    }
    if let Some(i) = (0..p).find(|&i| second_row[i].is_one() && second_row[(i + 1) % p].is_one()) {
        return Err(Error::AdjacentOnes(i + 1, (i + 1) % p + 1));
    }
    let mut rows = vec![ones, second_row.to_vec()];
    while rows.len() < max_rows {
        let k = rows.len();
        let prev = &rows[k - 2];
        let cur = &rows[k - 1];
        let mut next = Vec::with_capacity(p);
        for i in 0..p {
            let j = (i + 1) % p;
            let v = (&cur[i] * &cur[j] - BigRational::one()) / &prev[j];
            if !v.is_positive() {
                return Err(Error::NonPositiveEntry {
                    row: k + 1,
                    position: i + 1,
                    value: v.to_string(),
                });
            }
            next.push(v);
        }
        let done = all_ones(&next);
        rows.push(next);
        if done {
            let order = rows.len() + 1;
            return Ok(FriezeBuild::Closed(Frieze::expand(order, rows)));
        }
    }
    Ok(FriezeBuild::NonClosing(FriezePrefix { rows, max_rows }))
}

/// Build from an integer second row with the default bound.
pub fn build_integer_frieze(second_row: &[BigInt]) -> Result<FriezeBuild> {
    let row: Vec<BigRational> = second_row.iter().cloned().map(BigRational::from_integer).collect();
    build_frieze(&row, default_max_rows(row.len()))
}

/// The closed frieze with this quiddity, or `NotAFriezeQuiddity`.
pub fn frieze_from_quiddity(q: &Quiddity) -> Result<Frieze> {
    match build_integer_frieze(q.entries())? {
        FriezeBuild::Closed(f) => Ok(f),
        FriezeBuild::NonClosing(_) => Err(Error::NotAFriezeQuiddity(q.to_string())),
    }
}

impl Frieze {
    fn expand(order: usize, rows: Vec<Vec<BigRational>>) -> Frieze {
        let rows = rows
            .into_iter()
            .map(|r| (0..order).map(|i| r[i % r.len()].clone()).collect())
            .collect();
        Frieze { order, rows }
    }

    /// Wrap precomputed rows without checking the diamond rule; use the
    /// `check_*` functions to validate. Needs `n - 1` rows of length `n`.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Frieze> {
        let order = rows.len() + 1;
        if order < 3 {
            return Err(Error::IndexRange("a frieze has at least two rows".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::IndexRange(format!(
                "row of length {} in a frieze of order {}",
                r.len(),
                order
            )));
        }
        Ok(Frieze { order, rows })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Row `k`, 1-based.
    pub fn row(&self, k: usize) -> &[BigRational] {
        &self.rows[k - 1]
    }

    /// Entry at row `k` (1-based), position `i` read cyclically; rows `0`
    /// and `n` are the implicit rows of zeros.
    pub fn entry(&self, k: usize, i: i64) -> BigRational {
        if k == 0 || k == self.order {
            return BigRational::zero();
        }
        let n = self.order as i64;
        self.rows[k - 1][((i - 1).rem_euclid(n)) as usize].clone()
    }

    /// `a_{ij}` for `i - 2 <= j <= i + n - 2`.
    pub fn a(&self, i: i64, j: i64) -> BigRational {
        let k = j - i + 2;
        assert!(k >= 0 && k <= self.order as i64, "a_{{{i},{j}}} outside the frieze");
        self.entry(k as usize, i)
    }

    pub fn second_row(&self) -> &[BigRational] {
        &self.rows[1]
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_integer())
    }

    /// The quiddity when every entry is an integer.
    pub fn quiddity(&self) -> Option<Quiddity> {
        if !self.second_row().iter().all(|x| x.is_integer()) {
            return None;
        }
        Quiddity::new(self.second_row().iter().map(|x| x.to_integer()).collect()).ok()
    }

    pub fn to_json(&self) -> Value {
        let fmt_row = |r: &Vec<BigRational>| r.iter().map(fmt_entry).collect::<Vec<_>>();
        json!({
            "order": self.order,
            "rows": self.rows.iter().map(fmt_row).collect::<Vec<_>>(),
            "quiddity": fmt_row(&self.rows[1]),
        })
    }

    /// Staggered layout with `n + 2` entries per row; even rows are shifted
    /// right by half a cell.
    pub fn to_text(&self) -> String {
        render_rows(&self.rows, self.order + 2)
    }
}

impl FriezePrefix {
    pub fn to_text(&self) -> String {
        let width = self.rows[0].len() + 2;
        render_rows(&self.rows, width)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "closed": false,
            "max_rows": self.max_rows,
            "rows": self
                .rows
                .iter()
                .map(|r| r.iter().map(fmt_entry).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn fmt_entry(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn render_rows(rows: &[Vec<BigRational>], slots: usize) -> String {
    let cell = rows
        .iter()
        .flatten()
        .map(|x| fmt_entry(x).len())
        .max()
        .unwrap_or(1);
    let half = cell + 1;
    let mut out = String::new();
    for (idx, row) in rows.iter().enumerate() {
        let k = idx + 1;
        let indent = (k + 1) % 2;
        let start = 1 - ((k as i64 - 1) / 2);
        let p = row.len() as i64;
        let mut line = " ".repeat(indent * half);
        for j in 0..slots as i64 {
            let x = &row[((start + j - 1).rem_euclid(p)) as usize];
            if j > 0 {
                line.push_str(&" ".repeat(half + 1));
            }
            line.push_str(&format!("{:>cell$}", fmt_entry(x)));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Every unit diamond satisfies `ad - bc = 1`, including those touching the
/// implicit zero rows and those wrapping around the period.
pub fn check_unimodularity(f: &Frieze) -> bool {
    let n = f.order();
    (1..n).all(|k| {
        (1..=n as i64).all(|i| {
            let left = f.entry(k, i);
            let right = f.entry(k, i + 1);
            let above = f.entry(k - 1, i + 1);
            let below = f.entry(k + 1, i);
            left * right - above * below == BigRational::one()
        })
    })
}

/// Row `k` read from position `i` equals row `n - k` read from `i + k`.
pub fn check_glide_symmetry(f: &Frieze) -> bool {
    let n = f.order();
    (1..n).all(|k| (1..=n as i64).all(|i| f.entry(k, i) == f.entry(n - k, i + k as i64)))
}

/// Period `n` of the unrolled pattern.
///
/// The diamond rule is re-run on a straight strip of `3n` copies of the
/// second row with no wrap-around, so the check does not inherit the cyclic
/// storage of `f`.
pub fn check_periodicity(f: &Frieze) -> bool {
    let n = f.order();
    let width = 3 * n;
    let second: Vec<BigRational> = (0..width).map(|i| f.second_row()[i % n].clone()).collect();
    let mut prev: Vec<BigRational> = vec![BigRational::one(); width + 1];
    let mut cur = second;
    let mut strip = vec![prev.clone(), cur.clone()];
    for _ in 3..n {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            if prev[i + 1].is_zero() {
                return false;
            }
            next.push((&cur[i] * &cur[i + 1] - BigRational::one()) / &prev[i + 1]);
        }
        prev = cur;
        cur = next;
        strip.push(cur.clone());
    }
    strip.iter().enumerate().all(|(k, row)| {
        let shift_ok = (0..row.len().saturating_sub(n)).all(|i| row[i] == row[i + n]);
        let matches = k == 0 || (0..n.min(row.len())).all(|i| row[i] == f.rows[k][i]);
        shift_ok && matches
    })
}

/// Smallest `p` dividing `n` such that every row is `p`-periodic.
pub fn minimal_period(f: &Frieze) -> usize {
    let n = f.order();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| f.rows.iter().all(|r| (0..n).all(|i| r[i] == r[(i + p) % n])))
        .unwrap_or(n)
}

/// `a_{ij} = V(a_i, ..., a_j)` for `j >= i - 2`, indices cyclic.
pub fn frieze_entry(q: &Quiddity, i: i64, j: i64) -> Result<BigInt> {
    let len = j - i + 1;
    match len {
        l if l < -1 => Err(Error::IndexRange(format!("a_{{{i},{j}}} needs j >= i - 2"))),
        -1 => Ok(BigInt::zero()),
        l => Ok(continuant(&q.window(i, l as usize))),
    }
}

/// `a_{ij}` below the bottom row of zeros via `a_{i,rn+k} = (-1)^r a_{ik}`.
pub fn extended_entry(q: &Quiddity, i: i64, j: i64) -> Result<BigInt> {
    let len = j - i + 1;
    if len < -1 {
        return Err(Error::IndexRange(format!("a_{{{i},{j}}} needs j >= i - 2")));
    }
    let n = q.len() as i64;
    let r = (len + 1).div_euclid(n);
    let base = frieze_entry(q, i, j - r * n)?;
    Ok(if r.is_odd() { -base } else { base })
}

/// `(v_0, ..., v_{n-2})` with `v_k = a_{1k}`, via `v_k = a_k v_{k-1} - v_{k-2}`.
pub fn diagonal_from_quiddity(q: &Quiddity) -> Result<Vec<BigInt>> {
    let n = q.len();
    if n < 3 {
        return Err(Error::NotAFriezeQuiddity(format!("{q}: order below 3")));
    }
    let mut v = vec![BigInt::one(), q.entries()[0].clone()];
    for k in 2..n {
        let next = &q.entries()[k - 1] * &v[k - 1] - &v[k - 2];
        v.push(next);
    }
    let positive = v[..n - 1].iter().all(|x| x.is_positive());
    if !positive || !v[n - 2].is_one() || !v[n - 1].is_zero() {
        return Err(Error::NotAFriezeQuiddity(format!(
            "{q}: diagonal does not reach 1, 0"
        )));
    }
    v.truncate(n - 1);
    Ok(v)
}

/// Inverse of [`diagonal_from_quiddity`]: `a_1 = v_1`,
/// `a_k = (v_{k-2} + v_k)/v_{k-1}`, then closure fixes the last two entries.
pub fn quiddity_from_diagonal(v: &[BigInt]) -> Result<Quiddity> {
    if v.len() < 2 || !v[0].is_one() {
        return Err(Error::NotAFriezeQuiddity("diagonal must start 1, v_1".into()));
    }
    if !v.iter().all(|x| x.is_positive()) {
        return Err(Error::NotAFriezeQuiddity("diagonal entries must be positive".into()));
    }
    if !v[v.len() - 1].is_one() {
        return Err(Error::NotAFriezeQuiddity("diagonal must end in 1".into()));
    }
    let m = v.len() - 1;
    let mut a = vec![v[1].clone()];
    for k in 2..=m {
        let num = &v[k - 2] + &v[k];
        let (quot, rem) = num.div_rem(&v[k - 1]);
        if !rem.is_zero() {
            return Err(Error::NonIntegralDivision(num.to_string(), v[k - 1].to_string()));
        }
        a.push(quot);
    }
    // v_{n-1} = 0 gives a_{n-1} = v_{n-3}; closure of the second diagonal
    // gives a_n = V(a_2, ..., a_{n-2})
    a.push(v[m - 1].clone());
    let n = m + 2;
    let last = continuant(&a[1..n - 2]);
    a.push(last);
    Quiddity::new(a)
}

/// `[[a_1,-1],[1,0]] (a_{2k}, a_{3k}) = (a_{1k}, a_{2k})` with extended entries.
pub fn check_matrix_shift(q: &Quiddity, k: i64) -> Result<bool> {
    let m = Mat2::negative_factor(q.get(1).clone());
    let (x, y) = m.apply_vector(&extended_entry(q, 2, k)?, &extended_entry(q, 3, k)?);
    Ok(x == extended_entry(q, 1, k)? && y == extended_entry(q, 2, k)?)
}

/// `prod [[a_i,-1],[1,0]]`; equals `-I` exactly for closed frieze quiddities.
pub fn quiddity_matrix_product(q: &Quiddity) -> Mat2 {
    product(q.entries().iter().cloned().map(Mat2::negative_factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(xs: &[i64]) -> Quiddity {
        Quiddity::from_i64(xs).unwrap()
    }

    fn r(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    fn seven() -> Frieze {
        frieze_from_quiddity(&q(&[2, 1, 4, 2, 1, 3, 2])).unwrap()
    }

    #[test]
    fn worked_frieze() {
        let f = seven();
        assert_eq!(f.order(), 7);
        assert_eq!(f.row_count(), 6);
        assert_eq!(f.row(3), r(&[1, 3, 7, 1, 2, 5, 3]).as_slice());
        assert!(f.row(6).iter().all(|x| x.is_one()));
        assert!(f.is_integral());
        assert!(check_unimodularity(&f));
        assert!(check_glide_symmetry(&f));
        assert!(check_periodicity(&f));
        assert_eq!(minimal_period(&f), 7);
    }

    #[test]
    fn text_layout_matches_table() {
        let text = seven().to_text();
        let lines: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(lines[1], ["2", "1", "4", "2", "1", "3", "2", "2", "1"]);
        assert_eq!(lines[2], ["3", "1", "3", "7", "1", "2", "5", "3", "1"]);
        // slot 8 wraps round to slot 1
        assert_eq!(lines[3][..8], ["1", "2", "5", "3", "1", "3", "7", "1"]);
        assert_eq!(lines[4][..8], ["2", "1", "3", "2", "2", "1", "4", "2"]);
        assert_eq!(lines[3][8], lines[3][1]);
        assert_eq!(lines[4][8], lines[4][1]);
        assert!(text.lines().nth(1).unwrap().starts_with(' '));
        assert!(!text.lines().nth(2).unwrap().starts_with(' '));
    }

    #[test]
    fn json_export() {
        let v = frieze_from_quiddity(&q(&[1, 1, 1])).unwrap().to_json();
        assert_eq!(v["order"], 3);
        assert_eq!(v["quiddity"], json!(["1", "1", "1"]));
        assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn twos_never_close() {
        let out = build_frieze(&r(&[2]), 12).unwrap();
        let FriezeBuild::NonClosing(prefix) = out else {
            panic!("(2) must not close")
        };
        assert_eq!(prefix.rows.len(), 12);
        for (idx, row) in prefix.rows.iter().enumerate() {
            assert_eq!(row[0], BigRational::from_integer((idx as i64 + 1).into()));
        }
    }

    #[test]
    fn three_row_friezes() {
        for second in [[1, 2], [2, 1]] {
            let f = build_frieze(&r(&second), 16).unwrap().closed().unwrap();
            assert_eq!(f.order(), 4);
            assert_eq!(f.row_count(), 3);
            assert!(check_glide_symmetry(&f));
            assert_eq!(minimal_period(&f), 2);
        }
        let f = build_frieze(&r(&[1, 2, 1, 2]), 20).unwrap().closed().unwrap();
        assert_eq!(f.row_count(), 3);
        assert_eq!(minimal_period(&f), 2);
    }

    #[test]
    fn rational_second_row() {
        let second = vec![BigRational::from_integer(4.into()), BigRational::new(1.into(), 2.into())];
        let f = build_frieze(&second, 16).unwrap().closed().unwrap();
        assert_eq!(f.order(), 4);
        assert!(!f.is_integral());
        assert!(check_unimodularity(&f));
        assert!(check_glide_symmetry(&f));
    }

    #[test]
    fn build_errors() {
        assert!(matches!(build_frieze(&r(&[2, 1, 1, 3]), 20), Err(Error::AdjacentOnes(2, 3))));
        assert!(matches!(build_frieze(&r(&[1, 3, 1]), 20), Err(Error::AdjacentOnes(3, 1))));
        assert!(matches!(build_frieze(&r(&[1, 1, 3]), 20), Err(Error::AdjacentOnes(1, 2))));
        assert!(matches!(build_frieze(&[], 20), Err(Error::EmptyRow)));
        // third row (1,3,1), then (1·1 - 1)/1 = 0 in the fourth
        assert!(matches!(
            build_frieze(&r(&[1, 2, 2]), 20),
            Err(Error::NonPositiveEntry { row: 4, position: 3, .. })
        ));
        assert!(matches!(build_frieze(&r(&[0, 2]), 20), Err(Error::NonPositiveEntry { row: 2, .. })));
        let f = build_frieze(&r(&[1, 1, 1, 1]), 20).unwrap().closed().unwrap();
        assert_eq!(f.order(), 3);
    }

    #[test]
    fn perturbation_breaks_symmetry() {
        let mut rows = seven().rows().to_vec();
        rows[2][3] += BigRational::one();
        let f = Frieze::from_rows(rows).unwrap();
        assert!(!check_glide_symmetry(&f));
        assert!(!check_unimodularity(&f));
    }

    #[test]
    fn entries_by_continuant() {
        let q7 = q(&[2, 1, 4, 2, 1, 3, 2]);
        assert_eq!(frieze_entry(&q7, 1, 2).unwrap(), BigInt::from(1));
        assert_eq!(frieze_entry(&q7, 1, 3).unwrap(), BigInt::from(2));
        assert_eq!(frieze_entry(&q7, 4, 4).unwrap(), BigInt::from(2));
        assert_eq!(frieze_entry(&q7, 7, 8).unwrap(), BigInt::from(3));
        assert!(frieze_entry(&q7, 3, 0).is_err());
        let f = seven();
        for i in 1..=7 {
            for j in i - 2..=i + 5 {
                assert_eq!(
                    f.a(i, j),
                    BigRational::from_integer(frieze_entry(&q7, i, j).unwrap())
                );
            }
        }
    }

    #[test]
    fn downward_extension() {
        let q7 = q(&[2, 1, 4, 2, 1, 3, 2]);
        let n = 7;
        assert_eq!(extended_entry(&q7, 1, n - 2).unwrap(), BigInt::from(1));
        assert_eq!(extended_entry(&q7, 1, n - 1).unwrap(), BigInt::from(0));
        assert_eq!(extended_entry(&q7, 1, n).unwrap(), BigInt::from(-1));
        assert_eq!(extended_entry(&q7, 1, n + 1).unwrap(), BigInt::from(-2));
        // the sign rule agrees with the continuant of the long window
        for i in 1..=7 {
            for j in i - 2..i + 4 * n {
                let direct = frieze_entry(&q7, i, j).unwrap();
                assert_eq!(extended_entry(&q7, i, j).unwrap(), direct, "a_{{{i},{j}}}");
            }
        }
    }

    #[test]
    fn diagonals() {
        assert_eq!(
            diagonal_from_quiddity(&q(&[1, 1, 1])).unwrap(),
            vec![BigInt::from(1), BigInt::from(1)]
        );
        let v = diagonal_from_quiddity(&q(&[2, 2, 3, 1, 2, 4, 1])).unwrap();
        let expect: Vec<BigInt> = [1, 2, 3, 7, 4, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(v, expect);
        assert_eq!(quiddity_from_diagonal(&v).unwrap(), q(&[2, 2, 3, 1, 2, 4, 1]));
        assert!(matches!(diagonal_from_quiddity(&q(&[2, 2])), Err(Error::NotAFriezeQuiddity(_))));
        assert!(matches!(diagonal_from_quiddity(&q(&[2, 2, 2])), Err(Error::NotAFriezeQuiddity(_))));
        let ones: Vec<BigInt> = vec![1.into(), 1.into(), 1.into()];
        assert_eq!(quiddity_from_diagonal(&ones).unwrap(), q(&[1, 2, 1, 2]));
        let bad: Vec<BigInt> = [1, 2, 4, 1].iter().map(|&x| x.into()).collect();
        assert!(matches!(quiddity_from_diagonal(&bad), Err(Error::NonIntegralDivision(_, _))));
    }

    #[test]
    fn matrix_shift_and_product() {
        let q7 = q(&[2, 1, 4, 2, 1, 3, 2]);
        for k in 1..=14 {
            assert!(check_matrix_shift(&q7, k).unwrap(), "k = {k}");
        }
        assert!(quiddity_matrix_product(&q(&[1, 1, 1])).is_minus_identity());
        assert!(quiddity_matrix_product(&q7).is_minus_identity());
        let m = quiddity_matrix_product(&q(&[2, 2]));
        assert_eq!(m.trace(), BigInt::from(2));
        assert!(!m.is_identity() && !m.is_minus_identity());
    }

    #[test]
    fn quiddity_parsing() {
        assert_eq!("(2,1,4,2,1,3,2)".parse::<Quiddity>().unwrap(), q(&[2, 1, 4, 2, 1, 3, 2]));
        assert_eq!(" 1, 2 ,1,2".parse::<Quiddity>().unwrap(), q(&[1, 2, 1, 2]));
        assert!(matches!("2,x".parse::<Quiddity>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("2,0,3".parse::<Quiddity>(), Err(Error::InvalidQuiddity(_))));
        let rs = parse_rational_sequence("4,1/2").unwrap();
        assert_eq!(rs[1], BigRational::new(1.into(), 2.into()));
    }
}
