//! Continuants and their identities.
//!
//! The continuant `V_n(a_1, ..., a_n)` has three independent evaluators here:
//! the signed sum over Morse codes, the three-term recurrence
//! `V_n = a_n V_{n-1} - V_{n-2}`, and the determinant of the tridiagonal
//! matrix with diagonal `a` and unit off-diagonals. Negative-order
//! continuants are zero.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default cap on the brute-force enumerator. The number of codes grows like
/// the Fibonacci numbers, so this is for test-scale oracles only.
pub const DEFAULT_MORSE_LIMIT: usize = 30;

/// A matching of `n` points on a line where only neighbours may be joined.
///
/// `dashes` holds the 1-based positions `i` whose dash joins points `i` and
/// `i + 1`; positions are strictly increasing and pairwise non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseCode {
    n: usize,
    dashes: Vec<usize>,
}

impl MorseCode {
    pub fn new(n: usize, mut dashes: Vec<usize>) -> Result<Self> {
        dashes.sort_unstable();
        for w in dashes.windows(2) {
            if w[1] <= w[0] + 1 {
                return Err(Error::IndexRange(format!(
                    "dashes at {} and {} share a point",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&last) = dashes.last() {
            if dashes[0] == 0 || last >= n {
                return Err(Error::IndexRange(format!(
                    "dash positions must lie in 1..{}",
                    n.saturating_sub(1)
                )));
            }
        }
        Ok(MorseCode { n, dashes })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dashes(&self) -> &[usize] {
        &self.dashes
    }

    /// Points not covered by a dash (1-based).
    pub fn dots(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n + 1];
        for &d in &self.dashes {
            covered[d] = true;
            covered[d + 1] = true;
        }
        (1..=self.n).filter(|&i| !covered[i]).collect()
    }

    /// `(-1)^{#dashes}` times the product of the variables at the dots.
    pub fn weight(&self, a: &[BigInt]) -> BigInt {
        assert_eq!(a.len(), self.n, "one variable per point");
        let mut w: BigInt = self.dots().iter().map(|&i| &a[i - 1]).product();
        if self.dashes.len() % 2 == 1 {
            w = -w;
        }
        w
    }
}

impl fmt::Display for MorseCode {
    /// Dot/dash notation, e.g. `o-o o o`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str("o")?;
            if i < self.n {
                let sep = if self.dashes.binary_search(&i).is_ok() { "-" } else { " " };
                f.write_str(sep)?;
            }
        }
        Ok(())
    }
}

/// Every Morse code on `n` points, each exactly once.
pub fn enumerate_morse_codes(n: usize) -> Result<Vec<MorseCode>> {
    enumerate_morse_codes_with_limit(n, DEFAULT_MORSE_LIMIT)
}

pub fn enumerate_morse_codes_with_limit(n: usize, limit: usize) -> Result<Vec<MorseCode>> {
    if n > limit {
        return Err(Error::MorseLimit { n, limit });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_codes(n, 1, &mut current, &mut out);
    Ok(out)
}

fn extend_codes(n: usize, next: usize, current: &mut Vec<usize>, out: &mut Vec<MorseCode>) {
    // `next` is the first point whose left neighbour is already decided
    if next >= n {
        out.push(MorseCode {
            n,
            dashes: current.clone(),
        });
        return;
    }
    // leave point `next` as a dot on the right
    extend_codes(n, next + 1, current, out);
    // or join `next` to `next + 1`
    current.push(next);
    extend_codes(n, next + 2, current, out);
    current.pop();
}

/// Sum of Morse-code weights. Capped at [`DEFAULT_MORSE_LIMIT`] points.
pub fn continuant_bruteforce(a: &[BigInt]) -> Result<BigInt> {
    Ok(enumerate_morse_codes(a.len())?
        .iter()
        .map(|code| code.weight(a))
        .sum())
}

/// `V_n(a_1, ..., a_n)` by the recurrence with `V_0 = 1`, `V_1 = a_1`.
pub fn continuant(a: &[BigInt]) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for x in a {
        let next = x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Continuant of a window of declared order `order`; negative orders give 0.
///
/// `order = -1` or lower is the empty-below-empty convention, `order = 0`
/// is 1 regardless of `a`.
pub fn continuant_of_order(order: isize, a: &[BigInt]) -> BigInt {
    if order < 0 {
        BigInt::zero()
    } else {
        debug_assert_eq!(order as usize, a.len());
        continuant(a)
    }
}

/// `K_n` from `K_i = a_i K_{i-1} + K_{i-2}`, `K_0 = 1`, `K_1 = a_1`.
pub fn positive_continuant(a: &[BigInt]) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for x in a {
        let next = x * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Determinant of the tridiagonal matrix with diagonal `a` and ones beside it.
pub fn continuant_determinant(a: &[BigInt]) -> BigInt {
    IntMatrix::tridiagonal(a).determinant()
}

/// A dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                    min: 0,
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn tridiagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut data = vec![BigInt::zero(); n * n];
        for (i, x) in diag.iter().enumerate() {
            data[i * n + i] = x.clone();
            if i + 1 < n {
                data[i * n + i + 1] = BigInt::one();
                data[(i + 1) * n + i] = BigInt::one();
            }
        }
        IntMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    /// Submatrix with the given (0-based) rows and columns deleted.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let keep_r: Vec<usize> = (0..self.n).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.n).filter(|j| !cols.contains(j)).collect();
        assert_eq!(keep_r.len(), keep_c.len(), "minor must be square");
        let mut data = Vec::with_capacity(keep_r.len() * keep_c.len());
        for &i in &keep_r {
            for &j in &keep_c {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            n: keep_r.len(),
            data,
        }
    }

    /// Fraction-free Gaussian elimination (Bareiss) with row swaps.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = false;
        let mut prev_pivot = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = !sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j])
                        / &prev_pivot;
                    m[i * n + j] = v;
                }
            }
            prev_pivot = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }

    /// Laplace expansion along successive rows, memoised on the set of
    /// columns already used. Exact and division-free; practical up to
    /// order ~20.
    pub fn cofactor_determinant(&self) -> BigInt {
        assert!(self.n <= 24, "cofactor expansion limited to order 24");
        let mut memo = HashMap::new();
        self.laplace(0, &mut memo)
    }

    fn laplace(&self, used: u32, memo: &mut HashMap<u32, BigInt>) -> BigInt {
        let row = used.count_ones() as usize;
        if row == self.n {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut free_before = 0;
        for col in 0..self.n {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = self.get(row, col);
            if !entry.is_zero() {
                let sub = self.laplace(used | (1 << col), memo);
                let term = entry * sub;
                if free_before % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            free_before += 1;
        }
        memo.insert(used, total.clone());
        total
    }
}

fn window(a: &[BigInt], from: usize, to: usize) -> &[BigInt] {
    // 1-based inclusive window a_from..a_to; empty when to < from
    if to < from {
        &a[0..0]
    } else {
        &a[from - 1..to]
    }
}

/// `V_n(a_1..a_n) V_n(a_2..a_{n+1}) = V_{n-1}(a_2..a_n) V_{n+1}(a_1..a_{n+1}) + 1`
/// for `a` of length `n + 1 >= 1`.
pub fn check_unimodularity_identity(a: &[BigInt]) -> bool {
    if a.is_empty() {
        return false;
    }
    let n = a.len() - 1;
    let lhs = continuant(&a[..n]) * continuant(&a[1..]);
    let middle = if n == 0 {
        BigInt::zero()
    } else {
        continuant(&a[1..n])
    };
    lhs == middle * continuant(a) + 1
}

/// Euler's three-term identity for windows of `a` given by `m`, `l`, `n`:
///
/// `V_{m+n}(a_1..a_{m+n}) V_l(a_{m+1}..a_{m+l})
///   - V_{m+l}(a_1..a_{m+l}) V_n(a_{m+1}..a_{m+n})
///   + V_{m-1}(a_1..a_{m-1}) V_{n-l-1}(a_{m+l+2}..a_{m+n}) = 0`.
///
/// Requires `l < n` and `a.len() >= m + n`.
pub fn check_euler_identity(a: &[BigInt], m: usize, l: usize, n: usize) -> Result<bool> {
    if l >= n {
        return Err(Error::IndexRange(format!(
            "Euler identity needs l < n, got l = {l}, n = {n}"
        )));
    }
    if a.len() < m + n {
        return Err(Error::IndexRange(format!(
            "sequence of length {} is shorter than m + n = {}",
            a.len(),
            m + n
        )));
    }
    let t1 = continuant(window(a, 1, m + n)) * continuant(window(a, m + 1, m + l));
    let t2 = continuant(window(a, 1, m + l)) * continuant(window(a, m + 1, m + n));
    let v_m1 = if m == 0 {
        BigInt::zero()
    } else {
        continuant(window(a, 1, m - 1))
    };
    // order n - l - 1 >= 0 since l < n
    let v_tail = continuant(window(a, m + l + 2, m + n));
    Ok((t1 - t2 + v_m1 * v_tail).is_zero())
}

/// Desnanot–Jacobi: `M * M_{1n}^{1n} = M_1^1 M_n^n - M_n^1 M_1^n`,
/// all determinants by exact cofactor expansion.
pub fn check_lewis_carroll(m: &IntMatrix) -> Result<bool> {
    let n = m.order();
    if n < 2 {
        return Err(Error::NotSquare {
            rows: n,
            cols: n,
            min: 2,
        });
    }
    let last = n - 1;
    let det = m.cofactor_determinant();
    let inner = m.minor(&[0, last], &[0, last]).cofactor_determinant();
    let m11 = m.minor(&[0], &[0]).cofactor_determinant();
    let mnn = m.minor(&[last], &[last]).cofactor_determinant();
    let mn1 = m.minor(&[last], &[0]).cofactor_determinant();
    let m1n = m.minor(&[0], &[last]).cofactor_determinant();
    Ok(det * inner == m11 * mnn - mn1 * m1n)
}

/// Reversal: `V(a_1..a_n) = V(a_n..a_1)`.
pub fn check_reversal(a: &[BigInt]) -> bool {
    let rev: Vec<BigInt> = a.iter().rev().cloned().collect();
    continuant(a) == continuant(&rev)
}

/// Trailing zero: `V(a_1..a_{n-1}, 0) = -V(a_1..a_{n-2})` (needs `n >= 1`).
pub fn check_trailing_zero(a: &[BigInt]) -> bool {
    if a.is_empty() {
        return false;
    }
    let mut with_zero = a.to_vec();
    let n = with_zero.len();
    with_zero[n - 1] = BigInt::zero();
    let rhs = if n >= 2 {
        -continuant(&a[..n - 2])
    } else {
        BigInt::zero()
    };
    continuant(&with_zero) == rhs
}

/// Left recurrence: `V(a) = a_1 V(a_2..a_n) - V(a_3..a_n)` (needs `n >= 1`).
pub fn check_left_recurrence(a: &[BigInt]) -> bool {
    if a.is_empty() {
        return false;
    }
    let tail2 = if a.len() >= 2 {
        continuant(&a[2..])
    } else {
        BigInt::zero()
    };
    continuant(a) == &a[0] * continuant(&a[1..]) - tail2
}

/// Absolute value of the largest entry, handy for bounding random inputs.
pub fn max_abs(a: &[BigInt]) -> BigInt {
    a.iter().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn morse_code_counts() {
        assert_eq!(enumerate_morse_codes(0).unwrap().len(), 1);
        assert_eq!(enumerate_morse_codes(4).unwrap().len(), 5);
        assert_eq!(enumerate_morse_codes(5).unwrap().len(), 8);
        let mut fib = vec![1usize, 1];
        for n in 2..=20 {
            fib.push(fib[n - 1] + fib[n - 2]);
            assert_eq!(enumerate_morse_codes(n).unwrap().len(), fib[n]);
        }
        assert!(matches!(
            enumerate_morse_codes(31),
            Err(Error::MorseLimit { n: 31, limit: 30 })
        ));
    }

    #[test]
    fn morse_table_for_four_points() {
        // the five rows listed for n = 4, with their monomials evaluated at
        // a = (2, 3, 5, 7): 210, -6, -14, -35, 1
        let a = ints(&[2, 3, 5, 7]);
        let mut weights: Vec<i64> = enumerate_morse_codes(4)
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c.weight(&a)).unwrap())
            .collect();
        weights.sort();
        assert_eq!(weights, vec![-35, -14, -6, 1, 210]);
    }

    #[test]
    fn morse_display() {
        let code = MorseCode::new(4, vec![1]).unwrap();
        assert_eq!(code.to_string(), "o-o o o");
        let code = MorseCode::new(7, vec![1, 5]).unwrap();
        assert_eq!(code.to_string(), "o-o o o o-o o");
        assert_eq!(code.weight(&ints(&[1, 1, 3, 4, 1, 1, 7])), BigInt::from(84));
        assert!(MorseCode::new(4, vec![1, 2]).is_err());
        assert!(MorseCode::new(4, vec![4]).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(continuant_bruteforce(&ints(&[2, 1])).unwrap(), BigInt::from(1));
        assert_eq!(continuant_bruteforce(&ints(&[1, 1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(continuant_bruteforce(&[]).unwrap(), BigInt::one());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(continuant(&ints(&[2, 1, 4, 2])), BigInt::from(3));
        assert_eq!(continuant(&ints(&[1, 2, 1])), BigInt::zero());
        assert_eq!(continuant(&ints(&[9])), BigInt::from(9));
        assert_eq!(continuant_of_order(-1, &[]), BigInt::zero());
        assert_eq!(continuant_of_order(0, &[]), BigInt::one());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(continuant_determinant(&[]), BigInt::one());
        assert_eq!(continuant_determinant(&ints(&[2, 1, 4, 2])), BigInt::from(3));
        assert_eq!(continuant_determinant(&ints(&[1, 1])), BigInt::zero());
        // zero pivot forces a row swap
        assert_eq!(continuant_determinant(&ints(&[0, 0, 3])), BigInt::from(-3));
    }

    #[test]
    fn positive_continuant_examples() {
        assert_eq!(positive_continuant(&ints(&[1, 2, 1, 1])), BigInt::from(7));
        assert_eq!(positive_continuant(&ints(&[2, 1, 1])), BigInt::from(5));
        assert_eq!(positive_continuant(&ints(&[4, 6])), BigInt::from(25));
        assert_eq!(positive_continuant(&[]), BigInt::one());
    }

    #[test]
    fn unimodularity_examples() {
        for (x, y) in [(0, 0), (3, -2), (7, 11)] {
            assert!(check_unimodularity_identity(&ints(&[x, y])));
        }
        assert!(check_unimodularity_identity(&ints(&[2, 1, 4, 2, 1])));
        assert!(check_unimodularity_identity(&ints(&[5])));
        assert!(!check_unimodularity_identity(&[]));
    }

    #[test]
    fn euler_identity_cases() {
        let a = ints(&[2, 1, 4, 2, 1, 3, 2, 5]);
        // m = 1, l = n - 1 is the unimodularity relation
        for n in 1..=6 {
            assert!(check_euler_identity(&a, 1, n - 1, n).unwrap());
        }
        // m = 0 exercises V_{-1} = 0
        assert!(check_euler_identity(&a, 0, 2, 5).unwrap());
        assert!(check_euler_identity(&a, 3, 0, 4).unwrap());
        assert!(matches!(check_euler_identity(&a, 1, 3, 3), Err(Error::IndexRange(_))));
        assert!(matches!(check_euler_identity(&a, 5, 1, 4), Err(Error::IndexRange(_))));
    }

    #[test]
    fn lewis_carroll_cases() {
        let m = IntMatrix::from_i64(&[&[3, -7], &[2, 5]]).unwrap();
        assert!(check_lewis_carroll(&m).unwrap());
        let tri = IntMatrix::tridiagonal(&ints(&[2, 1, 4, 2]));
        assert!(check_lewis_carroll(&tri).unwrap());
        let m = IntMatrix::from_i64(&[&[1, 2, 3, 4], &[0, -1, 5, 2], &[7, 3, 0, 1], &[2, 2, -3, 6]]).unwrap();
        assert!(check_lewis_carroll(&m).unwrap());
        assert_eq!(m.cofactor_determinant(), m.determinant());
        let one = IntMatrix::from_i64(&[&[4]]).unwrap();
        assert!(check_lewis_carroll(&one).is_err());
    }

    #[test]
    fn exercise_identities() {
        let a = ints(&[2, -1, 4, 0, 3]);
        assert!(check_reversal(&a));
        assert!(check_trailing_zero(&a));
        assert!(check_left_recurrence(&a));
        assert!(check_trailing_zero(&ints(&[5])));
        assert!(check_left_recurrence(&ints(&[5])));
    }
}
