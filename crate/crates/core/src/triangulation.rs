//! Triangulations of a convex `n`-gon with vertices `1..=n` in cyclic order.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{mediant, ExtRational};
use crate::error::{Error, Result};
use crate::frieze::Quiddity;

pub type Triangle = [usize; 3];

/// A set of `n - 2` triangles with pairwise noncrossing diagonals.
///
/// Triangles are stored as sorted triples in sorted order, so equality is
/// equality of triangle sets under the fixed vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriangulation", into = "RawTriangulation")]
pub struct Triangulation {
    n: usize,
    triangles: Vec<Triangle>,
}

#[derive(Serialize, Deserialize)]
struct RawTriangulation {
    n: usize,
    triangles: Vec<Triangle>,
}

impl TryFrom<RawTriangulation> for Triangulation {
    type Error = Error;
    fn try_from(raw: RawTriangulation) -> Result<Self> {
        Triangulation::new(raw.n, raw.triangles)
    }
}

impl From<Triangulation> for RawTriangulation {
    fn from(t: Triangulation) -> Self {
        RawTriangulation {
            n: t.n,
            triangles: t.triangles,
        }
    }
}

fn sorted(t: Triangle) -> Triangle {
    let mut t = t;
    t.sort_unstable();
    t
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn is_side(n: usize, (a, b): (usize, usize)) -> bool {
    b == a + 1 || (a == 1 && b == n)
}

impl Triangulation {
    pub fn new(n: usize, triangles: Vec<Triangle>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTriangulation(msg));
        if n < 3 {
            return bad(format!("polygon needs at least 3 vertices, got {n}"));
        }
        if triangles.len() != n - 2 {
            return bad(format!("expected {} triangles, got {}", n - 2, triangles.len()));
        }
        let mut tris: Vec<Triangle> = triangles.into_iter().map(sorted).collect();
        for t in &tris {
            if t[0] == 0 || t[2] > n || t[0] == t[1] || t[1] == t[2] {
                return bad(format!("bad triangle {t:?}"));
            }
        }
        tris.sort_unstable();
        if tris.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated triangle".into());
        }
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &tris {
            for e in [edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])] {
                *counts.entry(e).or_default() += 1;
            }
        }
        for i in 1..=n {
            let side = edge(i, i % n + 1);
            if counts.get(&side) != Some(&1) {
                return bad(format!("side {side:?} must lie in exactly one triangle"));
            }
        }
        let mut diagonals = Vec::new();
        for (&e, &c) in counts.iter().filter(|(e, _)| !is_side(n, **e)) {
            if c != 2 {
                return bad(format!("diagonal {e:?} must lie in exactly two triangles"));
            }
            diagonals.push(e);
        }
        if diagonals.len() != n - 3 {
            return bad(format!("expected {} diagonals, got {}", n - 3, diagonals.len()));
        }
        if !noncrossing(n, &diagonals) {
            return bad("diagonals cross".into());
        }
        Ok(Triangulation { n, triangles: tris })
    }

    /// The triangulation whose diagonals are exactly `diagonals`.
    pub fn from_diagonals(n: usize, diagonals: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        let mut join = |a: usize, b: usize| -> Result<()> {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::InvalidTriangulation(format!("bad diagonal ({a}, {b})")));
            }
            adj[a][b] = true;
            adj[b][a] = true;
            Ok(())
        };
        for i in 1..=n {
            join(i, i % n + 1)?;
        }
        for &(a, b) in diagonals {
            join(a, b)?;
        }
        let mut tris = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if adj[a][b] && adj[b][c] && adj[a][c] {
                        tris.push([a, b, c]);
                    }
                }
            }
        }
        Triangulation::new(n, tris)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, mut triangles: Vec<Triangle>) -> Self {
        for t in triangles.iter_mut() {
            t.sort_unstable();
        }
        triangles.sort_unstable();
        Triangulation { n, triangles }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Diagonals as `(a, b)` with `a < b`, sorted.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])])
            .filter(|e| !is_side(self.n, *e))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Indices of triangles containing vertex `v`.
    pub fn triangles_at(&self, v: usize) -> Vec<usize> {
        (0..self.triangles.len())
            .filter(|&i| self.triangles[i].contains(&v))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "triangles": self.triangles })
    }
}

/// Parenthesis check: walking round the polygon, diagonals must close in the
/// reverse order they opened.
pub(crate) fn noncrossing(n: usize, diagonals: &[(usize, usize)]) -> bool {
    let mut opening: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(a, b) in diagonals {
        opening[a].push(b);
        closing[b].push(a);
    }
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for v in 1..=n {
        // innermost first: the latest opener has the largest start
        closing[v].sort_unstable_by(|x, y| y.cmp(x));
        for &a in &closing[v] {
            if stack.pop() != Some((a, v)) {
                return false;
            }
        }
        // outermost first: longest diagonal pushed first
        opening[v].sort_unstable_by(|x, y| y.cmp(x));
        for &b in &opening[v] {
            stack.push((v, b));
        }
    }
    stack.is_empty()
}

/// `c_i` = number of triangles at vertex `i`.
pub fn quiddity_of(t: &Triangulation) -> Quiddity {
    let mut c = vec![0u64; t.n];
    for tri in &t.triangles {
        for &v in tri {
            c[v - 1] += 1;
        }
    }
    Quiddity::new(c.into_iter().map(BigInt::from).collect()).expect("triangulation quiddity is valid")
}

/// Which 1-entry to cut off first when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EarChoice {
    Smallest,
    Largest,
}

pub fn triangulation_from_quiddity(q: &Quiddity) -> Result<Triangulation> {
    triangulation_from_quiddity_with(q, EarChoice::Smallest)
}

/// Cut ears at 1-entries, decrementing both neighbours, down to a triangle.
pub fn triangulation_from_quiddity_with(q: &Quiddity, choice: EarChoice) -> Result<Triangulation> {
    let n = q.len();
    let bad = |msg: String| Err(Error::InvalidQuiddity(format!("{q}: {msg}")));
    if n < 3 {
        return bad("fewer than 3 entries".into());
    }
    if q.sum() != BigInt::from(3 * (n - 2)) {
        return bad(format!("sum is not {}", 3 * (n - 2)));
    }
    // entries are bounded by n - 2 once the sum is right
    let mut verts: Vec<usize> = (1..=n).collect();
    let mut vals: Vec<i64> = q.entries().iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect();
    let mut tris = Vec::with_capacity(n - 2);
    while verts.len() > 3 {
        let m = verts.len();
        let ones = (0..m).filter(|&i| vals[i] == 1);
        let pos = match choice {
            EarChoice::Smallest => ones.min(),
            EarChoice::Largest => ones.max(),
        };
        let Some(p) = pos else {
            return bad("no entry equal to 1".into());
        };
        let (l, r) = ((p + m - 1) % m, (p + 1) % m);
        vals[l] -= 1;
        vals[r] -= 1;
        if vals[l] <= 0 || vals[r] <= 0 {
            return bad("a neighbour of an ear drops to 0".into());
        }
        tris.push([verts[l], verts[p], verts[r]]);
        verts.remove(p);
        vals.remove(p);
    }
    if vals != [1, 1, 1] {
        return bad("last triangle does not have entries (1,1,1)".into());
    }
    tris.push([verts[0], verts[1], verts[2]]);
    let t = Triangulation::new(n, tris).or_else(|e| bad(e.to_string()))?;
    if &quiddity_of(&t) != q {
        return bad("reconstruction does not reproduce it".into());
    }
    Ok(t)
}

/// `C(n) = binom(2n - 4, n - 2)/(n - 1)` triangulations of an `n`-gon.
pub fn catalan_count(n: usize) -> BigInt {
    assert!(n >= 2);
    let k = n - 2;
    let mut binom = BigInt::one();
    for i in 0..k {
        binom = binom * (2 * k - i) / (i + 1);
    }
    binom / (k + 1)
}

/// Stream every triangulation of the `n`-gon into `f`.
///
/// The triangle on the edge `(lo, hi)` of each sub-polygon is chosen by
/// apex in increasing order, so the output order is fixed.
pub fn for_each_triangulation(n: usize, mut f: impl FnMut(Triangulation)) {
    if n < 3 {
        return;
    }
    let mut pending = vec![(1, n)];
    let mut tris = Vec::with_capacity(n - 2);
    walk(n, &mut pending, &mut tris, &mut f);
}

fn walk(
    n: usize,
    pending: &mut Vec<(usize, usize)>,
    tris: &mut Vec<Triangle>,
    f: &mut dyn FnMut(Triangulation),
) {
    let Some((lo, hi)) = pending.pop() else {
        f(Triangulation::from_sorted_unchecked(n, tris.clone()));
        return;
    };
    if hi - lo < 2 {
        walk(n, pending, tris, f);
    } else {
        for k in lo + 1..hi {
            tris.push([lo, k, hi]);
            pending.push((k, hi));
            pending.push((lo, k));
            walk(n, pending, tris, f);
            pending.pop();
            pending.pop();
            tris.pop();
        }
    }
    pending.push((lo, hi));
}

pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    let mut out = Vec::new();
    for_each_triangulation(n, |t| out.push(t));
    out
}

/// Triangles as nodes, shared diagonals as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub nodes: Vec<Triangle>,
    pub edges: Vec<(usize, usize)>,
}

impl DualTree {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == node || b == node).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.nodes.len()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    /// No node of degree 3.
    pub fn is_bamboo(&self) -> bool {
        self.max_degree() <= 2
    }

    pub fn leaves(&self) -> Vec<usize> {
        if self.nodes.len() == 1 {
            return vec![0];
        }
        (0..self.nodes.len()).filter(|&i| self.degree(i) == 1).collect()
    }

    pub fn neighbours(&self, node: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == node, b == node) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  t{i} [label=\"{},{},{}\"];", t[0], t[1], t[2]);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  t{a} -- t{b};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn dual_tree(t: &Triangulation) -> DualTree {
    let nodes = t.triangles.clone();
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, tri) in nodes.iter().enumerate() {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
            by_edge.entry(edge(a, b)).or_default().push(i);
        }
    }
    let mut edges: Vec<(usize, usize)> = by_edge
        .into_values()
        .filter(|ts| ts.len() == 2)
        .map(|ts| (ts[0].min(ts[1]), ts[0].max(ts[1])))
        .collect();
    edges.sort_unstable();
    DualTree { nodes, edges }
}

/// Fill labels outward from the triangle on side `(u, w)`: the apex of
/// each triangle gets `combine` of the two labels on the edge it was
/// entered through.
fn propagate<T: Clone>(
    t: &Triangulation,
    (u, w): (usize, usize),
    seed_u: T,
    seed_w: T,
    combine: impl Fn(&T, &T) -> Result<T>,
) -> Result<Vec<T>> {
    let n = t.n;
    if u == 0 || w == 0 || u > n || w > n || !is_side(n, edge(u, w)) {
        return Err(Error::NotASide(u, w));
    }
    let tree = dual_tree(t);
    let start = (0..tree.nodes.len())
        .find(|&i| tree.nodes[i].contains(&u) && tree.nodes[i].contains(&w))
        .expect("every side lies in a triangle");
    let mut labels: Vec<Option<T>> = vec![None; n + 1];
    labels[u] = Some(seed_u);
    labels[w] = Some(seed_w);
    let mut adjacent = vec![Vec::new(); tree.nodes.len()];
    for &(a, b) in &tree.edges {
        adjacent[a].push(b);
        adjacent[b].push(a);
    }
    let mut seen = vec![false; tree.nodes.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(i) = queue.pop_front() {
        let tri = tree.nodes[i];
        let known: Vec<usize> = tri.iter().copied().filter(|&v| labels[v].is_some()).collect();
        if known.len() == 2 {
            let apex = tri.iter().copied().find(|v| !known.contains(v)).unwrap();
            let value = combine(labels[known[0]].as_ref().unwrap(), labels[known[1]].as_ref().unwrap())?;
            labels[apex] = Some(value);
        }
        for &j in &adjacent[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(labels.into_iter().skip(1).map(|x| x.expect("dual tree is connected")).collect())
}

/// Labels indexed by vertex (`labels[v - 1]`): 0 at `u`, 1 at `w`, sums
/// across each triangle. With base side `(n, 1)` vertex `i` carries the
/// diagonal entry `v_{i-1}`.
pub fn vertex_labels(t: &Triangulation, base: (usize, usize)) -> Result<Vec<BigInt>> {
    propagate(t, base, BigInt::zero(), BigInt::one(), |a, b| Ok(a + b))
}

/// `1/0` at `u`, `0/1` at `w`, mediants across each triangle.
pub fn farey_labels(t: &Triangulation, marked: (usize, usize)) -> Result<Vec<ExtRational>> {
    propagate(t, marked, ExtRational::infinity(), ExtRational::zero(), mediant)
}

/// Sequences of distinct triangles `(tau_{i+1}, ..., tau_{j-1})`, with
/// `tau_l` incident to vertex `l`, for the vertices strictly between `i`
/// and `j` going forward round the polygon.
pub fn admissible_paths_count(t: &Triangulation, i: usize, j: usize) -> Result<BigInt> {
    let n = t.n;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexRange(format!("need distinct vertices in 1..={n}, got {i}, {j}")));
    }
    let between: Vec<Vec<usize>> = std::iter::successors(Some(i % n + 1), |&v| Some(v % n + 1))
        .take_while(|&v| v != j)
        .map(|v| t.triangles_at(v))
        .collect();
    let mut used = vec![false; t.triangles.len()];
    Ok(BigInt::from(count_paths(&between, 0, &mut used)))
}

fn count_paths(choices: &[Vec<usize>], depth: usize, used: &mut [bool]) -> u64 {
    if depth == choices.len() {
        return 1;
    }
    let mut total = 0;
    for &tri in &choices[depth] {
        if !used[tri] {
            used[tri] = true;
            total += count_paths(choices, depth + 1, used);
            used[tri] = false;
        }
    }
    total
}

/// Glue an ear between vertices `k - 1` and `k`:
/// `(..., a_{k-1} + 1, 1, a_k + 1, ...)`. For `k = 1` the new vertex is
/// appended after `a_n`, keeping vertex 1 in place.
pub fn van_gogh_insert(q: &Quiddity, k: usize) -> Result<Quiddity> {
    let n = q.len();
    if k == 0 || k > n {
        return Err(Error::IndexRange(format!("insert position {k} outside 1..={n}")));
    }
    let mut a = q.entries().to_vec();
    let prev = (k + n - 2) % n;
    a[prev] += 1;
    a[k - 1] += 1;
    if k == 1 {
        a.push(BigInt::one());
    } else {
        a.insert(k - 1, BigInt::one());
    }
    Quiddity::new(a)
}

/// Remove the ear at a 1-entry `k`, decrementing its neighbours.
pub fn remove_ear(q: &Quiddity, k: usize) -> Result<Quiddity> {
    let n = q.len();
    if k == 0 || k > n {
        return Err(Error::IndexRange(format!("ear position {k} outside 1..={n}")));
    }
    if n < 4 || !q.entries()[k - 1].is_one() {
        return Err(Error::InvalidQuiddity(format!("{q}: no ear at position {k}")));
    }
    let mut a = q.entries().to_vec();
    a[(k + n - 2) % n] -= 1;
    a[k % n] -= 1;
    a.remove(k - 1);
    Quiddity::new(a)
}

/// The diagonal `(v_0, ..., v_{n-2})` after inserting an ear at `k >= 2`:
/// the new vertex between `k - 1` and `k` carries `v_{k-2} + v_{k-1}`,
/// reading `v_{n-1} = 0`.
pub fn van_gogh_diagonal(v: &[BigInt], k: usize) -> Result<Vec<BigInt>> {
    let n = v.len() + 1;
    if k < 2 || k > n {
        return Err(Error::IndexRange(format!("diagonal insert position {k} outside 2..={n}")));
    }
    let next = v.get(k - 1).cloned().unwrap_or_default();
    let mut out = v.to_vec();
    out.insert(k - 1, &v[k - 2] + next);
    Ok(out)
}

/// The zigzag triangulation with diagonals `(2, n), (2, n-1), (3, n-1), ...`.
pub fn zigzag(n: usize) -> Result<Triangulation> {
    let mut diagonals = Vec::new();
    let (mut lo, mut hi) = (2, n);
    let mut step_hi = true;
    while diagonals.len() + 3 < n {
        diagonals.push((lo, hi));
        if step_hi {
            hi -= 1;
        } else {
            lo += 1;
        }
        step_hi = !step_hi;
    }
    Triangulation::from_diagonals(n, &diagonals)
}
