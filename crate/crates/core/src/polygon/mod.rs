//! Triangulations of a convex n-gon, diagonal flips and the associahedron.
//!
//! Polygon vertices are numbered `0..n` around the boundary. A triangulation
//! is stored as its `n - 3` diagonals in canonical `(lo, hi)` lexicographic
//! order, so structural equality is triangulation equality.

mod tree;

pub use tree::BinaryTree;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Largest polygon handled by [`build_associahedron`] unless a cap is given.
pub const DEFAULT_MAX_N: usize = 12;

/// A chord between two non-adjacent polygon vertices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Diagonal {
    lo: usize,
    hi: usize,
}

impl Diagonal {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i >= n || j >= n {
            return invalid(format!("diagonal {{{i},{j}}} has an endpoint outside the {n}-gon"));
        }
        if i == j {
            return invalid(format!("diagonal {{{i},{j}}} is degenerate"));
        }
        let d = Diagonal::unchecked(i, j);
        if d.hi - d.lo < 2 || (d.lo == 0 && d.hi == n - 1) {
            return invalid(format!("{{{i},{j}}} is a side of the {n}-gon, not a diagonal"));
        }
        Ok(d)
    }

    /// Normalises the endpoint order without validating against a polygon size.
    pub(crate) fn unchecked(i: usize, j: usize) -> Self {
        Diagonal { lo: i.min(j), hi: i.max(j) }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn shares_endpoint(&self, other: &Diagonal) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }

    /// Whether `v` lies strictly inside the arc `lo+1 ..= hi-1`.
    fn strictly_inside(&self, v: usize) -> bool {
        self.lo < v && v < self.hi
    }

    fn crosses(&self, other: &Diagonal) -> bool {
        !self.shares_endpoint(other)
            && (self.strictly_inside(other.lo) != self.strictly_inside(other.hi))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Whether two diagonals of an n-gon cross in the interior of the polygon.
pub fn diagonals_cross(a: Diagonal, b: Diagonal, n: usize) -> Result<bool> {
    Diagonal::new(a.lo, a.hi, n)?;
    Diagonal::new(b.lo, b.hi, n)?;
    Ok(a.crosses(&b))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    /// Builds a triangulation, checking that the diagonals form a maximal
    /// noncrossing set.
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return invalid(format!("a polygon needs at least 3 vertices, got {n}"));
        }
        let mut diags = diagonals
            .into_iter()
            .map(|(i, j)| Diagonal::new(i, j, n))
            .collect::<Result<Vec<_>>>()?;
        diags.sort_unstable();
        diags.dedup();
        if diags.len() != n - 3 {
            return invalid(format!(
                "a triangulation of the {n}-gon has {} distinct diagonals, got {}",
                n - 3,
                diags.len()
            ));
        }
        for (i, a) in diags.iter().enumerate() {
            if let Some(b) = diags[i + 1..].iter().find(|b| a.crosses(b)) {
                return invalid(format!("diagonals {a} and {b} cross"));
            }
        }
        Ok(Triangulation { n, diagonals: diags })
    }

    /// Caller guarantees a sorted, maximal noncrossing set.
    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(diagonals.len(), n - 3);
        Triangulation { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    /// True for polygon sides and for diagonals of this triangulation.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let d = Diagonal::unchecked(i, j);
        d.hi - d.lo == 1 || (d.lo == 0 && d.hi == self.n - 1) || self.contains(&d)
    }

    /// The vertex `x` strictly between `lo` and `hi` (walking forward from
    /// `lo`) that closes a triangle on the chord `{lo, hi}`.
    pub(crate) fn apex_between(&self, lo: usize, hi: usize) -> Option<usize> {
        let n = self.n;
        let mut x = (lo + 1) % n;
        while x != hi {
            if self.has_edge(lo, x) && self.has_edge(x, hi) {
                return Some(x);
            }
            x = (x + 1) % n;
        }
        None
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by the
    /// two triangles on either side of it.
    pub fn flip(&self, d: &Diagonal) -> Result<Triangulation> {
        if !self.contains(d) {
            return invalid(format!("diagonal {d} is not in the triangulation {self}"));
        }
        let inner = self.apex_between(d.lo, d.hi);
        let outer = self.apex_between(d.hi, d.lo);
        let (Some(x), Some(y)) = (inner, outer) else {
            return Err(Error::Verification(format!("no quadrilateral around {d} in {self}")));
        };
        let mut diags: Vec<Diagonal> =
            self.diagonals.iter().copied().filter(|e| e != d).collect();
        diags.push(Diagonal::unchecked(x, y));
        diags.sort_unstable();
        Ok(Triangulation { n: self.n, diagonals: diags })
    }

    pub fn flip_neighbors(&self) -> Vec<Triangulation> {
        self.diagonals
            .iter()
            .map(|d| self.flip(d).expect("every diagonal of a triangulation is flippable"))
            .collect()
    }

    /// Label of the form `{1,3}{1,5}`; the empty triangulation prints `{}`.
    pub fn label(&self) -> String {
        if self.diagonals.is_empty() {
            return "{}".to_string();
        }
        self.diagonals.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All triangulations of the n-gon in lexicographic order of their diagonal lists.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    if n < 3 {
        return invalid(format!("a polygon needs at least 3 vertices, got {n}"));
    }
    // memo[a][b] holds the triangulations of the sub-polygon a..=b, whose
    // base chord {a, b} is excluded.
    let mut memo: HashMap<(usize, usize), Vec<Vec<Diagonal>>> = HashMap::new();
    fn sub(a: usize, b: usize, memo: &mut HashMap<(usize, usize), Vec<Vec<Diagonal>>>) -> Vec<Vec<Diagonal>> {
        if b - a < 2 {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&(a, b)) {
            return v.clone();
        }
        let mut out = Vec::new();
        for k in a + 1..b {
            let left = sub(a, k, memo);
            let right = sub(k, b, memo);
            for l in &left {
                for r in &right {
                    let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                    d.extend_from_slice(l);
                    d.extend_from_slice(r);
                    if k - a >= 2 {
                        d.push(Diagonal::unchecked(a, k));
                    }
                    if b - k >= 2 {
                        d.push(Diagonal::unchecked(k, b));
                    }
                    out.push(d);
                }
            }
        }
        memo.insert((a, b), out.clone());
        out
    }
    let mut all: Vec<Triangulation> = sub(0, n - 1, &mut memo)
        .into_iter()
        .map(|mut d| {
            d.sort_unstable();
            Triangulation::from_sorted_unchecked(n, d)
        })
        .collect();
    all.sort();
    Ok(all)
}

/// The 1-skeleton of the associahedron: triangulations joined by single flips.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    n: usize,
    vertices: Vec<Triangulation>,
    index: HashMap<Triangulation, usize>,
    graph: Graph,
}

impl FlipGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Triangulation] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        self.index.get(t).copied()
    }
}

pub fn build_associahedron(n: usize) -> Result<FlipGraph> {
    build_associahedron_capped(n, DEFAULT_MAX_N)
}

pub fn build_associahedron_capped(n: usize, cap: usize) -> Result<FlipGraph> {
    if n > cap {
        return Err(Error::ResourceCap { n, cap });
    }
    let vertices = enumerate_triangulations(n)?;
    let index: HashMap<Triangulation, usize> =
        vertices.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut graph = Graph::new(vertices.len());
    for (i, t) in vertices.iter().enumerate() {
        for s in t.flip_neighbors() {
            let j = index[&s];
            if i < j {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(FlipGraph { n, vertices, index, graph })
}
