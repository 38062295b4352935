use serde::{Deserialize, Serialize};

use crate::coloring::{KleinElement, PolygonColoring};
use crate::colorgraph::ColorGraph;
use crate::error::{invalid, Error, Result};
use crate::polygon::Diagonal;

/// Diagonals joining two differently colored vertices, neither of which
/// carries the `forbidden` color.
pub fn allowed_diagonals(c: &PolygonColoring, forbidden: KleinElement) -> Vec<Diagonal> {
    let n = c.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a, b) = (c.color(i), c.color(j));
            if a != b && a != forbidden && b != forbidden {
                out.push(Diagonal::unchecked(i, j));
            }
        }
    }
    out
}

/// Both closed forms for the number of allowed diagonals given the vertex
/// color multiplicities `w` (forbidden color) and `x`, `y`, `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalCount {
    /// All diagonals minus same-colored pairs minus forbidden diagonals.
    pub expanded: i64,
    /// `(x-1)(y-1) + (y-1)(z-1) + (z-1)(x-1) + n - 3`, when `x, y, z >= 1`.
    pub simplified: Option<i64>,
}

pub fn count_formula(n: usize, w: usize, x: usize, y: usize, z: usize) -> Result<DiagonalCount> {
    if w + x + y + z != n {
        return invalid(format!("multiplicities {w}+{x}+{y}+{z} do not sum to {n}"));
    }
    let choose2 = |k: i64| k * (k - 1) / 2;
    let (n, w, x, y, z) = (n as i64, w as i64, x as i64, y as i64, z as i64);
    let expanded = n * (n - 3) / 2 - choose2(w) - choose2(x) - choose2(y) - choose2(z) - w * (n - 2 - w);
    let simplified = (x >= 1 && y >= 1 && z >= 1)
        .then(|| (x - 1) * (y - 1) + (y - 1) * (z - 1) + (z - 1) * (x - 1) + n - 3);
    Ok(DiagonalCount { expanded, simplified })
}

/// A most frequent color, the smallest on ties.
pub fn best_forbidden_color(c: &PolygonColoring) -> KleinElement {
    let m = c.multiplicities();
    let best = (0..4).max_by_key(|&i| (m[i], std::cmp::Reverse(i))).unwrap();
    KleinElement::ALL[best]
}

/// Upper bound on the number of hypercube coordinates needed by any color
/// graph of an n-gon: `floor(n(3n-8)/16)`.
pub fn dimension_bound(n: usize) -> usize {
    n * (3 * n).saturating_sub(8) / 16
}

/// Each color graph vertex sent to the set of allowed diagonals it contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypercubeEmbedding {
    pub forbidden_color: KleinElement,
    pub allowed: Vec<Diagonal>,
    /// `assignment[v]` lists indices into `allowed`, ascending.
    pub assignment: Vec<Vec<usize>>,
}

impl HypercubeEmbedding {
    pub fn dimension(&self) -> usize {
        self.allowed.len()
    }

    /// Checks injectivity, that edges go to Hamming-distance-1 pairs and
    /// that every Hamming-distance-1 pair in the image is an edge.
    pub fn verify(&self, g: &ColorGraph) -> Result<()> {
        let graph = g.graph();
        if self.assignment.len() != graph.order() {
            return Err(Error::Verification(format!(
                "{} assignments for {} vertices",
                self.assignment.len(),
                graph.order()
            )));
        }
        let label = |v: usize| g.vertices()[v].label();
        for u in 0..graph.order() {
            for v in u + 1..graph.order() {
                let d = hamming(&self.assignment[u], &self.assignment[v]);
                let adjacent = graph.has_edge(u, v);
                if d == 0 {
                    return Err(Error::Verification(format!(
                        "not injective: {} and {} share the image {:?}",
                        label(u),
                        label(v),
                        self.assignment[u]
                    )));
                }
                if adjacent && d != 1 {
                    return Err(Error::Verification(format!(
                        "edge {} -- {} maps to sets at Hamming distance {d}",
                        label(u),
                        label(v)
                    )));
                }
                if !adjacent && d == 1 {
                    return Err(Error::Verification(format!(
                        "image not vertex-induced: {} and {} are hypercube neighbours but not flips",
                        label(u),
                        label(v)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Size of the symmetric difference of two ascending index lists.
pub fn hamming(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

/// Builds the map without checking it.
pub fn hypercube_assignment(g: &ColorGraph, forbidden: KleinElement) -> HypercubeEmbedding {
    let allowed = allowed_diagonals(g.coloring(), forbidden);
    let assignment = g
        .vertices()
        .iter()
        .map(|t| (0..allowed.len()).filter(|&k| t.contains(&allowed[k])).collect())
        .collect();
    HypercubeEmbedding { forbidden_color: forbidden, allowed, assignment }
}

/// Builds the embedding and fails if any of its three properties is violated.
pub fn hypercube_embed(g: &ColorGraph, forbidden: KleinElement) -> Result<HypercubeEmbedding> {
    let emb = hypercube_assignment(g, forbidden);
    emb.verify(g)?;
    Ok(emb)
}
