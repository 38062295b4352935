use serde::{Deserialize, Serialize};

use crate::coloring::PolygonColoring;
use crate::colorgraph::ColorGraph;
use crate::error::{invalid, Error, Result};
use crate::polygon::Diagonal;

/// Quadrilaterals are compatible when their interiors are disjoint: they may
/// share vertices or one side, but their vertex sets do not interleave.
///
/// `2^r` color graph vertices indexed by bitmask: bit `i` set means
/// quadrilateral `i` uses its second diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadCube {
    pub quads: Vec<[usize; 4]>,
    pub vertices: Vec<usize>,
}

impl QuadCube {
    pub fn dimension(&self) -> usize {
        self.quads.len()
    }
}

/// True when all of `a` lies on the closed arc between two cyclically
/// consecutive vertices of `b` (both sorted), in an `n`-gon.
fn inside_one_gap(a: &[usize; 4], b: &[usize; 4], n: usize) -> bool {
    (0..4).any(|i| {
        let (lo, hi) = (b[i], b[(i + 1) % 4]);
        let span = (hi + n - lo) % n;
        a.iter().all(|&x| (x + n - lo) % n <= span)
    })
}

fn validate(c: &PolygonColoring, quads: &[[usize; 4]]) -> Result<Vec<[usize; 4]>> {
    let n = c.n();
    let mut sorted = Vec::with_capacity(quads.len());
    for q in quads {
        let mut s = *q;
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) || s[3] >= n {
            return invalid(format!("{q:?} is not four distinct vertices of a {n}-gon"));
        }
        let mut colors: Vec<_> = s.iter().map(|&v| c.color(v)).collect();
        colors.sort_unstable();
        colors.dedup();
        if colors.len() != 4 {
            return invalid(format!("quadrilateral {q:?} does not use four colors"));
        }
        sorted.push(s);
    }
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let (a, b) = (&sorted[i], &sorted[j]);
            if a.iter().filter(|v| b.contains(v)).count() > 2 {
                return invalid(format!("quadrilaterals {a:?} and {b:?} overlap"));
            }
            if !inside_one_gap(a, b, n) || !inside_one_gap(b, a, n) {
                return invalid(format!("quadrilaterals {a:?} and {b:?} interleave"));
            }
        }
    }
    Ok(sorted)
}

/// Chords of the quadrilateral's boundary that are polygon diagonals.
fn boundary_diagonals(q: &[usize; 4], n: usize) -> Vec<Diagonal> {
    (0..4).filter_map(|k| Diagonal::new(q[k], q[(k + 1) % 4], n).ok()).collect()
}

/// Finds a color graph vertex containing each quadrilateral's boundary and
/// first diagonal, flips every subset of the quadrilaterals, and checks that
/// the `2^r` results span a hypercube in the color graph. `None` when no
/// compatible triangulation contains all the quadrilaterals.
pub fn rainbow_quad_cube(g: &ColorGraph, quads: &[[usize; 4]]) -> Result<Option<QuadCube>> {
    let c = g.coloring();
    let n = c.n();
    let quads = validate(c, quads)?;
    let first = |q: &[usize; 4]| Diagonal::unchecked(q[0], q[2]);
    let second = |q: &[usize; 4]| Diagonal::unchecked(q[1], q[3]);
    let required: Vec<Diagonal> =
        quads.iter().flat_map(|q| boundary_diagonals(q, n).into_iter().chain([first(q)])).collect();
    let Some(base) = g.vertices().iter().find(|t| required.iter().all(|d| t.contains(d))) else {
        return Ok(None);
    };

    let r = quads.len();
    let mut vertices = Vec::with_capacity(1 << r);
    for mask in 0..1usize << r {
        let mut t = base.clone();
        for (i, q) in quads.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t = t.flip(&first(q))?;
                debug_assert!(t.contains(&second(q)));
            }
        }
        let idx = g
            .index_of(&t)
            .ok_or_else(|| Error::Verification(format!("{} is not in the color graph", t.label())))?;
        vertices.push(idx);
    }
    let graph = g.graph();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let cube_edge = (a ^ b).count_ones() == 1;
            if cube_edge != graph.has_edge(vertices[a], vertices[b]) {
                return Err(Error::Verification(format!("masks {a:b} and {b:b} break the cube structure")));
            }
        }
    }
    Ok(Some(QuadCube { quads, vertices }))
}

/// All sets of pairwise compatible rainbow quadrilaterals of maximum size.
pub fn max_rainbow_quads(c: &PolygonColoring) -> Vec<Vec<[usize; 4]>> {
    let n = c.n();
    let mut single = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for cc in b + 1..n {
                for d in cc + 1..n {
                    if validate(c, &[[a, b, cc, d]]).is_ok() {
                        single.push([a, b, cc, d]);
                    }
                }
            }
        }
    }
    let mut best: Vec<Vec<[usize; 4]>> = Vec::new();
    fn rec(single: &[[usize; 4]], start: usize, c: &PolygonColoring, cur: &mut Vec<[usize; 4]>, best: &mut Vec<Vec<[usize; 4]>>) {
        let len = best.first().map_or(0, Vec::len);
        if cur.len() > len {
            best.clear();
        }
        if cur.len() >= len {
            best.push(cur.clone());
        }
        for i in start..single.len() {
            cur.push(single[i]);
            if validate(c, cur).is_ok() {
                rec(single, i + 1, c, cur, best);
            }
            cur.pop();
        }
    }
    rec(&single, 0, c, &mut Vec::new(), &mut best);
    best
}
