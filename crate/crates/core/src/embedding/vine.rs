//! Vines: binary trees compatible with the color vector `1^p 2 1^q`.
//!
//! Leaf `p+1` is the central leaf. The central path runs from the root to it
//! and every other leaf hangs off that path, leaves `1..=p` on the left and
//! `p+2..=p+q+1` on the right. Left leaves are numbered top to bottom, right
//! leaves bottom to top, so a vine is determined by how many right leaves sit
//! above each left leaf.

use std::collections::{BTreeSet, HashMap};

use crate::coloring::ColorVector;
use crate::colorgraph::build_color_graph;
use crate::error::{invalid, Result};
use crate::polygon::BinaryTree;

/// The color vector `1^p 2 1^q`.
pub fn vine_vector(p: usize, q: usize) -> ColorVector {
    let mut entries = vec![1u8; p];
    entries.push(2);
    entries.extend(std::iter::repeat(1).take(q));
    ColorVector::new(&entries).expect("entries are nonzero")
}

/// `x[i]` = number of right leaves above left leaf `i+1`.
pub fn vine_coordinates(tree: &BinaryTree, p: usize, q: usize) -> Result<Vec<usize>> {
    if tree.leaf_count() != p + q + 1 {
        return invalid(format!("tree has {} leaves, a ({p},{q}) vine has {}", tree.leaf_count(), p + q + 1));
    }
    let central = p + 1;
    let mut coords = Vec::with_capacity(p);
    let mut rights_above = 0;
    let mut node = tree;
    while let BinaryTree::Node(l, r) = node {
        let (off, next, off_left) = if r.leaves().contains(&central) { (l, r, true) } else { (r, l, false) };
        let BinaryTree::Leaf(leaf) = **off else {
            return invalid(format!("{tree} is not a vine: subtree {off} hangs off the central path"));
        };
        if off_left {
            // Left leaves must appear top to bottom in increasing order.
            if leaf != coords.len() + 1 {
                return invalid(format!("{tree} is not a ({p},{q}) vine: left leaf {leaf} out of place"));
            }
            coords.push(rights_above);
        } else {
            if leaf != p + q + 1 - rights_above {
                return invalid(format!("{tree} is not a ({p},{q}) vine: right leaf {leaf} out of place"));
            }
            rights_above += 1;
        }
        node = next;
    }
    if *node != BinaryTree::Leaf(central) || coords.len() != p {
        return invalid(format!("{tree} is not a ({p},{q}) vine"));
    }
    Ok(coords)
}

/// Inverse of [`vine_coordinates`].
pub fn vine_from_coordinates(x: &[usize], q: usize) -> Result<BinaryTree> {
    let p = x.len();
    if x.windows(2).any(|w| w[0] > w[1]) || x.last().is_some_and(|&l| l > q) {
        return invalid(format!("{x:?} is not a nondecreasing sequence bounded by {q}"));
    }
    // Off-path leaves from the top down; `true` marks a left leaf.
    let mut seq = Vec::with_capacity(p + q);
    let mut rights = 0;
    for (i, &xi) in x.iter().enumerate() {
        while rights < xi {
            seq.push((false, p + q + 1 - rights));
            rights += 1;
        }
        seq.push((true, i + 1));
    }
    while rights < q {
        seq.push((false, p + q + 1 - rights));
        rights += 1;
    }
    let mut tree = BinaryTree::Leaf(p + 1);
    for &(left, leaf) in seq.iter().rev() {
        tree = if left {
            BinaryTree::node(BinaryTree::Leaf(leaf), tree)
        } else {
            BinaryTree::node(tree, BinaryTree::Leaf(leaf))
        };
    }
    Ok(tree)
}

/// All nondecreasing sequences of length `p` with entries in `0..=q`.
pub fn simplex_points(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(p: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=q {
            cur.push(v);
            rec(p, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, q, &mut Vec::with_capacity(p), &mut out);
    out
}

/// Builds the color graph of `1^p 2 1^q` and checks that vine coordinates are
/// a bijection onto the simplex points under which flips are exactly the
/// unit lattice steps. Needs `p + q >= 1` so the polygon has a vertex to spare.
pub fn verify_vine_isomorphism(p: usize, q: usize) -> Result<bool> {
    if p + q == 0 {
        return invalid("a (0,0) vine would need a 2-gon");
    }
    let coloring = vine_vector(p, q).to_coloring()?;
    let g = build_color_graph(&coloring)?;
    let mut coords = Vec::with_capacity(g.vertices().len());
    for t in g.vertices() {
        match vine_coordinates(&BinaryTree::from_triangulation(t), p, q) {
            Ok(x) => coords.push(x),
            Err(_) => return Ok(false),
        }
    }
    let image: BTreeSet<&Vec<usize>> = coords.iter().collect();
    let simplex = simplex_points(p, q);
    if image.len() != coords.len() || image.into_iter().ne(simplex.iter()) {
        return Ok(false);
    }
    let position: HashMap<&Vec<usize>, usize> = coords.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let graph = g.graph();
    for u in 0..coords.len() {
        for v in u + 1..coords.len() {
            let l1: usize = coords[u].iter().zip(&coords[v]).map(|(a, b)| a.abs_diff(*b)).sum();
            if (l1 == 1) != graph.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    // Round trip through the inverse.
    for (x, &i) in &position {
        if vine_from_coordinates(x, q)?.to_triangulation()? != g.vertices()[i] {
            return Ok(false);
        }
    }
    Ok(true)
}
