use std::fmt;

use super::{Diagonal, Triangulation};
use crate::error::{invalid, Result};

/// Rooted binary tree dual to a triangulation.
///
/// The root edge crosses the polygon side `{n-1, 0}`; leaf `i` (numbered
/// `1..n` left to right) crosses the side `{i-1, i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf(usize),
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf(_) => 1,
            BinaryTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            BinaryTree::Leaf(i) => out.push(*i),
            BinaryTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Checks that the leaves read `1, 2, ..., k` from left to right.
    pub fn validate(&self) -> Result<()> {
        let leaves = self.leaves();
        if leaves.len() < 2 {
            return invalid("a dual tree needs at least two leaves");
        }
        if leaves.iter().enumerate().any(|(i, &l)| l != i + 1) {
            return invalid(format!("leaves must be numbered 1..{} in order, got {leaves:?}", leaves.len()));
        }
        Ok(())
    }

    /// Every tree reachable by a single rotation at some internal edge.
    pub fn rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            // Right rotation: ((a, b), c) -> (a, (b, c)).
            if let BinaryTree::Node(a, b) = l.as_ref() {
                out.push(BinaryTree::node(
                    a.as_ref().clone(),
                    BinaryTree::node(b.as_ref().clone(), r.as_ref().clone()),
                ));
            }
            // Left rotation: (a, (b, c)) -> ((a, b), c).
            if let BinaryTree::Node(b, c) = r.as_ref() {
                out.push(BinaryTree::node(
                    BinaryTree::node(l.as_ref().clone(), b.as_ref().clone()),
                    c.as_ref().clone(),
                ));
            }
            for sub in l.rotations() {
                out.push(BinaryTree::node(sub, r.as_ref().clone()));
            }
            for sub in r.rotations() {
                out.push(BinaryTree::node(l.as_ref().clone(), sub));
            }
        }
        out
    }

    pub fn from_triangulation(t: &Triangulation) -> BinaryTree {
        fn build(t: &Triangulation, a: usize, b: usize) -> BinaryTree {
            if b == a + 1 {
                return BinaryTree::Leaf(b);
            }
            let k = t.apex_between(a, b).expect("every chord of a triangulation bounds a triangle");
            BinaryTree::node(build(t, a, k), build(t, k, b))
        }
        build(t, 0, t.n() - 1)
    }

    pub fn to_triangulation(&self) -> Result<Triangulation> {
        self.validate()?;
        let n = self.leaf_count() + 1;
        let mut diags = Vec::with_capacity(n - 3);
        // Returns the polygon interval [first-1, last] spanned by the subtree.
        fn walk(t: &BinaryTree, out: &mut Vec<Diagonal>) -> (usize, usize) {
            match t {
                BinaryTree::Leaf(i) => (i - 1, *i),
                BinaryTree::Node(l, r) => {
                    let (a, k) = walk(l, out);
                    let (_, b) = walk(r, out);
                    if k - a >= 2 {
                        out.push(Diagonal::unchecked(a, k));
                    }
                    if b - k >= 2 {
                        out.push(Diagonal::unchecked(k, b));
                    }
                    (a, b)
                }
            }
        }
        walk(self, &mut diags);
        diags.sort_unstable();
        Ok(Triangulation::from_sorted_unchecked(n, diags))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf(i) => write!(f, "{i}"),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::enumerate_triangulations;

    fn leaf(i: usize) -> BinaryTree {
        BinaryTree::Leaf(i)
    }

    #[test]
    fn square_duality() {
        let t = Triangulation::new(4, [(0, 2)]).unwrap();
        let tree = BinaryTree::from_triangulation(&t);
        assert_eq!(tree, BinaryTree::node(BinaryTree::node(leaf(1), leaf(2)), leaf(3)));
        assert_eq!(tree.to_string(), "((1,2),3)");
        assert_eq!(tree.to_triangulation().unwrap(), t);

        let s = Triangulation::new(4, [(1, 3)]).unwrap();
        assert_eq!(BinaryTree::from_triangulation(&s).to_string(), "(1,(2,3))");
    }

    #[test]
    fn triangle_duality() {
        let t = Triangulation::new(3, []).unwrap();
        let tree = BinaryTree::from_triangulation(&t);
        assert_eq!(tree.to_string(), "(1,2)");
        let back = tree.to_triangulation().unwrap();
        assert_eq!(back.n(), 3);
        assert!(back.diagonals().is_empty());
    }

    #[test]
    fn malformed_trees_rejected() {
        assert!(leaf(1).to_triangulation().is_err());
        assert!(BinaryTree::node(leaf(2), leaf(1)).to_triangulation().is_err());
        assert!(BinaryTree::node(leaf(1), leaf(3)).to_triangulation().is_err());
    }

    #[test]
    fn round_trip_all_small() {
        for n in 3..=9 {
            let all = enumerate_triangulations(n).unwrap();
            let mut trees = std::collections::HashSet::new();
            for t in &all {
                let tree = BinaryTree::from_triangulation(t);
                assert_eq!(tree.leaf_count(), n - 1);
                assert_eq!(&tree.to_triangulation().unwrap(), t);
                trees.insert(tree);
            }
            assert_eq!(trees.len(), all.len());
        }
    }

    #[test]
    fn flips_are_rotations() {
        for n in 4..=8 {
            for t in enumerate_triangulations(n).unwrap() {
                let tree = BinaryTree::from_triangulation(&t);
                let rotated = tree.rotations();
                assert_eq!(rotated.len(), n - 3);
                for s in t.flip_neighbors() {
                    assert!(rotated.contains(&BinaryTree::from_triangulation(&s)));
                }
            }
        }
    }
}
