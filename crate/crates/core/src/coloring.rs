//! Klein four-group colorings of polygon vertices and their color vectors.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::polygon::{BinaryTree, Triangulation};

/// Element of Z2 x Z2 encoded in two bits; the group law is XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct KleinElement(u8);

impl KleinElement {
    pub const ZERO: KleinElement = KleinElement(0);
    pub const ALL: [KleinElement; 4] =
        [KleinElement(0), KleinElement(1), KleinElement(2), KleinElement(3)];

    pub fn new(value: u8) -> Result<Self> {
        if value > 3 {
            return invalid(format!("Klein four-group elements are 0..=3, got {value}"));
        }
        Ok(KleinElement(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for KleinElement {
    type Output = KleinElement;

    fn add(self, rhs: KleinElement) -> KleinElement {
        KleinElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for KleinElement {
    fn add_assign(&mut self, rhs: KleinElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn klein_add(a: KleinElement, b: KleinElement) -> KleinElement {
    a + b
}

/// A proper vertex coloring of the n-cycle with colors `0..=3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonColoring {
    colors: Vec<KleinElement>,
}

impl PolygonColoring {
    pub fn new(colors: &[u8]) -> Result<Self> {
        let colors = colors.iter().map(|&c| KleinElement::new(c)).collect::<Result<Vec<_>>>()?;
        Self::from_elements(colors)
    }

    pub fn from_elements(colors: Vec<KleinElement>) -> Result<Self> {
        let n = colors.len();
        if n < 3 {
            return invalid(format!("a polygon coloring needs at least 3 vertices, got {n}"));
        }
        if let Some(i) = (0..n).find(|&i| colors[i] == colors[(i + 1) % n]) {
            return invalid(format!(
                "adjacent vertices {i} and {} share color {}",
                (i + 1) % n,
                colors[i]
            ));
        }
        Ok(PolygonColoring { colors })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[KleinElement] {
        &self.colors
    }

    pub fn color(&self, i: usize) -> KleinElement {
        self.colors[i]
    }

    pub fn values(&self) -> Vec<u8> {
        self.colors.iter().map(|c| c.0).collect()
    }

    /// Number of vertices carrying each color, indexed by color value.
    pub fn multiplicities(&self) -> [usize; 4] {
        let mut m = [0; 4];
        for c in &self.colors {
            m[c.index()] += 1;
        }
        m
    }

    /// Nonzero multiplicities in descending order, e.g. `[3, 2, 2, 1]`.
    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.multiplicities().into_iter().filter(|&k| k > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn colors_used(&self) -> usize {
        self.multiplicities().iter().filter(|&&k| k > 0).count()
    }

    /// Image under a polygon symmetry followed by a color permutation.
    /// Vertex `i` of the result takes the color of vertex `rot + i`
    /// (or `rot - i` when `reflect`), relabelled through `perm`.
    pub fn transformed(&self, rot: usize, reflect: bool, perm: &[u8; 4]) -> PolygonColoring {
        let n = self.n();
        let colors = (0..n)
            .map(|i| {
                let src = if reflect { (rot + n - i) % n } else { (rot + i) % n };
                KleinElement(perm[self.colors[src].index()])
            })
            .collect();
        PolygonColoring { colors }
    }

    /// All `2n` images under rotations and reflections, colors untouched.
    fn dihedral_images(&self) -> impl Iterator<Item = PolygonColoring> + '_ {
        let n = self.n();
        (0..n).flat_map(move |rot| {
            [false, true].into_iter().map(move |reflect| self.transformed(rot, reflect, &IDENTITY))
        })
    }

    /// Relabels colors in order of first appearance, which is the
    /// lexicographically smallest image under color permutations.
    fn relabel_by_first_occurrence(&self) -> PolygonColoring {
        let mut map = [u8::MAX; 4];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|c| {
                if map[c.index()] == u8::MAX {
                    map[c.index()] = next;
                    next += 1;
                }
                KleinElement(map[c.index()])
            })
            .collect();
        PolygonColoring { colors }
    }
}

const IDENTITY: [u8; 4] = [0, 1, 2, 3];

/// All 24 permutations of the four colors, in lexicographic order.
pub fn color_permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let Some(d) = 6u8.checked_sub(a + b + c) else { continue };
                let p = [a, b, c, d];
                if d < 4 && BTreeSet::from(p).len() == 4 {
                    out.push(p);
                }
            }
        }
    }
    out
}

impl fmt::Display for PolygonColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PolygonColoring {
    type Err = Error;

    /// Comma-separated digits, vertex 0 first: `"0,1,0,3,0,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<u8>().map_err(|_| Error::Parse(format!("bad color {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PolygonColoring::new(&values)
    }
}

/// Leaf colors of the dual tree, left to right: entry `i` is the sum of the
/// colors at the ends of polygon side `{i, i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorVector(Vec<KleinElement>);

impl ColorVector {
    pub fn new(entries: &[u8]) -> Result<Self> {
        let entries = entries.iter().map(|&c| KleinElement::new(c)).collect::<Result<Vec<_>>>()?;
        if entries.iter().any(|e| e.is_zero()) {
            return invalid("color vector entries must be nonzero");
        }
        Ok(ColorVector(entries))
    }

    pub fn entries(&self) -> &[KleinElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> KleinElement {
        self.0.iter().fold(KleinElement::ZERO, |a, &b| a + b)
    }

    /// A coloring realizing this vector, normalised to start with color 0.
    pub fn to_coloring(&self) -> Result<PolygonColoring> {
        let mut colors = vec![KleinElement::ZERO];
        for &e in &self.0 {
            let last = *colors.last().unwrap();
            colors.push(last + e);
        }
        PolygonColoring::from_elements(colors)
    }

    /// `Some((p, q))` if the vector reads `a^p b a^q` for distinct colors `a`, `b`.
    pub fn vine_shape(&self) -> Option<(usize, usize)> {
        let v = &self.0;
        if v.len() < 2 {
            return None;
        }
        (0..v.len()).find_map(|k| {
            let others = v.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, e)| e);
            let base = if k == 0 { v[1] } else { v[0] };
            (base != v[k] && others.clone().all(|&e| e == base)).then_some((k, v.len() - 1 - k))
        })
    }
}

impl fmt::Display for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.0 {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn color_vector(c: &PolygonColoring) -> ColorVector {
    let n = c.n();
    ColorVector((0..n - 1).map(|i| c.colors[i] + c.colors[i + 1]).collect())
}

/// Whether every diagonal of `t` joins differently colored vertices.
pub fn is_compatible(c: &PolygonColoring, t: &Triangulation) -> Result<bool> {
    if c.n() != t.n() {
        return invalid(format!("coloring of a {}-gon against a triangulation of a {}-gon", c.n(), t.n()));
    }
    Ok(t.diagonals().iter().all(|d| c.color(d.lo()) != c.color(d.hi())))
}

/// Color carried by the root edge when `v` extends to a proper edge
/// coloring of `tree`, `None` when some node sees two equal child colors.
pub fn root_edge_color(v: &ColorVector, tree: &BinaryTree) -> Result<Option<KleinElement>> {
    tree.validate()?;
    if tree.leaf_count() != v.len() {
        return invalid(format!("tree has {} leaves but the color vector has {} entries", tree.leaf_count(), v.len()));
    }
    fn up(v: &ColorVector, t: &BinaryTree) -> Option<KleinElement> {
        match t {
            BinaryTree::Leaf(i) => Some(v.0[i - 1]),
            BinaryTree::Node(l, r) => {
                let (a, b) = (up(v, l)?, up(v, r)?);
                (a != b).then_some(a + b)
            }
        }
    }
    Ok(up(v, tree))
}

pub fn is_valid(v: &ColorVector, tree: &BinaryTree) -> Result<bool> {
    Ok(root_edge_color(v, tree)?.is_some())
}

/// Lexicographically smallest image over rotations, reflections and all
/// permutations of the four colors.
pub fn canonicalize_coloring(c: &PolygonColoring) -> PolygonColoring {
    c.dihedral_images().map(|img| img.relabel_by_first_occurrence()).min().unwrap()
}

/// Number of distinct images of `c` under the symmetry group.
pub fn orbit_size(c: &PolygonColoring) -> usize {
    let perms = color_permutations();
    let mut seen = HashSet::new();
    for img in c.dihedral_images() {
        for p in &perms {
            seen.insert(img.transformed(0, false, p));
        }
    }
    seen.len()
}

/// Scans every root side, both orientations and all relabelings of the
/// nonzero colors for a color vector of the form `1^p 2 1^q`; returns
/// `(p, q)` with `p <= q`.
pub fn is_vine_class(c: &PolygonColoring) -> Option<(usize, usize)> {
    c.dihedral_images()
        .filter_map(|img| color_vector(&img).vine_shape())
        .map(|(p, q)| (p.min(q), p.max(q)))
        .min()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringClass {
    pub representative: PolygonColoring,
    pub orbit_size: usize,
    pub partition: Vec<usize>,
    pub colors_used: usize,
}

impl ColoringClass {
    pub fn partition_label(&self) -> String {
        partition_label(&self.partition)
    }
}

pub fn partition_label(p: &[usize]) -> String {
    p.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}

/// Every proper coloring of the n-cycle with up to four colors, up to
/// polygon symmetries and color permutations. Ordered by partition
/// (descending) and then by canonical representative.
pub fn enumerate_coloring_classes(n: usize) -> Result<Vec<ColoringClass>> {
    if n < 3 {
        return invalid(format!("a polygon coloring needs at least 3 vertices, got {n}"));
    }
    // Every orbit has a member starting 0, 1.
    let mut reps = BTreeSet::new();
    let mut colors = vec![0u8; n];
    colors[1] = 1;
    fn fill(i: usize, colors: &mut Vec<u8>, reps: &mut BTreeSet<PolygonColoring>) {
        let n = colors.len();
        if i == n {
            if colors[n - 1] != colors[0] {
                let c = PolygonColoring::new(colors).expect("proper by construction");
                reps.insert(canonicalize_coloring(&c));
            }
            return;
        }
        for v in 0..4u8 {
            if v != colors[i - 1] {
                colors[i] = v;
                fill(i + 1, colors, reps);
            }
        }
    }
    fill(2, &mut colors, &mut reps);
    let mut classes: Vec<ColoringClass> = reps
        .into_iter()
        .map(|rep| ColoringClass {
            orbit_size: orbit_size(&rep),
            partition: rep.partition(),
            colors_used: rep.colors_used(),
            representative: rep,
        })
        .collect();
    classes.sort_by(|a, b| b.partition.cmp(&a.partition).then_with(|| a.representative.cmp(&b.representative)));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::enumerate_triangulations;

    fn k(v: u8) -> KleinElement {
        KleinElement::new(v).unwrap()
    }

    fn col(s: &str) -> PolygonColoring {
        s.parse().unwrap()
    }

    #[test]
    fn klein_group_law() {
        assert_eq!(klein_add(k(1), k(2)), k(3));
        assert_eq!(klein_add(k(2), k(2)), k(0));
        assert_eq!(klein_add(k(0), k(3)), k(3));
        assert_eq!(k(1) + k(2) + k(3), KleinElement::ZERO);
        for a in KleinElement::ALL {
            assert_eq!(a + a, KleinElement::ZERO);
            for b in KleinElement::ALL {
                assert_eq!(a + b, b + a);
            }
        }
        assert!(KleinElement::new(4).is_err());
    }

    #[test]
    fn coloring_parse_and_errors() {
        assert_eq!(col("0,1,0,3,0,2").to_string(), "0,1,0,3,0,2");
        assert!("0,1,1".parse::<PolygonColoring>().is_err());
        assert!("0,1,0".parse::<PolygonColoring>().is_err());
        assert!("0,1,4".parse::<PolygonColoring>().is_err());
        assert!("0,1".parse::<PolygonColoring>().is_err());
        assert!("0,x,2".parse::<PolygonColoring>().is_err());
    }

    #[test]
    fn color_vectors() {
        assert_eq!(color_vector(&col("0,1,2")).to_string(), "13");
        let c = col("0,1,0,3,0,2");
        let v = color_vector(&c);
        assert_eq!(v.to_string(), "11332");
        assert_eq!(v.sum(), c.color(0) + c.color(5));
        assert_eq!(v.to_coloring().unwrap(), c);
        // Permuting 1,2,3 while fixing 0 permutes the vector entries.
        let swapped = c.transformed(0, false, &[0, 2, 3, 1]);
        assert_eq!(color_vector(&swapped).to_string(), "22113");
    }

    #[test]
    fn compatibility_examples() {
        let c = col("0,1,0,3,0,2");
        let fan1 = Triangulation::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
        let fan0 = Triangulation::new(6, [(0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_compatible(&c, &fan1).unwrap());
        assert!(!is_compatible(&c, &fan0).unwrap());
        let rainbow = col("0,1,2,3");
        for t in enumerate_triangulations(4).unwrap() {
            assert!(is_compatible(&rainbow, &t).unwrap());
        }
        assert!(is_compatible(&rainbow, &fan1).is_err());
    }

    #[test]
    fn validity_examples() {
        let two_leaf = BinaryTree::node(BinaryTree::Leaf(1), BinaryTree::Leaf(2));
        let v = ColorVector::new(&[1, 3]).unwrap();
        assert_eq!(root_edge_color(&v, &two_leaf).unwrap(), Some(k(2)));
        assert!(!is_valid(&ColorVector::new(&[1, 1]).unwrap(), &two_leaf).unwrap());
        let fan1 = Triangulation::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
        let tree = BinaryTree::from_triangulation(&fan1);
        assert!(is_valid(&ColorVector::new(&[1, 1, 3, 3, 2]).unwrap(), &tree).unwrap());
        assert!(is_valid(&v, &tree).is_err());
        assert!(ColorVector::new(&[1, 0]).is_err());
    }

    #[test]
    fn compatibility_equals_validity() {
        for n in 3..=8 {
            let tris = enumerate_triangulations(n).unwrap();
            let trees: Vec<BinaryTree> = tris.iter().map(BinaryTree::from_triangulation).collect();
            for class in enumerate_coloring_classes(n).unwrap() {
                let c = &class.representative;
                let v = color_vector(c);
                for (t, tree) in tris.iter().zip(&trees) {
                    assert_eq!(is_compatible(c, t).unwrap(), is_valid(&v, tree).unwrap());
                }
            }
        }
    }

    /// Brute-force orbit minimum over the full group of 2n * 24 elements.
    fn brute_canonical(c: &PolygonColoring) -> PolygonColoring {
        let mut best: Option<PolygonColoring> = None;
        for rot in 0..c.n() {
            for reflect in [false, true] {
                for p in color_permutations() {
                    let img = c.transformed(rot, reflect, &p);
                    if best.as_ref().map_or(true, |b| img < *b) {
                        best = Some(img);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn canonical_form_matches_brute_force() {
        for s in ["0,1,0,3,0,2", "0,1,2,3,2,3,0,1", "2,3,1,0,1,0,3", "3,2,1,2,1"] {
            let c = col(s);
            assert_eq!(canonicalize_coloring(&c), brute_canonical(&c));
        }
    }

    #[test]
    fn canonical_examples() {
        let c = col("0,1,0,3,0,2");
        let rotated = c.transformed(2, false, &IDENTITY);
        let swapped = c.transformed(0, false, &[0, 1, 3, 2]);
        let canon = canonicalize_coloring(&c);
        assert_eq!(canonicalize_coloring(&rotated), canon);
        assert_eq!(canonicalize_coloring(&swapped), canon);
        assert_eq!(canonicalize_coloring(&canon), canon);
        // Two distinct hexagon classes with the same partition.
        assert_ne!(canonicalize_coloring(&col("0,1,0,3,2,1")), canonicalize_coloring(&col("0,1,0,2,3,2")));
    }

    #[test]
    fn class_orbits_sum_to_chromatic_polynomial() {
        for n in 3..=10 {
            let total: usize = enumerate_coloring_classes(n).unwrap().iter().map(|c| c.orbit_size).sum();
            let expected = 3i64.pow(n as u32) + if n % 2 == 0 { 3 } else { -3 };
            assert_eq!(total as i64, expected, "n={n}");
        }
    }

    #[test]
    fn class_order_is_partition_descending() {
        let classes = enumerate_coloring_classes(8).unwrap();
        assert!(classes.windows(2).all(|w| w[0].partition >= w[1].partition));
        assert!(enumerate_coloring_classes(2).is_err());
    }

    #[test]
    fn vine_detection() {
        assert_eq!(is_vine_class(&col("0,1,2,3,2,3,0,1")), Some((3, 3)));
        assert_eq!(is_vine_class(&col("0,1,0,2,3,2,0,1")), Some((2, 4)));
        assert_eq!(is_vine_class(&col("0,1,0,3,0,2")), None);
        let t = col("0,1,2,3,2,3,0,1");
        for p in color_permutations() {
            assert_eq!(is_vine_class(&t.transformed(3, true, &p)), Some((3, 3)));
        }
    }

    #[test]
    fn vine_shapes() {
        assert_eq!(ColorVector::new(&[1, 1, 2, 1]).unwrap().vine_shape(), Some((2, 1)));
        assert_eq!(ColorVector::new(&[3, 1, 1]).unwrap().vine_shape(), Some((0, 2)));
        assert_eq!(ColorVector::new(&[1, 2, 2, 1]).unwrap().vine_shape(), None);
    }
}
