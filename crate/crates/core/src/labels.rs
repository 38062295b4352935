//! Conventional labels of the non-rigid coloring classes for hexagons
//! (`P1`..`P5`), heptagons (`P1`..`P7`) and octagons (`A`..`Z`).
//!
//! Each entry is one representative read around the polygon from vertex 0;
//! lookups go through the canonical form, so any member of the orbit works.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::coloring::{canonicalize_coloring, PolygonColoring};

pub const HEXAGON: [(&str, &str); 5] = [
    ("1", "0,1,0,3,0,2"),
    ("2", "0,1,0,3,2,1"),
    ("3", "0,1,0,2,3,2"),
    ("4", "0,1,0,3,1,2"),
    ("5", "0,1,3,0,1,2"),
];

pub const HEPTAGON: [(&str, &str); 7] = [
    ("1", "0,1,0,2,3,0,1"),
    ("2", "0,1,0,3,1,0,2"),
    ("3", "0,1,0,1,3,0,2"),
    ("4", "0,1,0,2,3,2,1"),
    ("5", "0,1,0,3,2,1,2"),
    ("6", "0,1,0,2,3,1,2"),
    ("7", "0,1,2,0,3,1,2"),
];

pub const OCTAGON: [(&str, &str); 26] = [
    ("A", "0,1,0,3,0,1,0,2"),
    ("B", "0,1,0,2,0,3,0,1"),
    ("C", "0,1,0,1,3,2,0,1"),
    ("D", "0,1,0,2,1,3,0,1"),
    ("E", "0,1,0,2,3,2,0,2"),
    ("F", "0,1,2,0,3,2,0,2"),
    ("G", "0,1,2,0,2,3,0,2"),
    ("H", "0,1,0,2,3,2,0,1"),
    ("I", "0,1,0,2,1,3,0,2"),
    ("J", "0,1,0,2,3,1,0,2"),
    ("K", "0,1,0,1,2,3,0,2"),
    ("L", "0,1,0,3,2,3,0,2"),
    ("M", "0,1,0,1,3,2,0,2"),
    ("N", "0,1,2,0,2,3,0,1"),
    ("O", "0,1,2,0,3,2,0,1"),
    ("P", "0,1,2,0,3,1,0,2"),
    ("Q", "0,1,3,0,3,1,0,2"),
    ("R", "0,1,2,0,1,3,0,2"),
    ("S", "0,1,3,0,1,3,0,2"),
    ("T", "0,1,2,3,2,3,0,1"),
    ("U", "0,1,2,3,1,3,0,2"),
    ("V", "0,1,3,2,3,1,0,2"),
    ("W", "0,1,3,2,1,3,0,2"),
    ("X", "0,1,3,0,2,3,1,2"),
    ("Y", "0,1,3,2,0,3,1,2"),
    ("Z", "0,1,3,2,0,1,3,2"),
];

/// The labelled table for polygon size `n`, if one exists.
pub fn table(n: usize) -> Option<&'static [(&'static str, &'static str)]> {
    match n {
        6 => Some(&HEXAGON),
        7 => Some(&HEPTAGON),
        8 => Some(&OCTAGON),
        _ => None,
    }
}

/// Representative coloring for a label such as `"T"` (octagon) or `"4"`.
pub fn representative(n: usize, label: &str) -> Option<PolygonColoring> {
    table(n)?
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, c)| c.parse().expect("label table colorings are proper"))
}

fn index() -> &'static HashMap<PolygonColoring, (usize, &'static str)> {
    static INDEX: OnceLock<HashMap<PolygonColoring, (usize, &'static str)>> = OnceLock::new();
    INDEX.get_or_init(|| {
        let mut map = HashMap::new();
        for n in 6..=8 {
            for (rank, (label, c)) in table(n).unwrap().iter().enumerate() {
                let c: PolygonColoring = c.parse().expect("label table colorings are proper");
                map.insert(canonicalize_coloring(&c), (rank, *label));
            }
        }
        map
    })
}

/// Label and table position of the class containing `c`.
pub fn lookup(c: &PolygonColoring) -> Option<(usize, &'static str)> {
    index().get(&canonicalize_coloring(c)).copied()
}
