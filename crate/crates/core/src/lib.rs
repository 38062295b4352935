//! Color graphs of polygon triangulations.
//!
//! A proper coloring of the vertices of an n-gon with the Klein four-group
//! selects the triangulations whose diagonals join differently colored
//! vertices; those triangulations and the flips between them form the
//! color graph of the coloring. This crate builds color graphs, analyses
//! them (metrics, isomorphism, subgraph containment), embeds them in
//! hypercubes and integer lattices, and produces catalogs of all coloring
//! classes for small n.

pub mod catalog;
pub mod coloring;
pub mod colorgraph;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod labels;
pub mod polygon;
pub mod verify;

pub use error::{Error, Result};
