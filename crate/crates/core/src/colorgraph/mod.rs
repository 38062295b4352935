//! Color graphs: the triangulations compatible with a fixed coloring,
//! joined by the flips of the associahedron that stay inside the set.

mod iso;
mod subgraph;

pub use iso::graphs_isomorphic;
pub use subgraph::contains_subgraph;

use serde::{Deserialize, Serialize};

use crate::coloring::{is_compatible, PolygonColoring};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::polygon::{build_associahedron, build_associahedron_capped, FlipGraph, Triangulation};

#[derive(Debug, Clone)]
pub struct ColorGraph {
    coloring: PolygonColoring,
    vertices: Vec<Triangulation>,
    graph: Graph,
}

impl ColorGraph {
    pub fn coloring(&self) -> &PolygonColoring {
        &self.coloring
    }

    /// Compatible triangulations, in associahedron order.
    pub fn vertices(&self) -> &[Triangulation] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(Triangulation::label).collect()
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        self.vertices.binary_search(t).ok()
    }
}

pub fn build_color_graph(c: &PolygonColoring) -> Result<ColorGraph> {
    let assoc = build_associahedron(c.n())?;
    color_graph_in(&assoc, c)
}

pub fn build_color_graph_capped(c: &PolygonColoring, cap: usize) -> Result<ColorGraph> {
    let assoc = build_associahedron_capped(c.n(), cap)?;
    color_graph_in(&assoc, c)
}

/// Restricts a prebuilt associahedron to the triangulations compatible with `c`.
pub fn color_graph_in(assoc: &FlipGraph, c: &PolygonColoring) -> Result<ColorGraph> {
    if assoc.n() != c.n() {
        return invalid(format!("coloring of a {}-gon against the associahedron of a {}-gon", c.n(), assoc.n()));
    }
    let mut keep = Vec::new();
    for (i, t) in assoc.vertices().iter().enumerate() {
        if is_compatible(c, t)? {
            keep.push(i);
        }
    }
    Ok(ColorGraph {
        coloring: c.clone(),
        vertices: keep.iter().map(|&i| assoc.vertices()[i].clone()).collect(),
        graph: assoc.graph().induced(&keep),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Empty,
    Rigid,
    Nonrigid,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Empty => "empty",
            Classification::Rigid => "rigid",
            Classification::Nonrigid => "nonrigid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    /// `None` ("undefined") for empty, edgeless or disconnected graphs.
    pub diameter: Option<usize>,
    pub max_degree: usize,
    pub is_bipartite: bool,
    pub classification: Classification,
}

pub fn classify(g: &Graph) -> Classification {
    match (g.order(), g.size()) {
        (0, _) => Classification::Empty,
        (_, 0) => Classification::Rigid,
        _ => Classification::Nonrigid,
    }
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    GraphStats {
        order: g.order(),
        size: g.size(),
        diameter: if g.size() == 0 { None } else { g.diameter() },
        max_degree: g.max_degree(),
        is_bipartite: g.is_bipartite(),
        classification: classify(g),
    }
}

pub fn is_connected_or_edgeless(g: &Graph) -> bool {
    g.size() == 0 || g.is_connected()
}
