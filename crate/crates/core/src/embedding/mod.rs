//! Embeddings of color graphs: vertex-induced hypercube embeddings via a
//! forbidden color, vine coordinates, isometric (partial cube) embeddings
//! and their diamond-ring obstructions, integer lattice embeddings, and
//! hypercubes spanned by independent flips in rainbow quadrilaterals.

pub mod hypercube;
pub mod lattice;
pub mod partial_cube;
pub mod quads;
pub mod vine;

pub use hypercube::{
    allowed_diagonals, best_forbidden_color, count_formula, dimension_bound, hypercube_assignment, hypercube_embed,
    DiagonalCount, HypercubeEmbedding,
};
pub use lattice::{lattice_embed_search, LatticeBudget, LatticeEmbedding, LatticeOutcome};
pub use partial_cube::{find_diamond_ring, partial_cube_check, DiamondRing, DistanceWitness, PartialCubeReport, PartialCubeStatus};
pub use quads::{rainbow_quad_cube, QuadCube};
pub use vine::{verify_vine_isomorphism, vine_coordinates, vine_from_coordinates};
