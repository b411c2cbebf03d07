//! Proper conflict-free and odd list coloring of structured graph classes.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: simple graphs, minor and product operations, generators, I/O.
//! - [`coloring`]: colorings, list assignments, achievement sets, verifiers.
//! - [`decomp`]: tree decompositions, layerings and their validation.
//! - [`ordering`]: the ordering-plan colorer.
//! - [`structured`]: colorers for minor-closed, surface, near-bounded-degree,
//!   layered-treewidth and product-structure classes.
//! - [`cliquesum`]: extendable colorers glued along clique-sums and tree decompositions.
//! - [`exact`]: exhaustive oracles for small graphs.

pub mod cliquesum;
pub mod coloring;
pub mod decomp;
pub mod graph;
pub mod ordering;
pub mod structured;
pub mod exact;

pub use coloring::{AchievementSpec, Color, Coloring, ListAssignment, WitnessMap};
pub use graph::{DegeneracyProfile, EdgeSet, Graph, GraphError, Vertex, VertexSet};
