//! Colorers for structured graph classes.
//!
//! - [`color_minor_degenerate`]: contraction/deletion recursion for
//!   `(q, d)`-degenerate minor-closed families, with surface profiles from
//!   [`surface_profile`].
//! - [`color_with_deletion`] and [`color_near_bounded_degree`]: peel off a few
//!   high-degree vertices and color the rest.
//! - [`build_layered_plan`] and [`build_product_plan`]: ordering plans for the
//!   ordering-plan colorer from a layered tree-decomposition or a strong product.
//! - [`extract_subdivision_witness`]: induced-subgraph certificates inside
//!   `(≤1)`-subdivisions.

mod deletion;
mod layered;
mod minor;
mod product;
mod subdivision;
mod surface;

use thiserror::Error;

use crate::coloring::{AchievementSpec, Color, Coloring, ListAssignment};
use crate::decomp::DecompError;
use crate::exact::ExactError;
use crate::graph::{EdgeSet, Graph, GraphError, Vertex};
use crate::ordering::OrderingError;

pub use deletion::{color_near_bounded_degree, color_with_deletion, near_bounded_list_size};
pub use layered::{build_layered_plan, LayeredPlan};
pub use minor::{
    color_minor_degenerate, DegeneracyCertificate, MinorColorRequest, MinorColoring,
};
pub use product::{build_product_plan, ProductPlan};
pub use subdivision::{extract_subdivision_witness, SubdivisionWitness};
pub use surface::{surface_profile, SurfaceProfile};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructuredError {
    #[error("list of vertex {vertex} has {have} colors, {need} needed")]
    ListTooShort {
        vertex: Vertex,
        have: usize,
        need: usize,
    },
    #[error("list assignment covers {got} vertices, graph has {expected}")]
    ListCount { expected: usize, got: usize },
    #[error("deleted edge {0}-{1} is not an edge of the graph")]
    DeletedEdgeAbsent(Vertex, Vertex),
    #[error("degeneracy violated: {} remaining vertices all have degree above the bound (minimum {})", .0.vertices.len(), .0.min_degree)]
    DegeneracyViolated(Box<DegeneracyCertificate>),
    #[error("{found} vertices have degree at least d, at most {allowed} allowed")]
    TooManyHighDegreeVertices { found: usize, allowed: usize },
    #[error("this colorer needs 1 in S")]
    SpecWithoutOne,
    #[error("no valid coloring found: {0}")]
    NoColoring(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A list colorer usable as an inner routine: the result must be proper on
/// all of `g` and `S`-achieved in `g - E(H)`.
pub trait ListColorer: Send + Sync {
    fn name(&self) -> &str;

    fn color(
        &self,
        g: &Graph,
        lists: &ListAssignment,
        spec: &AchievementSpec,
        deleted: &EdgeSet,
    ) -> Result<Coloring, StructuredError>;
}

pub(crate) fn check_list_count(g: &Graph, lists: &ListAssignment) -> Result<(), StructuredError> {
    if lists.len() != g.vertex_count() {
        return Err(StructuredError::ListCount {
            expected: g.vertex_count(),
            got: lists.len(),
        });
    }
    Ok(())
}

/// Greedy proper list coloring of the square, in id order. Every
/// neighbourhood is then rainbow, so any `S` containing 1 is achieved.
#[derive(Debug, Clone, Copy, Default)]
pub struct SquareGreedy;

impl SquareGreedy {
    pub fn color_square(g: &Graph, lists: &ListAssignment) -> Result<Coloring, StructuredError> {
        check_list_count(g, lists)?;
        let sq = g.square();
        let mut colors: Vec<Option<Color>> = vec![None; g.vertex_count()];
        for v in g.vertices() {
            let c = lists
                .list(v)
                .iter()
                .copied()
                .find(|&c| sq.neighbors(v).iter().all(|&u| colors[u] != Some(c)))
                .ok_or(StructuredError::ListTooShort {
                    vertex: v,
                    have: lists.list(v).len(),
                    need: sq.degree(v) + 1,
                })?;
            colors[v] = Some(c);
        }
        Ok(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
    }
}

impl ListColorer for SquareGreedy {
    fn name(&self) -> &str {
        "square-greedy"
    }

    fn color(
        &self,
        g: &Graph,
        lists: &ListAssignment,
        spec: &AchievementSpec,
        _deleted: &EdgeSet,
    ) -> Result<Coloring, StructuredError> {
        if !spec.contains_one() {
            return Err(StructuredError::SpecWithoutOne);
        }
        Self::color_square(g, lists)
    }
}

/// [`color_minor_degenerate`] as a [`ListColorer`].
#[derive(Debug, Clone, Copy)]
pub struct MinorDegenerate {
    pub profile: crate::graph::DegeneracyProfile,
}

impl ListColorer for MinorDegenerate {
    fn name(&self) -> &str {
        "minor-degenerate"
    }

    fn color(
        &self,
        g: &Graph,
        lists: &ListAssignment,
        spec: &AchievementSpec,
        deleted: &EdgeSet,
    ) -> Result<Coloring, StructuredError> {
        if !spec.contains_one() {
            return Err(StructuredError::SpecWithoutOne);
        }
        let req = MinorColorRequest {
            graph: g.clone(),
            lists: lists.clone(),
            profile: self.profile,
            deleted: deleted.clone(),
        };
        Ok(color_minor_degenerate(&req)?.coloring)
    }
}

/// Exhaustive search as a [`ListColorer`]; bounded by the exact oracle's size cap.
#[derive(Debug, Clone, Copy)]
pub struct ExactListColorer {
    pub max_vertices: usize,
}

impl Default for ExactListColorer {
    fn default() -> Self {
        Self { max_vertices: 12 }
    }
}

impl ListColorer for ExactListColorer {
    fn name(&self) -> &str {
        "exact"
    }

    fn color(
        &self,
        g: &Graph,
        lists: &ListAssignment,
        spec: &AchievementSpec,
        deleted: &EdgeSet,
    ) -> Result<Coloring, StructuredError> {
        let n = g.vertex_count();
        if n > self.max_vertices {
            return Err(ExactError::InstanceTooLarge {
                n,
                cap: self.max_vertices,
            }
            .into());
        }
        crate::exact::exact_list_coloring(g, lists, spec, Some(deleted))?
            .ok_or_else(|| StructuredError::NoColoring("exhaustive search found none".into()))
    }
}
