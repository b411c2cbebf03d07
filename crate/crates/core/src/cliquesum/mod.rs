//! Extendable colorers and how they compose.
//!
//! A colorer for a graph `G`, a collection `C` of vertex sets (the frame), a
//! list assignment `L` and a threshold `t` answers every [`ExtendRequest`]: a
//! clique `W` with `|W| ≤ t`, precolored by `φ_W`, with a forbidden color
//! `f(w)` and a mode `g(w)` per vertex, together with a `C`-compatible edge
//! set `H`. The answer is a proper `L`-coloring extending `φ_W` such that
//!
//! - for `w ∈ W` with `g(w) = 0`, no neighbour of `w` outside `W` gets `f(w)`;
//! - every other vertex `v` has `N_{G-E(H)}(v) = ∅` or some color whose
//!   multiplicity there lies in `S`.
//!
//! [`combine_extendable`] glues two colorers along a clique-sum,
//! [`fold_tree_decomposition`] glues torso colorers along a tree
//! decomposition, and [`adapt_colorability`] turns a list colorer into an
//! extendable one.

mod adapter;
mod audit;
mod fold;
mod sum;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{
    find_witness, multiplicity, verify_proper, AchievementSpec, Color, Coloring, ListAssignment,
    WitnessMap,
};
use crate::decomp::DecompError;
use crate::exact::ExactError;
use crate::graph::{EdgeSet, Graph, GraphError, Vertex, VertexSet};
use crate::structured::StructuredError;

pub use adapter::{adapt_colorability, AdaptedColorer};
pub use audit::{extendability_audit, AuditConfig, AuditFailure, AuditReport};
pub use fold::{fold_tree_decomposition, fold_tree_decomposition_in_order, FoldedColorer, TorsoSpec};
pub use sum::{clique_sum, combine_extendable, merge_lists, CliqueSum, CliqueSumColorer, CliqueSumSpec};

/// What the request fixes at one vertex of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    /// `φ_W(w)`.
    pub color: Color,
    /// `f(w)`; `None` forbids nothing.
    pub forbidden: Option<Color>,
    /// `g(w) = 1`: `w` needs its own witness instead of protecting `f(w)`.
    pub achieve: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExtendRequest {
    /// The clique `W` with its precoloring, forbidden colors and modes.
    pub anchors: BTreeMap<Vertex, Anchor>,
    /// The compatible subgraph `H`, as an edge set.
    pub deleted: EdgeSet,
}

impl ExtendRequest {
    pub fn clique(&self) -> VertexSet {
        self.anchors.keys().copied().collect()
    }

    /// Whether `v` must have a witness: every vertex except the members of
    /// `W` with `g = 0`.
    pub fn requires_witness(&self, v: Vertex) -> bool {
        self.anchors.get(&v).is_none_or(|a| a.achieve)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub coloring: Coloring,
    /// `i_v` for every vertex that requires one and has a nonempty
    /// `N_{G-E(H)}(v)`.
    pub witness: WitnessMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliqueSumError {
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("no extension exists for the request")]
    NoExtension(Box<ExtendRequest>),
    #[error("{side} side failed: {source}")]
    SideFailure {
        side: Side,
        #[source]
        source: Box<CliqueSumError>,
    },
    #[error("lists differ on identified vertex {left} ~ {right}")]
    ListMismatch { left: Vertex, right: Vertex },
    #[error("identified set is not a clique on the {0} side")]
    NotAClique(Side),
    #[error("invalid clique-sum: {0}")]
    InvalidSum(String),
    #[error("extendable colorers need 1 in S")]
    SpecWithoutOne,
    #[error("extension fails its own check: {0}")]
    Unsound(String),
    #[error(transparent)]
    Inner(#[from] StructuredError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An `(S, C, L, t)`-extendable colorer.
pub trait ExtendableColorer: Send + Sync {
    fn graph(&self) -> &Graph;
    /// The collection `C`.
    fn frame(&self) -> &[VertexSet];
    fn lists(&self) -> &ListAssignment;
    /// The threshold `t` bounding `|W|`.
    fn threshold(&self) -> usize;
    fn spec(&self) -> &AchievementSpec;
    fn extend(&self, req: &ExtendRequest) -> Result<Extension, CliqueSumError>;
}

/// Whether every edge of `h` lies inside a member of `frame`.
pub fn is_compatible(frame: &[VertexSet], h: &EdgeSet) -> bool {
    h.iter()
        .all(|(u, v)| frame.iter().any(|m| m.contains(u) && m.contains(v)))
}

/// Edges of `g` that a compatible `H` may use.
pub fn compatible_edges(g: &Graph, frame: &[VertexSet]) -> EdgeSet {
    g.edges()
        .filter(|&(u, v)| frame.iter().any(|m| m.contains(u) && m.contains(v)))
        .collect()
}

/// Checks that `req` is a legal question for `c`.
pub fn validate_request(c: &dyn ExtendableColorer, req: &ExtendRequest) -> Result<(), CliqueSumError> {
    let g = c.graph();
    let n = g.vertex_count();
    let bad = |m: String| Err(CliqueSumError::InvalidRequest(m));
    if let Some(&v) = req.anchors.keys().find(|&&v| v >= n) {
        return bad(format!("vertex {v} out of range"));
    }
    let w = req.clique();
    if w.len() > c.threshold() {
        return bad(format!("|W| = {} exceeds threshold {}", w.len(), c.threshold()));
    }
    if !g.is_clique(w.as_slice()) {
        return bad(format!("W = {:?} is not a clique", w.as_slice()));
    }
    for (&v, a) in &req.anchors {
        if !c.lists().list(v).contains(&a.color) {
            return bad(format!("color {} not in the list of {v}", a.color));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    if !req.anchors.values().all(|a| seen.insert(a.color)) {
        return bad("precoloring of W is not proper".into());
    }
    if let Some((u, v)) = req.deleted.iter().find(|&(u, v)| u >= n || v >= n || !g.has_edge(u, v)) {
        return bad(format!("H edge {u}-{v} is not in G"));
    }
    if !is_compatible(c.frame(), &req.deleted) {
        return bad("H is not compatible with the frame".into());
    }
    Ok(())
}

/// Re-checks an extension from scratch against the definition.
pub fn check_extension(
    c: &dyn ExtendableColorer,
    req: &ExtendRequest,
    ext: &Extension,
) -> Result<(), String> {
    let g = c.graph();
    let phi = &ext.coloring;
    if phi.len() != g.vertex_count() {
        return Err(format!("coloring has {} entries for {} vertices", phi.len(), g.vertex_count()));
    }
    verify_proper(g, phi).map_err(|e| e.to_string())?;
    if let Some(v) = g.vertices().find(|&v| !c.lists().list(v).contains(&phi.color(v))) {
        return Err(format!("vertex {v} colored outside its list"));
    }
    for (&w, a) in &req.anchors {
        if phi.color(w) != a.color {
            return Err(format!("vertex {w} does not keep its precolor {}", a.color));
        }
        if let (false, Some(f)) = (a.achieve, a.forbidden) {
            if let Some(&u) = g
                .neighbors(w)
                .iter()
                .find(|&&u| !req.anchors.contains_key(&u) && phi.color(u) == f)
            {
                return Err(format!("neighbour {u} of {w} carries the forbidden color {f}"));
            }
        }
    }
    let h = Some(&req.deleted);
    for v in g.vertices().filter(|&v| req.requires_witness(v)) {
        let live = g.neighbors(v).iter().any(|&u| !req.deleted.contains(u, v));
        if !live {
            continue;
        }
        if find_witness(g, phi, v, c.spec(), h).is_none() {
            return Err(format!("vertex {v} has no color of multiplicity in S"));
        }
        match ext.witness.get(v) {
            Some(i) if c.spec().contains(multiplicity(g, phi, v, i, h)) => {}
            other => return Err(format!("reported witness {other:?} of {v} is invalid")),
        }
    }
    Ok(())
}

/// Witnesses recomputed from a finished coloring: the smallest valid color
/// for every vertex that requires one.
pub(crate) fn recompute_witness(
    g: &Graph,
    phi: &Coloring,
    spec: &AchievementSpec,
    req: &ExtendRequest,
) -> WitnessMap {
    let mut witness = WitnessMap::empty(g.vertex_count());
    for v in g.vertices().filter(|&v| req.requires_witness(v)) {
        witness.set(v, find_witness(g, phi, v, spec, Some(&req.deleted)));
    }
    witness
}
