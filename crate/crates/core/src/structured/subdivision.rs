//! Induced-subgraph certificates inside `(≤1)`-subdivisions of graphs with
//! large chromatic number.

use serde::{Deserialize, Serialize};

use super::StructuredError;
use crate::exact::{exact_chromatic, ExactConfig, ExactKind};
use crate::graph::{EdgeSet, Graph, Subdivision, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubdivisionWitness {
    /// `G[vertices]` has chromatic number `chromatic ≥ k`.
    Chromatic { vertices: VertexSet, chromatic: usize },
    /// `G[vertices]` is the 1-subdivision of `H[branch_vertices]`, whose
    /// chromatic number is `chromatic ≥ k`.
    OneSubdivision {
        vertices: VertexSet,
        branch_vertices: VertexSet,
        chromatic: usize,
    },
}

impl SubdivisionWitness {
    pub fn vertices(&self) -> &VertexSet {
        match self {
            Self::Chromatic { vertices, .. } | Self::OneSubdivision { vertices, .. } => vertices,
        }
    }
}

fn chi(g: &Graph, cfg: &ExactConfig) -> Result<(usize, Vec<u32>), StructuredError> {
    let r = exact_chromatic(g, &ExactKind::Proper, cfg)?;
    Ok((r.value, r.witness.colors))
}

/// `sub.graph` must be `h` with some edges subdivided exactly once, and
/// `χ(h) ≥ (k - 1)² + 1` (checked with the exact oracle). Splits `h` into the
/// unsubdivided part `H_1` and the rest; either `H_1` already has chromatic
/// number `≥ k`, or some color class of a proper `(k-1)`-coloring of `H_1`
/// induces a subgraph of `h` with chromatic number `≥ k`, all of whose edges
/// are subdivided.
pub fn extract_subdivision_witness(
    sub: &Subdivision,
    h: &Graph,
    k: usize,
    cfg: &ExactConfig,
) -> Result<SubdivisionWitness, StructuredError> {
    let violated = |m: String| Err(StructuredError::HypothesisViolated(m));
    if sub.branch_count != h.vertex_count() {
        return violated(format!(
            "subdivision has {} branch vertices, h has {}",
            sub.branch_count,
            h.vertex_count()
        ));
    }
    for (&(u, v), path) in &sub.paths {
        if !h.has_edge(u, v) {
            return violated(format!("{u}-{v} is not an edge of h"));
        }
        if path.len() > 1 {
            return violated(format!("edge {u}-{v} is subdivided {} times", path.len()));
        }
    }
    if k <= 1 {
        return match h.vertices().next() {
            Some(v) => Ok(SubdivisionWitness::Chromatic {
                vertices: [v].into_iter().collect(),
                chromatic: 1,
            }),
            None => violated("h has no vertices".into()),
        };
    }
    let (chi_h, _) = chi(h, cfg)?;
    let need = (k - 1) * (k - 1) + 1;
    if chi_h < need {
        return violated(format!("chromatic number {chi_h} is below (k-1)^2+1 = {need}"));
    }

    let subdivided: EdgeSet = h.edges().filter(|&(u, v)| sub.is_subdivided(u, v)).collect();
    let h1 = h.without_edges(&subdivided);
    let (chi1, classes) = chi(&h1, cfg)?;
    if chi1 >= k {
        return Ok(SubdivisionWitness::Chromatic {
            vertices: h.vertices().collect(),
            chromatic: chi1,
        });
    }
    let mut best: Option<(usize, VertexSet)> = None;
    for c in 1..=chi1 as u32 {
        let class: VertexSet = h.vertices().filter(|&v| classes[v] == c).collect();
        let (chi_class, _) = chi(&h.induced_subgraph(&class).0, cfg)?;
        if best.as_ref().is_none_or(|(b, _)| chi_class > *b) {
            best = Some((chi_class, class));
        }
    }
    let (chromatic, branch_vertices) = best.expect("h has vertices");
    if chromatic < k {
        return violated(format!("largest color class has chromatic number {chromatic}"));
    }
    let mut vertices = branch_vertices.clone();
    for (u, v) in h.edges() {
        if branch_vertices.contains(u) && branch_vertices.contains(v) {
            let mid: Vertex = sub.paths[&(u, v)][0];
            vertices.insert(mid);
        }
    }
    Ok(SubdivisionWitness::OneSubdivision {
        vertices,
        branch_vertices,
        chromatic,
    })
}
