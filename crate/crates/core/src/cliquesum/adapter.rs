//! From list colorability of `G - E(H)` to extendability.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{recompute_witness, validate_request, CliqueSumError, ExtendRequest, ExtendableColorer, Extension};
use crate::coloring::{remove_colors, verify_proper, AchievementSpec, Coloring, ListAssignment};
use crate::graph::{Graph, VertexSet};
use crate::structured::ListColorer;

/// Answers a request by removing `Z = φ_W(W) ∪ f(W)` from every list,
/// coloring with `inner` (achievement measured in `G - E(H)`) and then
/// overwriting `W` with `φ_W`.
///
/// `inner` must return colorings that are proper on all of `G`.
pub struct AdaptedColorer {
    graph: Graph,
    frame: Vec<VertexSet>,
    lists: ListAssignment,
    threshold: usize,
    spec: AchievementSpec,
    inner: Arc<dyn ListColorer>,
}

pub fn adapt_colorability(
    graph: Graph,
    frame: Vec<VertexSet>,
    lists: ListAssignment,
    xi: usize,
    spec: AchievementSpec,
    inner: Arc<dyn ListColorer>,
) -> Result<AdaptedColorer, CliqueSumError> {
    if !spec.contains_one() {
        return Err(CliqueSumError::SpecWithoutOne);
    }
    if lists.len() != graph.vertex_count() {
        return Err(CliqueSumError::InvalidSum(format!(
            "{} lists for {} vertices",
            lists.len(),
            graph.vertex_count()
        )));
    }
    Ok(AdaptedColorer {
        graph,
        frame,
        lists,
        threshold: xi,
        spec,
        inner,
    })
}

impl ExtendableColorer for AdaptedColorer {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn frame(&self) -> &[VertexSet] {
        &self.frame
    }

    fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    fn threshold(&self) -> usize {
        self.threshold
    }

    fn spec(&self) -> &AchievementSpec {
        &self.spec
    }

    fn extend(&self, req: &ExtendRequest) -> Result<Extension, CliqueSumError> {
        validate_request(self, req)?;
        let mut z = BTreeSet::new();
        for a in req.anchors.values() {
            z.insert(a.color);
            z.extend(a.forbidden);
        }
        let removed = remove_colors(&self.lists, &z);
        let inner = self
            .inner
            .color(&self.graph, &removed.lists, &self.spec, &req.deleted)?;
        let mut colors = inner.colors;
        for (&w, a) in &req.anchors {
            colors[w] = a.color;
        }
        let coloring = Coloring::new(colors);
        verify_proper(&self.graph, &coloring)
            .map_err(|e| CliqueSumError::Unsound(format!("{} returned {e}", self.inner.name())))?;
        let witness = recompute_witness(&self.graph, &coloring, &self.spec, req);
        Ok(Extension { coloring, witness })
    }
}
