//! Ordering plans from a layered tree-decomposition.

use serde::{Deserialize, Serialize};

use super::StructuredError;
use crate::decomp::{layered_width, Layering, TreeDecomposition};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ordering::{validate_plan, OrderingPlan, PlanWidths};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredPlan {
    pub plan: OrderingPlan,
    /// Layered width of the input.
    pub w: usize,
    pub widths: PlanWidths,
}

impl LayeredPlan {
    /// `8w - 1`, the list size the construction guarantees.
    pub fn guaranteed_list_size(&self) -> usize {
        (8 * self.w).saturating_sub(1)
    }
}

/// Orders vertices by (BFS rank of their home node, layer, id) and takes
/// `S_i` as the part of the home bag of `v_i` lying in layers `ℓ-1..=ℓ+1`
/// and already ordered.
pub fn build_layered_plan(
    g: &Graph,
    td: &TreeDecomposition,
    lay: &Layering,
) -> Result<LayeredPlan, StructuredError> {
    let w = layered_width(g, td, lay)?;
    let n = g.vertex_count();
    let home: Vec<usize> = td
        .home_nodes(n)
        .into_iter()
        .map(|x| x.expect("validated decomposition covers every vertex"))
        .collect();
    let rank = td.bfs_rank();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (rank[home[v]], lay.layer(v), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let sets: Vec<VertexSet> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let l = lay.layer(v);
            td.bag(home[v])
                .iter()
                .filter(|&u| pos[u] <= i && lay.layer(u) + 1 >= l && lay.layer(u) <= l + 1)
                .collect()
        })
        .collect();
    let plan = OrderingPlan { order, sets };
    let widths = validate_plan(g, &plan)?;
    Ok(LayeredPlan { plan, w, widths })
}
