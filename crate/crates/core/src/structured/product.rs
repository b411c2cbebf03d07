//! Ordering plans for the strong product of a bounded-treewidth graph and a
//! bounded-degree graph.

use serde::Serialize;

use super::StructuredError;
use crate::decomp::TreeDecomposition;
use crate::graph::{strong_product, Graph, StrongProduct, Vertex, VertexSet};
use crate::ordering::{validate_plan, OrderingPlan, PlanWidths};

#[derive(Debug, Clone)]
pub struct ProductPlan {
    pub product: StrongProduct,
    pub plan: OrderingPlan,
    /// Width of the decomposition of `H`.
    pub w: usize,
    /// Maximum degree of `Q`.
    pub d: usize,
    pub widths: PlanWidths,
}

impl ProductPlan {
    /// `(w + 1)(d² + d + 2) - 1`.
    pub fn guaranteed_list_size(&self) -> usize {
        (self.w + 1) * (self.d * self.d + self.d + 2) - 1
    }
}

#[derive(Serialize)]
struct ProductPlanJson<'a> {
    w: usize,
    d: usize,
    plan: &'a OrderingPlan,
}

impl Serialize for ProductPlan {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ProductPlanJson {
            w: self.w,
            d: self.d,
            plan: &self.plan,
        }
        .serialize(s)
    }
}

/// Plan on `H ⊠ Q`: vertices `(h, q)` are ordered by (BFS rank of the home
/// node of `h`, `q`, `h`) and `S_i = (B_{x_h} × N_Q[q]) ∩ {v_1..v_i}`.
pub fn build_product_plan(
    h: &Graph,
    td_h: &TreeDecomposition,
    q: &Graph,
) -> Result<ProductPlan, StructuredError> {
    td_h.validate(h)?;
    let product = strong_product(h, q);
    let n = product.graph.vertex_count();
    let home: Vec<usize> = td_h
        .home_nodes(h.vertex_count())
        .into_iter()
        .map(|x| x.expect("validated decomposition covers every vertex"))
        .collect();
    let rank = td_h.bfs_rank();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&p| {
        let (a, b) = product.coords(p);
        (rank[home[a]], b, a)
    });
    let mut pos = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    let sets: Vec<VertexSet> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let (a, b) = product.coords(p);
            let mut s = VertexSet::new();
            for a2 in td_h.bag(home[a]).iter() {
                for b2 in q.closed_neighborhood(b) {
                    let p2 = product.index(a2, b2);
                    if pos[p2] <= i {
                        s.insert(p2);
                    }
                }
            }
            s
        })
        .collect();
    let plan = OrderingPlan { order, sets };
    let widths = validate_plan(&product.graph, &plan)?;
    Ok(ProductPlan {
        w: td_h.width(),
        d: q.max_degree(),
        product,
        plan,
        widths,
    })
}
