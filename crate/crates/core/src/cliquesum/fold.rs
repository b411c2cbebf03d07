//! Folding torso colorers along a tree-decomposition.
//!
//! Nodes are glued one at a time in breadth-first order, each along its
//! adhesion set with the parent. The accumulated graph `G⁺` has every
//! adhesion set completed to a clique; the final colorer recovers `G` by
//! passing the fill edges `E(G⁺) - E(G)` as the deleted subgraph.

use super::{
    combine_extendable, recompute_witness, validate_request, CliqueSumError, CliqueSumSpec,
    ExtendRequest, ExtendableColorer, Extension,
};
use crate::coloring::{AchievementSpec, Coloring, ListAssignment};
use crate::decomp::{torso_and_frame, DecompError, TreeDecomposition};
use crate::graph::{EdgeSet, Graph, Vertex, VertexSet};

/// Everything a torso colorer is built from, in local ids.
#[derive(Debug, Clone)]
pub struct TorsoSpec {
    pub node: usize,
    /// Local id `i` is global vertex `vertices[i]`.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
    pub frame: Vec<VertexSet>,
    pub lists: ListAssignment,
    /// Adhesion of the whole decomposition.
    pub adhesion: usize,
}

/// The result of a fold: an `(S, ∅, L, ξ)`-extendable colorer for `G`.
pub struct FoldedColorer {
    graph: Graph,
    lists: ListAssignment,
    spec: AchievementSpec,
    inner: Box<dyn ExtendableColorer>,
    /// Accumulated id to global id.
    acc_ids: Vec<Vertex>,
    to_acc: Vec<usize>,
    fill: EdgeSet,
}

impl FoldedColorer {
    /// A proper `S`-achieved `L`-coloring of the whole graph.
    pub fn color(&self) -> Result<Coloring, CliqueSumError> {
        Ok(self.extend(&ExtendRequest::default())?.coloring)
    }

    /// `G⁺`, in accumulated ids.
    pub fn completed_graph(&self) -> &Graph {
        self.inner.graph()
    }

    pub fn fill_edge_count(&self) -> usize {
        self.fill.len()
    }
}

pub fn fold_tree_decomposition<F>(
    g: &Graph,
    td: &TreeDecomposition,
    lists: &ListAssignment,
    factory: F,
) -> Result<FoldedColorer, CliqueSumError>
where
    F: FnMut(&TorsoSpec) -> Result<Box<dyn ExtendableColorer>, CliqueSumError>,
{
    fold_tree_decomposition_in_order(g, td, lists, &td.bfs_order(), factory)
}

/// Like [`fold_tree_decomposition`] with an explicit node order; every node
/// after the first must have a tree neighbour earlier in the order.
pub fn fold_tree_decomposition_in_order<F>(
    g: &Graph,
    td: &TreeDecomposition,
    lists: &ListAssignment,
    order: &[usize],
    mut factory: F,
) -> Result<FoldedColorer, CliqueSumError>
where
    F: FnMut(&TorsoSpec) -> Result<Box<dyn ExtendableColorer>, CliqueSumError>,
{
    td.validate(g)?;
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(CliqueSumError::InvalidSum(format!("{} lists for {n} vertices", lists.len())));
    }
    let k = td.node_count();
    let mut placed = vec![false; k];
    if order.len() != k || order.iter().any(|&x| x >= k || std::mem::replace(&mut placed[x], true)) {
        return Err(CliqueSumError::InvalidSum("fold order is not a permutation of the nodes".into()));
    }
    let adhesion = td.adhesion();
    let torso = |x: usize| -> Result<TorsoSpec, DecompError> {
        let tf = torso_and_frame(g, td, x)?;
        let local = |v: Vertex| tf.local(v).expect("frame inside bag");
        Ok(TorsoSpec {
            node: x,
            frame: tf.frame.iter().map(|m| m.iter().map(local).collect()).collect(),
            lists: lists.restrict(&tf.vertices),
            graph: tf.torso,
            vertices: tf.vertices,
            adhesion,
        })
    };

    let first = torso(order[0])?;
    let mut acc = factory(&first)?;
    let mut acc_ids = first.vertices.clone();
    let mut to_acc = vec![usize::MAX; n];
    for (i, &v) in acc_ids.iter().enumerate() {
        to_acc[v] = i;
    }
    let mut done = vec![false; k];
    done[order[0]] = true;
    for &x in &order[1..] {
        let parent = *td
            .tree()
            .neighbors(x)
            .iter()
            .find(|&&y| done[y])
            .ok_or_else(|| CliqueSumError::InvalidSum(format!("node {x} has no earlier neighbour")))?;
        done[x] = true;
        let ts = torso(x)?;
        let right = factory(&ts)?;
        let q = td.bag(x).intersection(td.bag(parent));
        let spec = CliqueSumSpec {
            left: acc.graph().clone(),
            right: right.graph().clone(),
            q_left: q.iter().map(|v| to_acc[v]).collect(),
            q_right: q.iter().map(|v| ts.vertices.binary_search(&v).expect("in bag")).collect(),
            dropped: Vec::new(),
        };
        let combined = combine_extendable(acc, right, &spec)?;
        for (local, &s) in combined.sum().right_map.iter().enumerate() {
            if s >= acc_ids.len() {
                debug_assert_eq!(s, acc_ids.len());
                let v = ts.vertices[local];
                to_acc[v] = s;
                acc_ids.push(v);
            }
        }
        acc = Box::new(combined);
    }
    let mut fill = EdgeSet::new();
    for (a, b) in acc.graph().edges() {
        if !g.has_edge(acc_ids[a], acc_ids[b]) {
            fill.insert(a, b);
        }
    }
    Ok(FoldedColorer {
        graph: g.clone(),
        lists: lists.clone(),
        spec: acc.spec().clone(),
        inner: acc,
        acc_ids,
        to_acc,
        fill,
    })
}

impl ExtendableColorer for FoldedColorer {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn frame(&self) -> &[VertexSet] {
        &[]
    }

    fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    fn threshold(&self) -> usize {
        self.inner.threshold()
    }

    fn spec(&self) -> &AchievementSpec {
        &self.spec
    }

    fn extend(&self, req: &ExtendRequest) -> Result<Extension, CliqueSumError> {
        validate_request(self, req)?;
        let inner_req = ExtendRequest {
            anchors: req.anchors.iter().map(|(&v, &a)| (self.to_acc[v], a)).collect(),
            deleted: self.fill.clone(),
        };
        let ext = self.inner.extend(&inner_req)?;
        let mut colors = vec![0; self.graph.vertex_count()];
        for (a, &v) in self.acc_ids.iter().enumerate() {
            colors[v] = ext.coloring.color(a);
        }
        let coloring = Coloring::new(colors);
        let witness = recompute_witness(&self.graph, &coloring, &self.spec, req);
        Ok(Extension { coloring, witness })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquesum::{check_extension, extendability_audit, AuditConfig};
    use crate::coloring::{respects_lists, verify_proper_s_achieved};
    use crate::decomp::{path_decomposition, single_bag};
    use crate::exact::BruteExtendable;
    use crate::graph::generators;

    fn brute(spec: AchievementSpec) -> impl FnMut(&TorsoSpec) -> Result<Box<dyn ExtendableColorer>, CliqueSumError> {
        move |ts: &TorsoSpec| {
            let c = BruteExtendable::new(ts.graph.clone(), ts.frame.clone(), ts.lists.clone(), ts.adhesion, spec.clone())?;
            Ok(Box::new(c) as Box<dyn ExtendableColorer>)
        }
    }

    fn check(g: &Graph, lists: &ListAssignment, c: &FoldedColorer) {
        let phi = c.color().unwrap();
        verify_proper_s_achieved(g, &phi, c.spec(), None).unwrap();
        assert!(respects_lists(&phi, lists));
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let td = TreeDecomposition::new([(0, 1)], vec![[0, 1, 2].into_iter().collect(), [2, 3, 4].into_iter().collect()], None).unwrap();
        let lists = ListAssignment::uniform(5, 5);
        let c = fold_tree_decomposition(&g, &td, &lists, brute(AchievementSpec::conflict_free())).unwrap();
        assert_eq!(c.fill_edge_count(), 0);
        check(&g, &lists, &c);
        assert!(extendability_audit(&c, &AuditConfig::default()).passed());
    }

    #[test]
    fn single_bag_is_identity() {
        let g = generators::cycle(5);
        let lists = ListAssignment::uniform(5, 5);
        let c = fold_tree_decomposition(&g, &single_bag(5), &lists, brute(AchievementSpec::conflict_free())).unwrap();
        check(&g, &lists, &c);
    }

    #[test]
    fn path_with_edge_bags() {
        let g = generators::path(6);
        let td = path_decomposition(6);
        let mut rng = generators::rng(3);
        for _ in 0..20 {
            // t = 2 colors per bag is enough for rainbow bags, plus 2ξ = 2
            let lists = ListAssignment::random(6, 4, 7, &mut rng);
            let c = fold_tree_decomposition(&g, &td, &lists, brute(AchievementSpec::conflict_free())).unwrap();
            check(&g, &lists, &c);
        }
    }

    #[test]
    fn fill_edges_are_hidden() {
        // C_6 with bags {0,i,i+1} has fill edges {0,i}
        let g = generators::cycle(6);
        let td = crate::decomp::cycle_decomposition(6);
        let lists = ListAssignment::uniform(6, 7);
        let c = fold_tree_decomposition(&g, &td, &lists, brute(AchievementSpec::odd())).unwrap();
        assert!(c.fill_edge_count() > 0);
        check(&g, &lists, &c);
        let ext = c.extend(&ExtendRequest::default()).unwrap();
        check_extension(&c, &ExtendRequest::default(), &ext).unwrap();
    }

    #[test]
    fn other_orders_also_work() {
        let g = generators::path(6);
        let td = path_decomposition(6);
        let lists = ListAssignment::uniform(6, 4);
        let rooted = td.clone().with_root(4).unwrap();
        let a = fold_tree_decomposition(&g, &td, &lists, brute(AchievementSpec::conflict_free())).unwrap();
        let b = fold_tree_decomposition(&g, &rooted, &lists, brute(AchievementSpec::conflict_free())).unwrap();
        check(&g, &lists, &a);
        check(&g, &lists, &b);
        assert!(fold_tree_decomposition_in_order(&g, &td, &lists, &[0, 2, 1, 3, 4], brute(AchievementSpec::conflict_free())).is_err());
    }
}
