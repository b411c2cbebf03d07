//! Tree-decompositions and layerings.
//!
//! Tree nodes are dense ids `0..bags.len()`. When no root is given, node 0 is
//! the root, and breadth-first search visits tree neighbours in id order; that
//! order is the one every fold and plan builder in the crate relies on.

pub mod families;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, GraphError, Vertex, VertexSet};

pub use families::{
    cycle_decomposition, forest_decomposition, grid_column_decomposition, grid_decomposition,
    grid_row_layering, path_decomposition, random_decomposed_graph, single_bag,
};

/// A single defect of a claimed tree-decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    MissingVertex(Vertex),
    MissingEdge(Vertex, Vertex),
    DisconnectedTrace(Vertex),
    BagVertexOutOfRange { node: usize, vertex: Vertex },
    NotATree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("invalid tree-decomposition: {0:?}")]
    InvalidDecomposition(Vec<Violation>),
    #[error("layering has {got} entries but the graph has {expected} vertices")]
    LayeringLength { expected: usize, got: usize },
    #[error("invalid layering: edge {u}-{v} spans more than one layer")]
    InvalidLayering { u: Vertex, v: Vertex },
    #[error("tree node {0} does not exist")]
    NodeAbsent(usize),
    #[error("graph is not a forest")]
    NotAForest,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub width: usize,
    pub adhesion: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TreeDecompositionJson {
    tree_edges: Vec<[usize; 2]>,
    bags: Vec<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<usize>,
}

/// Bags `B_x` indexed by the nodes of a tree `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeDecompositionJson", into = "TreeDecompositionJson")]
pub struct TreeDecomposition {
    tree: Graph,
    bags: Vec<VertexSet>,
    root: Option<usize>,
}

impl TryFrom<TreeDecompositionJson> for TreeDecomposition {
    type Error = DecompError;
    fn try_from(j: TreeDecompositionJson) -> Result<Self, DecompError> {
        TreeDecomposition::new(j.tree_edges.into_iter().map(|[x, y]| (x, y)), j.bags, j.root)
    }
}

impl From<TreeDecomposition> for TreeDecompositionJson {
    fn from(td: TreeDecomposition) -> Self {
        Self {
            tree_edges: td.tree.edges().map(|(x, y)| [x, y]).collect(),
            bags: td.bags,
            root: td.root,
        }
    }
}

impl TreeDecomposition {
    /// Builds a decomposition over nodes `0..bags.len()`. Only structural
    /// sanity is checked here; see [`TreeDecomposition::validate`].
    pub fn new(
        tree_edges: impl IntoIterator<Item = (usize, usize)>,
        bags: Vec<VertexSet>,
        root: Option<usize>,
    ) -> Result<Self, DecompError> {
        let tree = Graph::from_edges(bags.len(), tree_edges)?;
        if let Some(r) = root {
            if r >= bags.len() {
                return Err(DecompError::NodeAbsent(r));
            }
        }
        Ok(Self { tree, bags, root })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, x: usize) -> &VertexSet {
        &self.bags[x]
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn root(&self) -> usize {
        self.root.unwrap_or(0)
    }

    pub fn with_root(mut self, root: usize) -> Result<Self, DecompError> {
        if root >= self.bags.len() {
            return Err(DecompError::NodeAbsent(root));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn adhesion(&self) -> usize {
        self.tree
            .edges()
            .map(|(x, y)| self.bags[x].intersection(&self.bags[y]).len())
            .max()
            .unwrap_or(0)
    }

    /// Breadth-first node order from the root, neighbours in id order.
    /// Nodes unreachable from the root are appended in the same manner.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let starts = std::iter::once(self.root()).chain(0..n);
        for s in starts {
            if s >= n || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &y in self.tree.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        order
    }

    /// Rank of each node in [`TreeDecomposition::bfs_order`].
    pub fn bfs_rank(&self) -> Vec<usize> {
        let mut rank = vec![0; self.node_count()];
        for (i, x) in self.bfs_order().into_iter().enumerate() {
            rank[x] = i;
        }
        rank
    }

    /// BFS parent of each node (`None` for the root and other component starts).
    pub fn bfs_parents(&self) -> Vec<Option<usize>> {
        let rank = self.bfs_rank();
        (0..self.node_count())
            .map(|x| {
                self.tree
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&y| rank[y] < rank[x])
                    .min_by_key(|&y| rank[y])
            })
            .collect()
    }

    /// For each of `n` graph vertices, the first node in BFS order whose bag contains it.
    pub fn home_nodes(&self, n: usize) -> Vec<Option<usize>> {
        let mut home = vec![None; n];
        for x in self.bfs_order() {
            for v in self.bags[x].iter() {
                if v < n && home[v].is_none() {
                    home[v] = Some(x);
                }
            }
        }
        home
    }

    /// Checks vertex coverage, edge coverage, trace connectivity and that the
    /// index graph is a tree. All violations are collected.
    pub fn validate(&self, g: &Graph) -> Result<DecompositionReport, DecompError> {
        let n = g.vertex_count();
        let mut violations = Vec::new();
        if !self.tree.is_tree() {
            violations.push(Violation::NotATree);
        }
        let mut trace: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                if v >= n {
                    violations.push(Violation::BagVertexOutOfRange { node: x, vertex: v });
                } else {
                    trace[v].push(x);
                }
            }
        }
        for (v, nodes) in trace.iter().enumerate() {
            if nodes.is_empty() {
                violations.push(Violation::MissingVertex(v));
            } else if !self.is_connected_in_tree(nodes) {
                violations.push(Violation::DisconnectedTrace(v));
            }
        }
        for (u, v) in g.edges() {
            let (a, b) = (&trace[u], &trace[v]);
            if !a.iter().any(|x| b.binary_search(x).is_ok()) {
                violations.push(Violation::MissingEdge(u, v));
            }
        }
        if violations.is_empty() {
            Ok(DecompositionReport {
                width: self.width(),
                adhesion: self.adhesion(),
            })
        } else {
            Err(DecompError::InvalidDecomposition(violations))
        }
    }

    fn is_connected_in_tree(&self, nodes: &[usize]) -> bool {
        let inside = |x: usize| nodes.binary_search(&x).is_ok();
        let mut seen = BTreeMap::new();
        seen.insert(nodes[0], ());
        let mut queue = VecDeque::from([nodes[0]]);
        while let Some(x) = queue.pop_front() {
            for &y in self.tree.neighbors(x) {
                if inside(y) && seen.insert(y, ()).is_none() {
                    queue.push_back(y);
                }
            }
        }
        seen.len() == nodes.len()
    }
}

pub fn validate_tree_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<DecompositionReport, DecompError> {
    td.validate(g)
}

/// Vertex layers; every edge joins equal or consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layering {
    layers: Vec<usize>,
}

impl Layering {
    /// Normalizes indices so the smallest layer is 0.
    pub fn new(mut layers: Vec<usize>) -> Self {
        if let Some(&min) = layers.iter().min() {
            layers.iter_mut().for_each(|l| *l -= min);
        }
        Self { layers }
    }

    pub fn layer(&self, v: Vertex) -> usize {
        self.layers[v]
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn layer_count(&self) -> usize {
        self.layers.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), DecompError> {
        if self.layers.len() != g.vertex_count() {
            return Err(DecompError::LayeringLength {
                expected: g.vertex_count(),
                got: self.layers.len(),
            });
        }
        match g
            .edges()
            .find(|&(u, v)| self.layers[u].abs_diff(self.layers[v]) > 1)
        {
            Some((u, v)) => Err(DecompError::InvalidLayering { u, v }),
            None => Ok(()),
        }
    }
}

/// `max |B ∩ V_i|` over bags and layers, after validating both inputs.
pub fn layered_width(
    g: &Graph,
    td: &TreeDecomposition,
    lay: &Layering,
) -> Result<usize, DecompError> {
    td.validate(g)?;
    lay.validate(g)?;
    let mut best = 0;
    for bag in td.bags() {
        let mut per_layer: BTreeMap<usize, usize> = BTreeMap::new();
        for v in bag.iter() {
            *per_layer.entry(lay.layer(v)).or_insert(0) += 1;
        }
        best = best.max(per_layer.values().copied().max().unwrap_or(0));
    }
    Ok(best)
}

/// Multi-source BFS distance layering. Components without a root are rooted
/// at their smallest vertex; out-of-range roots are ignored.
pub fn bfs_layering(g: &Graph, roots: &VertexSet) -> Layering {
    let n = g.vertex_count();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    let mut run = |sources: &[Vertex], dist: &mut Vec<Option<usize>>| {
        for &s in sources {
            if s < n && dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in g.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
    };
    run(roots.as_slice(), &mut dist);
    for s in 0..n {
        if dist[s].is_none() {
            run(&[s], &mut dist);
        }
    }
    Layering::new(dist.into_iter().map(|d| d.unwrap_or(0)).collect())
}

/// The torso at a node, on local ids `0..vertices.len()`, together with its frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsoFrame {
    pub node: usize,
    /// The bag, sorted; local id `i` is global vertex `vertices[i]`.
    pub vertices: Vec<Vertex>,
    pub torso: Graph,
    /// `B_x ∩ B_y` for each tree neighbour `y`, in neighbour-id order (global ids).
    pub frame: Vec<VertexSet>,
    /// Torso edges absent from `G` (global ids).
    pub fill_edges: EdgeSet,
}

impl TorsoFrame {
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

pub fn torso_and_frame(
    g: &Graph,
    td: &TreeDecomposition,
    x: usize,
) -> Result<TorsoFrame, DecompError> {
    if x >= td.node_count() {
        return Err(DecompError::NodeAbsent(x));
    }
    let bag = td.bag(x);
    let vertices = bag.as_slice().to_vec();
    let local = |v: Vertex| vertices.binary_search(&v).expect("vertex in bag");
    let frame: Vec<VertexSet> = td
        .tree()
        .neighbors(x)
        .iter()
        .map(|&y| bag.intersection(td.bag(y)))
        .collect();
    let mut edges = EdgeSet::new();
    let mut fill_edges = EdgeSet::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) {
                edges.insert(local(u), local(v));
            }
        }
    }
    for member in &frame {
        let m = member.as_slice();
        for (i, &u) in m.iter().enumerate() {
            for &v in &m[i + 1..] {
                if !g.has_edge(u, v) {
                    fill_edges.insert(u, v);
                }
                edges.insert(local(u), local(v));
            }
        }
    }
    let torso = Graph::from_edges(vertices.len(), edges.iter())?;
    Ok(TorsoFrame {
        node: x,
        vertices,
        torso,
        frame,
        fill_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn vs(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn p4_td() -> TreeDecomposition {
        TreeDecomposition::new([(0, 1), (1, 2)], vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3])], None)
            .unwrap()
    }

    #[test]
    fn p4_validates() {
        let r = p4_td().validate(&generators::path(4)).unwrap();
        assert_eq!(r, DecompositionReport { width: 1, adhesion: 1 });
    }

    #[test]
    fn missing_edge_reported() {
        let td =
            TreeDecomposition::new([(0, 1)], vec![vs(&[0, 1]), vs(&[2, 3])], None).unwrap();
        let err = td.validate(&generators::path(4)).unwrap_err();
        assert_eq!(
            err,
            DecompError::InvalidDecomposition(vec![Violation::MissingEdge(1, 2)])
        );
    }

    #[test]
    fn disconnected_trace_and_missing_vertex() {
        let td = TreeDecomposition::new([(0, 1), (1, 2)], vec![vs(&[0]), vs(&[1]), vs(&[0])], None)
            .unwrap();
        let DecompError::InvalidDecomposition(v) = td.validate(&Graph::empty(3)).unwrap_err()
        else {
            panic!()
        };
        assert_eq!(v, vec![Violation::DisconnectedTrace(0), Violation::MissingVertex(2)]);
    }

    #[test]
    fn k4_single_bag() {
        let td = single_bag(4);
        let r = td.validate(&generators::complete(4)).unwrap();
        assert_eq!(r, DecompositionReport { width: 3, adhesion: 0 });
    }

    #[test]
    fn layered_width_examples() {
        let g = generators::path(6);
        let lay = Layering::new((0..6).collect());
        assert_eq!(layered_width(&g, &path_decomposition(6), &lay).unwrap(), 1);
        let g = generators::complete(5);
        assert_eq!(
            layered_width(&g, &single_bag(5), &Layering::new(vec![0; 5])).unwrap(),
            5
        );
        let bad = Layering::new(vec![0, 2, 0, 0, 0]);
        assert!(matches!(bad.validate(&g), Err(DecompError::InvalidLayering { .. })));
    }

    #[test]
    fn layering_normalizes() {
        assert_eq!(Layering::new(vec![3, 4, 5]).layers(), &[0, 1, 2]);
    }

    #[test]
    fn torso_middle_of_p4() {
        let g = generators::path(4);
        let tf = torso_and_frame(&g, &p4_td(), 1).unwrap();
        assert_eq!(tf.vertices, vec![1, 2]);
        assert_eq!(tf.torso.edge_count(), 1);
        assert_eq!(tf.frame, vec![vs(&[1]), vs(&[2])]);
        assert!(tf.fill_edges.is_empty());
        assert!(matches!(torso_and_frame(&g, &p4_td(), 3), Err(DecompError::NodeAbsent(3))));
    }

    #[test]
    fn torso_fill_in_of_c4() {
        // C_4 with bags {0,1,2}, {0,2,3}: the shared pair 0-2 is filled
        let g = generators::cycle(4);
        let td = TreeDecomposition::new([(0, 1)], vec![vs(&[0, 1, 2]), vs(&[0, 2, 3])], None)
            .unwrap();
        td.validate(&g).unwrap();
        let tf = torso_and_frame(&g, &td, 0).unwrap();
        assert_eq!(tf.torso, generators::complete(3));
        assert_eq!(tf.fill_edges.iter().collect::<Vec<_>>(), vec![(0, 2)]);
        for m in &tf.frame {
            let local: Vec<usize> = m.iter().map(|v| tf.local(v).unwrap()).collect();
            assert!(tf.torso.is_clique(&local));
        }
    }

    #[test]
    fn star_tree_frame() {
        let td = TreeDecomposition::new(
            [(0, 1), (0, 2), (0, 3)],
            vec![vs(&[0, 1, 2, 3]), vs(&[1, 4]), vs(&[2, 5]), vs(&[3, 6])],
            None,
        )
        .unwrap();
        let g = Graph::from_edges(7, [(1, 4), (2, 5), (3, 6), (0, 1)]).unwrap();
        td.validate(&g).unwrap();
        assert_eq!(torso_and_frame(&g, &td, 0).unwrap().frame.len(), 3);
        // leaf torso is the induced subgraph
        let leaf = torso_and_frame(&g, &td, 1).unwrap();
        assert_eq!(leaf.torso, generators::path(2));
    }

    #[test]
    fn bfs_layering_examples() {
        let g = generators::path(5);
        assert_eq!(bfs_layering(&g, &vs(&[0])).layers(), &[0, 1, 2, 3, 4]);
        let g = generators::complete(5);
        assert_eq!(bfs_layering(&g, &vs(&[2])).layer_count(), 2);
        let g = generators::grid(3, 3);
        let lay = bfs_layering(&g, &vs(&[0]));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(lay.layer(i * 3 + j), i + j);
            }
        }
        // components without roots get their own
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_layering(&g, &vs(&[1])).layers(), &[1, 0, 0, 1]);
    }

    #[test]
    fn bfs_order_and_homes() {
        let td = TreeDecomposition::new([(0, 2), (2, 1), (0, 3)], vec![vs(&[0]); 4], Some(2))
            .unwrap();
        assert_eq!(td.bfs_order(), vec![2, 0, 1, 3]);
        assert_eq!(td.bfs_parents(), vec![Some(2), Some(2), None, Some(0)]);
        assert_eq!(td.home_nodes(1), vec![Some(2)]);
    }

    #[test]
    fn json_round_trip() {
        let td = p4_td();
        let text = serde_json::to_string(&td).unwrap();
        assert_eq!(text, r#"{"tree_edges":[[0,1],[1,2]],"bags":[[0,1],[1,2],[2,3]]}"#);
        let back: TreeDecomposition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, td);
        let rooted: TreeDecomposition =
            serde_json::from_str(r#"{"tree_edges":[[0,1]],"bags":[[0],[0]],"root":1}"#).unwrap();
        assert_eq!(rooted.root(), 1);
        assert!(serde_json::from_str::<TreeDecomposition>(
            r#"{"tree_edges":[[0,5]],"bags":[[0],[0]]}"#
        )
        .is_err());
        let lay: Layering = serde_json::from_str(r#"{"layers":[0,1,1]}"#).unwrap();
        assert_eq!(lay.layer_count(), 2);
    }
}
