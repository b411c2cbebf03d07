//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Every transformation in [`ops`]
//! returns a fresh graph together with an explicit vertex remapping.

pub mod generators;
pub mod io;
pub mod ops;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ops::{
    contract_edge, degeneracy_ordering, odd_contract, one_subdivision, strong_product, subdivide,
    Contraction, Degeneracy, OddContraction, StrongProduct, Subdivision,
};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} is not in the graph")]
    EdgeAbsent(Vertex, Vertex),
    #[error("odd contraction needs two nonempty parts")]
    InvalidPartition,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Normalized unordered pair.
#[inline]
pub fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A set of unordered vertex pairs, stored normalized as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(Vertex, Vertex)>", into = "Vec<(Vertex, Vertex)>")]
pub struct EdgeSet(BTreeSet<(Vertex, Vertex)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: Vertex, v: Vertex) -> bool {
        self.0.insert(edge_key(u, v))
    }

    pub fn remove(&mut self, u: Vertex, v: Vertex) -> bool {
        self.0.remove(&edge_key(u, v))
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.0.contains(&edge_key(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().copied()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(Vertex, Vertex) -> bool) {
        self.0.retain(|&(u, v)| keep(u, v));
    }
}

impl FromIterator<(Vertex, Vertex)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        Self(iter.into_iter().map(|(u, v)| edge_key(u, v)).collect())
    }
}

impl From<Vec<(Vertex, Vertex)>> for EdgeSet {
    fn from(v: Vec<(Vertex, Vertex)>) -> Self {
        v.into_iter().collect()
    }
}

impl From<EdgeSet> for Vec<(Vertex, Vertex)> {
    fn from(e: EdgeSet) -> Self {
        e.0.into_iter().collect()
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert(edge_key(u, v));
        }
        Ok(Self::from_sorted_pairs(n, set))
    }

    /// Internal constructor for pairs already known to be valid; loops are dropped.
    pub(crate) fn from_sorted_pairs(n: usize, pairs: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in pairs {
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self {
            adj,
            edge_count: m,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelCount {
                expected: self.vertex_count(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// N[v] in sorted order.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Induced subgraph on `keep`; returns the subgraph and the old id of each new vertex.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut pairs = BTreeSet::new();
        for (i, &v) in old.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = new_id[u];
                if j != usize::MAX && i < j {
                    pairs.insert((i, j));
                }
            }
        }
        let mut g = Graph::from_sorted_pairs(old.len(), pairs);
        if let Some(labels) = &self.labels {
            g.labels = Some(old.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, old)
    }

    /// G - X, relabelled densely; returns the old id of each remaining vertex.
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<Vertex>) {
        let keep: VertexSet = self.vertices().filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Spanning subgraph without the given edges (pairs not in the graph are ignored).
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let pairs = self.edges().filter(|&(u, v)| !removed.contains(u, v)).collect();
        let mut g = Graph::from_sorted_pairs(self.vertex_count(), pairs);
        g.labels = self.labels.clone();
        g
    }

    /// Supergraph with the extra edges added. Endpoints must be in range and distinct.
    pub fn with_edges(&self, added: &EdgeSet) -> Result<Graph, GraphError> {
        let g = Graph::from_edges(self.vertex_count(), self.edges().chain(added.iter()))?;
        Ok(Graph {
            labels: self.labels.clone(),
            ..g
        })
    }

    /// Square: vertices at distance at most two become adjacent.
    pub fn square(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for v in self.vertices() {
            for &u in &self.adj[v] {
                if u > v {
                    pairs.insert((v, u));
                }
                for &w in &self.adj[u] {
                    if w > v {
                        pairs.insert((v, w));
                    }
                }
            }
        }
        Graph::from_sorted_pairs(self.vertex_count(), pairs)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-coloring (sides 0/1) if one exists, found by BFS.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A connected graph with `n - 1` edges (the empty graph is not a tree).
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.edge_count + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

/// `(q, d)`-degeneracy: every subgraph on more than `q` vertices has a vertex of degree at most `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegeneracyProfile {
    pub q: usize,
    pub d: f64,
}

impl DegeneracyProfile {
    pub fn new(q: usize, d: f64) -> Self {
        Self { q, d }
    }

    /// Plain `d`-degeneracy, i.e. the profile `(1, d)`.
    pub fn degenerate(d: f64) -> Self {
        Self { q: 1, d }
    }

    pub fn degree_bound(&self) -> usize {
        self.d.floor().max(0.0) as usize
    }

    /// List size the minor-closed colorer needs: `max(2⌊d⌋ + 1, q)`.
    pub fn required_list_size(&self) -> usize {
        (2 * self.degree_bound() + 1).max(self.q)
    }
}
