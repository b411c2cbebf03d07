//! Graph transformations: contraction, odd contraction, subdivision,
//! strong products and degeneracy orderings.

use std::collections::{BTreeMap, BTreeSet};

use super::{edge_key, Graph, GraphError, Vertex, VertexSet};

/// Result of contracting one edge.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// `remap[old]` is the id of `old` in the contracted graph; both endpoints map to `merged`.
    pub remap: Vec<Vertex>,
    pub merged: Vertex,
}

/// Contracts `uv` into a new vertex adjacent to `N(u) ∪ N(v) - {u, v}`.
///
/// The merged vertex takes the smaller of the two ids; every id above the larger
/// endpoint shifts down by one.
pub fn contract_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Contraction, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::EdgeAbsent(u, v));
    }
    let (keep, drop) = (u.min(v), u.max(v));
    let remap: Vec<Vertex> = g
        .vertices()
        .map(|x| match x {
            x if x == drop => keep,
            x if x > drop => x - 1,
            x => x,
        })
        .collect();
    let pairs: BTreeSet<_> = g
        .edges()
        .map(|(a, b)| edge_key(remap[a], remap[b]))
        .filter(|&(a, b)| a != b)
        .collect();
    Ok(Contraction {
        graph: Graph::from_sorted_pairs(g.vertex_count() - 1, pairs),
        remap,
        merged: keep,
    })
}

#[derive(Debug, Clone)]
pub struct OddContraction {
    pub graph: Graph,
    /// `remap[old]` is the contracted vertex containing `old`.
    pub remap: Vec<Vertex>,
}

/// Odd contraction along the partition `{part_a, V - part_a}`: every component of
/// the spanning subgraph of crossing edges collapses to one vertex.
///
/// Components are numbered by their smallest member; singleton components map to
/// themselves. Both parts must be nonempty.
pub fn odd_contract(g: &Graph, part_a: &VertexSet) -> Result<OddContraction, GraphError> {
    let n = g.vertex_count();
    if let Some(v) = part_a.max().filter(|&v| v >= n) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n });
    }
    if part_a.is_empty() || part_a.len() == n {
        return Err(GraphError::InvalidPartition);
    }
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in g.edges() {
        if part_a.contains(a) != part_a.contains(b) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut label = BTreeMap::new();
    let mut remap = vec![0; n];
    for v in 0..n {
        let root = find(&mut parent, v);
        let next = label.len();
        remap[v] = *label.entry(root).or_insert(next);
    }
    let pairs = g
        .edges()
        .map(|(a, b)| edge_key(remap[a], remap[b]))
        .filter(|&(a, b)| a != b)
        .collect();
    Ok(OddContraction {
        graph: Graph::from_sorted_pairs(label.len(), pairs),
        remap,
    })
}

/// A subdivided graph together with the map back to the original.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    /// Original vertex `v` keeps id `v`.
    pub branch_count: usize,
    /// Internal path vertices of each original edge `(u, v)`, `u < v`, ordered from `u` to `v`.
    pub paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl Subdivision {
    pub fn is_subdivided(&self, u: Vertex, v: Vertex) -> bool {
        self.paths
            .get(&edge_key(u, v))
            .is_some_and(|p| !p.is_empty())
    }
}

/// Replaces each edge `e` by a path with `times(e)` internal vertices; edges
/// missing from `times` use `default`. New vertices are appended in edge order.
pub fn subdivide(
    g: &Graph,
    times: &BTreeMap<(Vertex, Vertex), usize>,
    default: usize,
) -> Result<Subdivision, GraphError> {
    let mut normalized = BTreeMap::new();
    for (&(u, v), &s) in times {
        if !g.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        normalized.insert(edge_key(u, v), s);
    }
    let mut next = g.vertex_count();
    let mut pairs = BTreeSet::new();
    let mut paths = BTreeMap::new();
    for (u, v) in g.edges() {
        let s = normalized.get(&(u, v)).copied().unwrap_or(default);
        let internal: Vec<Vertex> = (next..next + s).collect();
        next += s;
        let mut prev = u;
        for &x in internal.iter().chain(std::iter::once(&v)) {
            pairs.insert(edge_key(prev, x));
            prev = x;
        }
        paths.insert((u, v), internal);
    }
    Ok(Subdivision {
        graph: Graph::from_sorted_pairs(next, pairs),
        branch_count: g.vertex_count(),
        paths,
    })
}

/// Every edge subdivided exactly once.
pub fn one_subdivision(g: &Graph) -> Subdivision {
    subdivide(g, &BTreeMap::new(), 1).expect("no explicit keys")
}

#[derive(Debug, Clone)]
pub struct StrongProduct {
    pub graph: Graph,
    pub left_order: usize,
    pub right_order: usize,
}

impl StrongProduct {
    /// Product vertex for the pair `(x, y)`.
    pub fn index(&self, x: Vertex, y: Vertex) -> Vertex {
        x * self.right_order + y
    }

    pub fn coords(&self, p: Vertex) -> (Vertex, Vertex) {
        (p / self.right_order, p % self.right_order)
    }
}

/// Strong product `A ⊠ B`: `(x1,y1) ~ (x2,y2)` iff each coordinate is equal or
/// adjacent and the pairs differ.
pub fn strong_product(a: &Graph, b: &Graph) -> StrongProduct {
    let nb = b.vertex_count();
    let idx = |x: Vertex, y: Vertex| x * nb + y;
    let mut pairs = BTreeSet::new();
    for x in a.vertices() {
        for y in b.vertices() {
            let p = idx(x, y);
            for &y2 in b.neighbors(y) {
                pairs.insert(edge_key(p, idx(x, y2)));
            }
            for &x2 in a.neighbors(x) {
                pairs.insert(edge_key(p, idx(x2, y)));
                for &y2 in b.neighbors(y) {
                    pairs.insert(edge_key(p, idx(x2, y2)));
                }
            }
        }
    }
    StrongProduct {
        graph: Graph::from_sorted_pairs(a.vertex_count() * nb, pairs),
        left_order: a.vertex_count(),
        right_order: nb,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    /// `v_1..v_n`: each vertex has at most `degeneracy` neighbours before it.
    pub order: Vec<Vertex>,
    pub degeneracy: usize,
}

/// Smallest-last ordering: repeatedly delete a minimum-degree vertex (smallest id
/// on ties); the ordering is the reverse of the deletion sequence.
pub fn degeneracy_ordering(g: &Graph) -> Degeneracy {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        sequence.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                queue.remove(&(degree[u], u));
                degree[u] -= 1;
                queue.insert((degree[u], u));
            }
        }
    }
    sequence.reverse();
    Degeneracy {
        order: sequence,
        degeneracy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn contract_triangle_gives_edge() {
        let c = contract_edge(&generators::complete(3), 0, 1).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edge_count(), 1);
        assert_eq!(c.merged, 0);
        assert_eq!(c.remap, vec![0, 0, 1]);
    }

    #[test]
    fn contract_path_end() {
        let c = contract_edge(&generators::path(3), 0, 1).unwrap();
        assert_eq!(c.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(c.remap[2], 1);
    }

    #[test]
    fn contract_missing_edge_errors() {
        let err = contract_edge(&generators::path(3), 0, 2).unwrap_err();
        assert_eq!(err, GraphError::EdgeAbsent(0, 2));
    }

    /// Naive oracle: identify the two endpoints in an edge-set union and count.
    fn naive_contracted_edge_count(g: &Graph, u: Vertex, v: Vertex) -> usize {
        let name = |x: Vertex| if x == v { u } else { x };
        let set: BTreeSet<_> = g
            .edges()
            .map(|(a, b)| edge_key(name(a), name(b)))
            .filter(|(a, b)| a != b)
            .collect();
        set.len()
    }

    #[test]
    fn contract_petersen_edge() {
        let p = generators::petersen();
        let expected = naive_contracted_edge_count(&p, 0, 1);
        // girth 5: no common neighbours, so only the contracted edge disappears
        assert_eq!(expected, 14);
        let c = contract_edge(&p, 0, 1).unwrap();
        assert_eq!(c.graph.vertex_count(), 9);
        assert_eq!(c.graph.edge_count(), expected);
    }

    #[test]
    fn odd_contract_examples() {
        let c4 = generators::cycle(4);
        let r = odd_contract(&c4, &VertexSet::from(vec![0, 2])).unwrap();
        assert_eq!(r.graph.vertex_count(), 1);
        assert_eq!(r.graph.edge_count(), 0);

        let e3 = Graph::empty(3);
        let r = odd_contract(&e3, &VertexSet::from(vec![0])).unwrap();
        assert_eq!(r.graph, e3);
        assert_eq!(r.remap, vec![0, 1, 2]);

        let c6 = generators::cycle(6);
        let r = odd_contract(&c6, &VertexSet::from(vec![0, 2, 4])).unwrap();
        assert_eq!(r.graph.vertex_count(), 1);
    }

    #[test]
    fn odd_contract_rejects_trivial_partitions() {
        let g = generators::path(3);
        assert_eq!(
            odd_contract(&g, &VertexSet::new()).unwrap_err(),
            GraphError::InvalidPartition
        );
        assert_eq!(
            odd_contract(&g, &VertexSet::from(vec![0, 1, 2])).unwrap_err(),
            GraphError::InvalidPartition
        );
    }

    #[test]
    fn odd_contract_mixed_components() {
        // path 0-1-2-3, A = {0, 1}: only 1-2 crosses
        let g = generators::path(4);
        let r = odd_contract(&g, &VertexSet::from(vec![0, 1])).unwrap();
        assert_eq!(r.remap, vec![0, 1, 1, 2]);
        assert_eq!(r.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn one_subdivision_of_k4() {
        let s = one_subdivision(&generators::complete(4));
        assert_eq!(s.graph.vertex_count(), 10);
        assert_eq!(s.graph.edge_count(), 12);
        assert!(s.graph.is_bipartite());
        assert!(s.is_subdivided(2, 1));
    }

    #[test]
    fn zero_subdivision_is_identity() {
        let g = generators::petersen();
        let s = subdivide(&g, &BTreeMap::new(), 0).unwrap();
        assert_eq!(s.graph, g);
    }

    #[test]
    fn three_subdivision_of_k2_is_p5() {
        let s = subdivide(&generators::path(2), &BTreeMap::from([((1, 0), 3)]), 0).unwrap();
        assert_eq!(s.graph.vertex_count(), 5);
        assert_eq!(s.graph.edge_count(), 4);
        assert_eq!(s.paths[&(0, 1)], vec![2, 3, 4]);
        let degrees: Vec<_> = s.graph.vertices().map(|v| s.graph.degree(v)).collect();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
        assert!(s.graph.is_connected());
    }

    #[test]
    fn subdivide_rejects_non_edges() {
        let err = subdivide(&generators::path(3), &BTreeMap::from([((0, 2), 1)]), 0).unwrap_err();
        assert_eq!(err, GraphError::EdgeAbsent(0, 2));
    }

    #[test]
    fn strong_product_examples() {
        let b = generators::cycle(5);
        assert_eq!(strong_product(&generators::complete(1), &b).graph, b);
        assert_eq!(
            strong_product(&generators::path(2), &generators::path(2)).graph,
            generators::complete(4)
        );
    }

    #[test]
    fn king_graph_edge_count() {
        let p3 = generators::path(3);
        let prod = strong_product(&p3, &p3);
        // oracle: enumerate all pairs of grid cells at Chebyshev distance 1
        let mut count = 0;
        for a in 0..9usize {
            for b in a + 1..9 {
                let (x1, y1) = ((a / 3) as i64, (a % 3) as i64);
                let (x2, y2) = ((b / 3) as i64, (b % 3) as i64);
                if (x1 - x2).abs().max((y1 - y2).abs()) == 1 {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 20);
        assert_eq!(prod.graph.edge_count(), count);
        assert_eq!(prod.coords(prod.index(2, 1)), (2, 1));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_ordering(&generators::star(6)).degeneracy, 1);
        assert_eq!(degeneracy_ordering(&generators::complete(5)).degeneracy, 4);
        let s = one_subdivision(&generators::complete(5));
        assert_eq!(degeneracy_ordering(&s.graph).degeneracy, 2);
        assert_eq!(degeneracy_ordering(&Graph::empty(4)).degeneracy, 0);
    }
}
