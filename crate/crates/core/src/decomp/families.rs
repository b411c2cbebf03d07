//! Small-width decompositions of standard families, and a random generator
//! of graphs together with a decomposition.

use rand::seq::index::sample;
use rand::Rng;

use super::{DecompError, Layering, TreeDecomposition};
use crate::graph::{generators, EdgeSet, Graph, Vertex, VertexSet};

fn path_tree(bags: Vec<VertexSet>) -> TreeDecomposition {
    let k = bags.len();
    TreeDecomposition::new((1..k).map(|i| (i - 1, i)), bags, None).expect("path tree")
}

/// One bag holding `0..n`.
pub fn single_bag(n: usize) -> TreeDecomposition {
    path_tree(vec![(0..n).collect()])
}

/// Bags `{i, i+1}` along a path tree (width 1); a single bag when `n ≤ 1`.
pub fn path_decomposition(n: usize) -> TreeDecomposition {
    if n <= 1 {
        return single_bag(n);
    }
    path_tree((1..n).map(|i| [i - 1, i].into_iter().collect()).collect())
}

/// Bags `{0, i, i+1}` (width 2) for `C_n`, `n ≥ 3`.
pub fn cycle_decomposition(n: usize) -> TreeDecomposition {
    if n < 3 {
        return path_decomposition(n);
    }
    path_tree((1..n - 1).map(|i| [0, i, i + 1].into_iter().collect()).collect())
}

/// Width-1 decomposition of a forest: node `v` has bag `{v, parent(v)}` and is
/// joined to the node of its parent; component roots are chained together.
pub fn forest_decomposition(g: &Graph) -> Result<TreeDecomposition, DecompError> {
    let n = g.vertex_count();
    if g.edge_count() + g.components().len() != n {
        return Err(DecompError::NotAForest);
    }
    if n == 0 {
        return Ok(single_bag(0));
    }
    let mut parent = vec![None; n];
    let mut roots = Vec::new();
    for comp in g.components() {
        let r = comp[0];
        roots.push(r);
        let dist = g.bfs_distances(r);
        for &v in &comp {
            if v != r {
                let d = dist[v].expect("same component");
                parent[v] = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&u| dist[u] == Some(d - 1));
            }
        }
    }
    let bags: Vec<VertexSet> = (0..n)
        .map(|v| std::iter::once(v).chain(parent[v]).collect())
        .collect();
    let edges = (0..n)
        .filter_map(|v| parent[v].map(|p| (v, p)))
        .chain(roots.windows(2).map(|w| (w[0], w[1])));
    TreeDecomposition::new(edges, bags, Some(roots[0]))
}

/// Width `min(r, c)` decomposition of the `r × c` grid: sliding windows of
/// `m + 1` consecutive vertices in the order running along the short side.
pub fn grid_decomposition(r: usize, c: usize) -> TreeDecomposition {
    let total = r * c;
    let m = r.min(c);
    // position p in the scan order -> vertex id
    let at = |p: usize| -> Vertex {
        if c <= r {
            p
        } else {
            let (j, i) = (p / r, p % r);
            i * c + j
        }
    };
    if total <= m + 1 {
        return single_bag(total);
    }
    path_tree(
        (0..total - m)
            .map(|s| (s..=s + m).map(at).collect())
            .collect(),
    )
}

/// Bags made of `span` consecutive columns of the `r × c` grid. Paired with
/// [`grid_row_layering`] this has layered width `span`. Spans below 2 would
/// miss the horizontal edges and are raised to 2.
pub fn grid_column_decomposition(r: usize, c: usize, span: usize) -> TreeDecomposition {
    let span = span.max(2);
    let column = |j: usize| (0..r).map(move |i| i * c + j);
    if c <= span {
        return single_bag(r * c);
    }
    path_tree(
        (0..=c - span)
            .map(|s| (s..s + span).flat_map(column).collect())
            .collect(),
    )
}

/// Layer of cell `(i, j)` is its row `i`.
pub fn grid_row_layering(r: usize, c: usize) -> Layering {
    Layering::new((0..r * c).map(|v| v / c).collect())
}

/// A random graph built along a random tree-decomposition: the root bag has
/// `bag_size` fresh vertices, each further bag keeps `adhesion` vertices of its
/// parent and adds fresh ones up to `bag_size`; every pair inside a bag is an
/// edge with probability `p`.
pub fn random_decomposed_graph(
    nodes: usize,
    bag_size: usize,
    adhesion: usize,
    p: f64,
    seed: u64,
) -> (Graph, TreeDecomposition) {
    assert!(nodes >= 1 && bag_size >= 1 && adhesion < bag_size);
    let mut rng = generators::rng(seed);
    let mut bags: Vec<VertexSet> = vec![(0..bag_size).collect()];
    let mut next = bag_size;
    let mut tree_edges = Vec::new();
    for x in 1..nodes {
        let parent = rng.gen_range(0..x);
        let pb = bags[parent].as_slice().to_vec();
        let keep = adhesion.min(pb.len());
        let mut bag: VertexSet = sample(&mut rng, pb.len(), keep)
            .into_iter()
            .map(|i| pb[i])
            .collect();
        while bag.len() < bag_size {
            bag.insert(next);
            next += 1;
        }
        bags.push(bag);
        tree_edges.push((parent, x));
    }
    let mut edges = EdgeSet::new();
    for bag in &bags {
        let b = bag.as_slice();
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if rng.gen_bool(p.clamp(0.0, 1.0)) {
                    edges.insert(u, v);
                }
            }
        }
    }
    let g = Graph::from_edges(next, edges.iter()).expect("valid edges");
    let td = TreeDecomposition::new(tree_edges, bags, None).expect("valid tree");
    (g, td)
}
