//! Standard graph families and seeded random generators.
//!
//! All randomness comes from [`rng`], a ChaCha8 generator seeded with
//! `seed_from_u64`, so a given `(parameters, seed)` pair always produces the same
//! graph on every platform.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{edge_key, Graph, Vertex};

/// The pinned PRNG used by every seeded routine in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::from_sorted_pairs(n, pairs.into_iter().map(|(u, v)| edge_key(u, v)).collect())
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`; for `n < 3` this degenerates to the path on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{1,n-1}` centred at 0.
pub fn star(n: usize) -> Graph {
    build(n, (1..n).map(|i| (0, i)))
}

/// Fan: vertex 0 joined to every vertex of the path `1..n`.
pub fn fan(n: usize) -> Graph {
    build(n, (1..n).map(|i| (0, i)).chain((2..n).map(|i| (i - 1, i))))
}

/// `r × c` grid; cell `(i, j)` is vertex `i * c + j`.
pub fn grid(r: usize, c: usize) -> Graph {
    let id = |i: usize, j: usize| i * c + j;
    let mut pairs = Vec::new();
    for i in 0..r {
        for j in 0..c {
            if j + 1 < c {
                pairs.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < r {
                pairs.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    build(r * c, pairs)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Erdős–Rényi `G(n, p)`: pairs are visited in lexicographic order, one Bernoulli draw each.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = rng(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    build(n, pairs)
}

fn relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(rng);
    build(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// Random recursive tree with shuffled labels.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let pairs: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    relabel(&build(n, pairs), &mut rng)
}

/// Random triangulated polygon (maximal outerplanar) on `n ≥ 3` vertices, shuffled labels.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Graph {
    if n < 3 {
        return path(n);
    }
    let mut rng = rng(seed);
    let mut pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut stack = vec![(0usize, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let apex = rng.gen_range(lo + 1..hi);
        pairs.push((lo, apex));
        pairs.push((apex, hi));
        stack.push((lo, apex));
        stack.push((apex, hi));
    }
    relabel(&build(n, pairs), &mut rng)
}

/// Random planar triangulation on `n ≥ 3` vertices: repeated face insertion
/// followed by `2n` random edge flips, shuffled labels.
pub fn random_planar_triangulation(n: usize, seed: u64) -> Graph {
    if n < 3 {
        return path(n);
    }
    let mut rng = rng(seed);
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges: BTreeSet<(Vertex, Vertex)> = [(0, 1), (1, 2), (0, 2)].into();
    let mut degree = vec![0usize; n];
    degree[..3].fill(2);
    for x in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, x], [b, c, x], [c, a, x]]);
        for y in [a, b, c] {
            edges.insert(edge_key(x, y));
            degree[y] += 1;
        }
        degree[x] = 3;
    }
    if n >= 5 {
        for _ in 0..2 * n {
            let f1 = rng.gen_range(0..faces.len());
            let k = rng.gen_range(0..3);
            let (a, b, c) = (faces[f1][k], faces[f1][(k + 1) % 3], faces[f1][(k + 2) % 3]);
            let Some(f2) = (0..faces.len())
                .find(|&i| i != f1 && faces[i].contains(&a) && faces[i].contains(&b))
            else {
                continue;
            };
            let d = faces[f2].iter().copied().find(|&y| y != a && y != b).unwrap();
            if c == d || edges.contains(&edge_key(c, d)) || degree[a] <= 3 || degree[b] <= 3 {
                continue;
            }
            edges.remove(&edge_key(a, b));
            edges.insert(edge_key(c, d));
            degree[a] -= 1;
            degree[b] -= 1;
            degree[c] += 1;
            degree[d] += 1;
            faces[f1] = [c, d, a];
            faces[f2] = [d, c, b];
        }
    }
    relabel(&build(n, edges), &mut rng)
}
