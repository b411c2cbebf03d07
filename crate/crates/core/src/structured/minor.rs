//! Conflict-free list coloring of `(q, d)`-degenerate minor-closed families.
//!
//! The recursion removes or contracts a vertex `v` of degree at most `⌊d⌋`:
//! if `v` has no neighbour outside `H` it is deleted, otherwise it is
//! contracted into its smallest neighbour `u` outside `H` and `H` gains the
//! new edges `uz` for `z ∈ N(v) - N[u]`. Once at most `max(2⌊d⌋ + 1, q)`
//! vertices remain they are colored rainbow. Unwinding then colors `v` off
//! the colors and witnesses of its neighbours.
//!
//! The recursion is run iteratively: the forward phase records each step and
//! the backward phase replays them in reverse.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{check_list_count, StructuredError};
use crate::coloring::{Color, Coloring, ListAssignment, WitnessMap};
use crate::graph::{edge_key, DegeneracyProfile, EdgeSet, Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub struct MinorColorRequest {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub profile: DegeneracyProfile,
    /// The edge set of `H`: achievement is measured in `G - E(H)`.
    pub deleted: EdgeSet,
}

impl MinorColorRequest {
    pub fn new(graph: Graph, lists: ListAssignment, profile: DegeneracyProfile) -> Self {
        Self {
            graph,
            lists,
            profile,
            deleted: EdgeSet::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorColoring {
    pub coloring: Coloring,
    /// A color of multiplicity one in `N_{G-E(H)}(v)`, for every `v` with that neighbourhood nonempty.
    pub witness: WitnessMap,
    /// Number of contraction steps taken.
    pub contractions: usize,
    /// Number of deletion steps taken.
    pub deletions: usize,
}

/// The minor on which the recursion got stuck: every vertex has degree above `⌊d⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyCertificate {
    /// Input vertices the surviving minor vertices are named after.
    pub vertices: Vec<Vertex>,
    /// The minor itself, on `0..vertices.len()`.
    pub edges: Vec<(Vertex, Vertex)>,
    pub min_degree: usize,
}

enum Step {
    Delete {
        v: Vertex,
        nbrs: Vec<Vertex>,
    },
    Contract {
        v: Vertex,
        u: Vertex,
        nbrs: Vec<Vertex>,
        live: Vec<Vertex>,
    },
}

struct Minor {
    adj: Vec<BTreeSet<Vertex>>,
    alive: BTreeSet<Vertex>,
    h: BTreeSet<(Vertex, Vertex)>,
}

impl Minor {
    fn in_h(&self, a: Vertex, b: Vertex) -> bool {
        self.h.contains(&edge_key(a, b))
    }

    fn live_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.adj[v].iter().copied().filter(|&y| !self.in_h(v, y)).collect()
    }

    fn remove(&mut self, v: Vertex) {
        for y in std::mem::take(&mut self.adj[v]) {
            self.adj[y].remove(&v);
            self.h.remove(&edge_key(v, y));
        }
        self.alive.remove(&v);
    }

    fn certificate(&self) -> DegeneracyCertificate {
        let vertices: Vec<Vertex> = self.alive.iter().copied().collect();
        let idx = |v: Vertex| vertices.binary_search(&v).expect("alive");
        let mut edges = Vec::new();
        for &v in &vertices {
            for &y in self.adj[v].range(v + 1..) {
                edges.push((idx(v), idx(y)));
            }
        }
        let min_degree = vertices.iter().map(|&v| self.adj[v].len()).min().unwrap_or(0);
        DegeneracyCertificate {
            vertices,
            edges,
            min_degree,
        }
    }
}

pub fn color_minor_degenerate(req: &MinorColorRequest) -> Result<MinorColoring, StructuredError> {
    let g = &req.graph;
    let n = g.vertex_count();
    check_list_count(g, &req.lists)?;
    let need = req.profile.required_list_size();
    for v in g.vertices() {
        let have = req.lists.list(v).len();
        if have < need {
            return Err(StructuredError::ListTooShort { vertex: v, have, need });
        }
    }
    if let Some((a, b)) = req.deleted.iter().find(|&(a, b)| a >= n || b >= n || !g.has_edge(a, b)) {
        return Err(StructuredError::DeletedEdgeAbsent(a, b));
    }
    let bound = req.profile.degree_bound();

    let mut m = Minor {
        adj: g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect(),
        alive: g.vertices().collect(),
        h: req.deleted.iter().collect(),
    };
    let mut steps = Vec::new();
    while m.alive.len() > need {
        let v = *m
            .alive
            .iter()
            .min_by_key(|&&v| (m.adj[v].len(), v))
            .expect("nonempty");
        if m.adj[v].len() > bound {
            return Err(StructuredError::DegeneracyViolated(Box::new(m.certificate())));
        }
        let nbrs: Vec<Vertex> = m.adj[v].iter().copied().collect();
        let live = m.live_neighbors(v);
        match live.first().copied() {
            None => {
                m.remove(v);
                steps.push(Step::Delete { v, nbrs });
            }
            Some(u) => {
                let fresh: Vec<Vertex> = nbrs
                    .iter()
                    .copied()
                    .filter(|&z| z != u && !m.adj[u].contains(&z))
                    .collect();
                m.remove(v);
                for &z in &fresh {
                    m.adj[u].insert(z);
                    m.adj[z].insert(u);
                    m.h.insert(edge_key(u, z));
                }
                steps.push(Step::Contract { v, u, nbrs, live });
            }
        }
    }

    // rainbow base case
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut used = BTreeSet::new();
    for &x in &m.alive {
        let c = req
            .lists
            .list(x)
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .expect("lists are at least as long as the base graph");
        used.insert(c);
        color[x] = Some(c);
    }
    let mut witness: Vec<Option<Color>> = vec![None; n];
    for &x in &m.alive {
        witness[x] = m.live_neighbors(x).iter().filter_map(|&y| color[y]).min();
    }

    let (mut contractions, mut deletions) = (0, 0);
    for step in steps.into_iter().rev() {
        match step {
            Step::Delete { v, nbrs } => {
                deletions += 1;
                let taken: BTreeSet<Color> = nbrs.iter().filter_map(|&y| color[y]).collect();
                color[v] = Some(pick(&req.lists, v, &taken)?);
            }
            Step::Contract { v, u, nbrs, live } => {
                contractions += 1;
                let mut taken: BTreeSet<Color> = nbrs.iter().filter_map(|&y| color[y]).collect();
                taken.extend(nbrs.iter().filter_map(|&y| witness[y]));
                let c = pick(&req.lists, v, &taken)?;
                color[v] = Some(c);
                for &y in &live {
                    if witness[y].is_none() {
                        witness[y] = Some(c);
                    }
                }
                witness[v] = color[u];
            }
        }
    }
    Ok(MinorColoring {
        coloring: Coloring::new(color.into_iter().map(|c| c.expect("colored")).collect()),
        witness: WitnessMap { witness },
        contractions,
        deletions,
    })
}

fn pick(lists: &ListAssignment, v: Vertex, taken: &BTreeSet<Color>) -> Result<Color, StructuredError> {
    lists
        .list(v)
        .iter()
        .copied()
        .find(|c| !taken.contains(c))
        .ok_or(StructuredError::ListTooShort {
            vertex: v,
            have: lists.list(v).len(),
            need: taken.len() + 1,
        })
}

impl DegeneracyCertificate {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.vertices.len(), self.edges.iter().copied()).expect("valid minor")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{
        find_witness, respects_lists, verify_proper_s_achieved, AchievementSpec,
    };
    use crate::graph::generators;

    fn run(g: &Graph, lists: &ListAssignment, profile: DegeneracyProfile, h: EdgeSet) -> MinorColoring {
        let req = MinorColorRequest {
            graph: g.clone(),
            lists: lists.clone(),
            profile,
            deleted: h.clone(),
        };
        let out = color_minor_degenerate(&req).unwrap();
        let cf = AchievementSpec::conflict_free();
        verify_proper_s_achieved(g, &out.coloring, &cf, Some(&h)).unwrap();
        assert!(respects_lists(&out.coloring, lists));
        for v in g.vertices() {
            match out.witness.get(v) {
                Some(c) => {
                    let m = crate::coloring::multiplicity(g, &out.coloring, v, c, Some(&h));
                    assert_eq!(m, 1, "witness of {v}");
                }
                None => assert_eq!(find_witness(g, &out.coloring, v, &cf, Some(&h)), None),
            }
        }
        out
    }

    #[test]
    fn trees_with_three_lists() {
        let mut rng = generators::rng(1);
        for seed in 0..50 {
            let g = generators::random_tree(20, seed);
            let lists = ListAssignment::random(20, 3, 6, &mut rng);
            run(&g, &lists, DegeneracyProfile::degenerate(1.0), EdgeSet::new());
        }
    }

    #[test]
    fn fan_with_five_lists() {
        let g = generators::fan(9);
        let lists = ListAssignment::uniform(9, 5);
        let out = run(&g, &lists, DegeneracyProfile::degenerate(2.0), EdgeSet::new());
        assert!(out.contractions + out.deletions > 0);
    }

    #[test]
    fn nonempty_h() {
        let mut rng = generators::rng(2);
        for seed in 0..30 {
            let g = generators::random_maximal_outerplanar(12, seed);
            let h: EdgeSet = g.edges().filter(|_| rand::Rng::gen_bool(&mut rng, 0.3)).collect();
            let lists = ListAssignment::random(12, 5, 8, &mut rng);
            run(&g, &lists, DegeneracyProfile::degenerate(2.0), h);
        }
    }

    #[test]
    fn c5_four_lists_rejected() {
        let req = MinorColorRequest::new(
            generators::cycle(5),
            ListAssignment::uniform(5, 4),
            DegeneracyProfile::degenerate(2.0),
        );
        assert!(matches!(
            color_minor_degenerate(&req),
            Err(StructuredError::ListTooShort { need: 5, .. })
        ));
    }

    #[test]
    fn degeneracy_violation_certificate() {
        // K_5 is not 1-degenerate: with 3-lists the recursion stalls on all 5 vertices
        let req = MinorColorRequest::new(
            generators::complete(5),
            ListAssignment::uniform(5, 3),
            DegeneracyProfile::degenerate(1.0),
        );
        let Err(StructuredError::DegeneracyViolated(cert)) = color_minor_degenerate(&req) else {
            panic!("expected a certificate")
        };
        assert_eq!(cert.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(cert.min_degree, 4);
        assert_eq!(cert.graph(), generators::complete(5));
    }

    #[test]
    fn deleted_edge_must_exist() {
        let mut req = MinorColorRequest::new(
            generators::path(3),
            ListAssignment::uniform(3, 3),
            DegeneracyProfile::degenerate(1.0),
        );
        req.deleted.insert(0, 2);
        assert_eq!(
            color_minor_degenerate(&req),
            Err(StructuredError::DeletedEdgeAbsent(0, 2))
        );
    }
}
