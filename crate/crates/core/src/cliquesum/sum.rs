//! Clique-sums and the combinator gluing two extendable colorers along one.

use std::collections::BTreeMap;

use super::{
    recompute_witness, validate_request, Anchor, CliqueSumError, ExtendRequest, ExtendableColorer,
    Extension, Side,
};
use crate::coloring::{find_witness, multiplicity, AchievementSpec, Color, Coloring, ListAssignment};
use crate::graph::{EdgeSet, Graph, Vertex, VertexSet};

/// Two graphs, cliques `Q_1`, `Q_2` identified position by position
/// (`q_left[i] ~ q_right[i]`), and edges of the identified clique to delete
/// afterwards, given in left ids.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueSumSpec {
    pub left: Graph,
    pub right: Graph,
    pub q_left: Vec<Vertex>,
    pub q_right: Vec<Vertex>,
    pub dropped: Vec<(Vertex, Vertex)>,
}

/// The summed graph. Left vertices keep their ids; right vertices outside
/// `Q_2` follow in id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSum {
    pub graph: Graph,
    pub left_map: Vec<Vertex>,
    pub right_map: Vec<Vertex>,
    /// The identified clique, in sum ids, aligned with `q_left`.
    pub q: Vec<Vertex>,
}

pub fn clique_sum(spec: &CliqueSumSpec) -> Result<CliqueSum, CliqueSumError> {
    let bad = |m: String| Err(CliqueSumError::InvalidSum(m));
    let (n1, n2) = (spec.left.vertex_count(), spec.right.vertex_count());
    if spec.q_left.len() != spec.q_right.len() {
        return bad(format!("|Q_1| = {} but |Q_2| = {}", spec.q_left.len(), spec.q_right.len()));
    }
    for (q, n, side) in [(&spec.q_left, n1, Side::Left), (&spec.q_right, n2, Side::Right)] {
        let set: VertexSet = q.iter().copied().collect();
        if set.len() != q.len() || VertexSet::max(&set).is_some_and(|m| m >= n) {
            return bad(format!("{side} clique {q:?} has repeats or out-of-range vertices"));
        }
    }
    if !spec.left.is_clique(&spec.q_left) {
        return Err(CliqueSumError::NotAClique(Side::Left));
    }
    if !spec.right.is_clique(&spec.q_right) {
        return Err(CliqueSumError::NotAClique(Side::Right));
    }
    if let Some(&(u, v)) = spec
        .dropped
        .iter()
        .find(|&&(u, v)| u == v || !spec.q_left.contains(&u) || !spec.q_left.contains(&v))
    {
        return bad(format!("dropped pair {u}-{v} is not inside the identified clique"));
    }

    let left_map: Vec<Vertex> = (0..n1).collect();
    let mut right_map = vec![usize::MAX; n2];
    for (&a, &b) in spec.q_left.iter().zip(&spec.q_right) {
        right_map[b] = a;
    }
    let mut next = n1;
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let dropped: EdgeSet = spec.dropped.iter().copied().collect();
    let mut edges = EdgeSet::new();
    for (u, v) in spec.left.edges() {
        edges.insert(u, v);
    }
    for (u, v) in spec.right.edges() {
        edges.insert(right_map[u], right_map[v]);
    }
    edges.retain(|u, v| !dropped.contains(u, v));
    Ok(CliqueSum {
        graph: Graph::from_edges(next, edges.iter())?,
        left_map,
        right_map,
        q: spec.q_left.clone(),
    })
}

/// The list assignment of the sum; identified vertices must carry equal lists.
pub fn merge_lists(
    spec: &CliqueSumSpec,
    sum: &CliqueSum,
    left: &ListAssignment,
    right: &ListAssignment,
) -> Result<ListAssignment, CliqueSumError> {
    if left.len() != spec.left.vertex_count() || right.len() != spec.right.vertex_count() {
        return Err(CliqueSumError::InvalidSum("list assignment sizes differ from the graphs".into()));
    }
    for (&a, &b) in spec.q_left.iter().zip(&spec.q_right) {
        if left.list(a) != right.list(b) {
            return Err(CliqueSumError::ListMismatch { left: a, right: b });
        }
    }
    let mut lists = vec![Default::default(); sum.graph.vertex_count()];
    for (v, &s) in sum.left_map.iter().enumerate() {
        lists[s] = left.list(v).clone();
    }
    for (v, &s) in sum.right_map.iter().enumerate() {
        lists[s] = right.list(v).clone();
    }
    Ok(ListAssignment::new(lists))
}

/// An extendable colorer for a clique-sum, built from one for each side.
pub struct CliqueSumColorer {
    sum: CliqueSum,
    sides: [Part; 2],
    frame: Vec<VertexSet>,
    lists: ListAssignment,
    threshold: usize,
    spec: AchievementSpec,
}

struct Part {
    side: Side,
    colorer: Box<dyn ExtendableColorer>,
    /// Side id to sum id.
    map: Vec<Vertex>,
    /// Sum id to side id.
    inv: Vec<Option<Vertex>>,
    /// The identified clique in side ids, aligned with `CliqueSum::q`.
    q: Vec<Vertex>,
}

impl Part {
    fn new(side: Side, colorer: Box<dyn ExtendableColorer>, map: Vec<Vertex>, n: usize, q: Vec<Vertex>) -> Self {
        let mut inv = vec![None; n];
        for (v, &s) in map.iter().enumerate() {
            inv[s] = Some(v);
        }
        Self { side, colorer, map, inv, q }
    }

    fn fail(&self, e: CliqueSumError) -> CliqueSumError {
        CliqueSumError::SideFailure {
            side: self.side,
            source: Box::new(e),
        }
    }

    /// `H` restricted to this side plus the pairs of `Q` that are not edges of the sum.
    fn deleted(&self, sum: &CliqueSum, h: &EdgeSet) -> EdgeSet {
        let mut out = EdgeSet::new();
        for (u, v) in h.iter() {
            if let (Some(a), Some(b)) = (self.inv[u], self.inv[v]) {
                out.insert(a, b);
            }
        }
        for i in 0..sum.q.len() {
            for j in i + 1..sum.q.len() {
                if !sum.graph.has_edge(sum.q[i], sum.q[j]) {
                    out.insert(self.q[i], self.q[j]);
                }
            }
        }
        out
    }
}

impl CliqueSumColorer {
    pub fn sum(&self) -> &CliqueSum {
        &self.sum
    }
}

/// Glues `left` and `right` along `spec`. Each side's frame must contain a
/// member covering its clique, each threshold must be at least `|Q|`, and the
/// result is extendable for the union of the frames at the smaller threshold.
pub fn combine_extendable(
    left: Box<dyn ExtendableColorer>,
    right: Box<dyn ExtendableColorer>,
    spec: &CliqueSumSpec,
) -> Result<CliqueSumColorer, CliqueSumError> {
    let bad = |m: &str| Err(CliqueSumError::InvalidSum(m.to_string()));
    if spec.left != *left.graph() || spec.right != *right.graph() {
        return bad("the sum's graphs differ from the colorers' graphs");
    }
    if left.spec() != right.spec() {
        return bad("the two sides use different achievement sets");
    }
    let sum = clique_sum(spec)?;
    for (c, q, side) in [(&left, &spec.q_left, Side::Left), (&right, &spec.q_right, Side::Right)] {
        if !c.frame().iter().any(|m| q.iter().all(|&v| m.contains(v))) {
            return Err(CliqueSumError::InvalidSum(format!("no {side} frame member covers the clique")));
        }
        if c.threshold() < q.len() {
            return Err(CliqueSumError::InvalidSum(format!(
                "{side} threshold {} is below |Q| = {}",
                c.threshold(),
                q.len()
            )));
        }
    }
    let lists = merge_lists(spec, &sum, left.lists(), right.lists())?;
    let mut frame: Vec<VertexSet> = Vec::new();
    for (c, map) in [(&left, &sum.left_map), (&right, &sum.right_map)] {
        for m in c.frame() {
            let mapped: VertexSet = m.iter().map(|v| map[v]).collect();
            if !frame.contains(&mapped) {
                frame.push(mapped);
            }
        }
    }
    let threshold = left.threshold().min(right.threshold());
    let spec_s = left.spec().clone();
    let n = sum.graph.vertex_count();
    let sides = [
        Part::new(Side::Left, left, sum.left_map.clone(), n, spec.q_left.clone()),
        Part::new(Side::Right, right, sum.right_map.clone(), n, spec.q_right.clone()),
    ];
    Ok(CliqueSumColorer {
        sum,
        sides,
        frame,
        lists,
        threshold,
        spec: spec_s,
    })
}

impl ExtendableColorer for CliqueSumColorer {
    fn graph(&self) -> &Graph {
        &self.sum.graph
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
        // a clique of the sum lies inside one side
        let in_left = req.anchors.keys().all(|&v| self.sides[0].inv[v].is_some());
        let (a, b) = if in_left {
            (&self.sides[0], &self.sides[1])
        } else {
            (&self.sides[1], &self.sides[0])
        };
        let ga = a.colorer.graph();
        let h_a = a.deleted(&self.sum, &req.deleted);
        let req_a = ExtendRequest {
            anchors: req
                .anchors
                .iter()
                .map(|(&v, &an)| (a.inv[v].expect("W on this side"), an))
                .collect(),
            deleted: h_a.clone(),
        };
        let ext_a = a.colorer.extend(&req_a).map_err(|e| a.fail(e))?;
        let phi_a = &ext_a.coloring;

        let mut anchors_b = BTreeMap::new();
        for (i, &x) in self.sum.q.iter().enumerate() {
            let xa = a.q[i];
            let color = phi_a.color(xa);
            let isolated = ga.neighbors(xa).iter().all(|&u| h_a.contains(xa, u));
            let witness = || -> Result<Color, CliqueSumError> {
                let reported = ext_a
                    .witness
                    .get(xa)
                    .filter(|&c| self.spec.contains(multiplicity(ga, phi_a, xa, c, Some(&h_a))));
                reported
                    .or_else(|| find_witness(ga, phi_a, xa, &self.spec, Some(&h_a)))
                    .ok_or_else(|| a.fail(CliqueSumError::Unsound(format!("vertex {xa} has no witness"))))
            };
            let anchor = match (req.anchors.get(&x), isolated) {
                (Some(an), true) => Anchor { color, ..*an },
                (Some(an), false) if !an.achieve => Anchor { color, ..*an },
                (Some(_), false) => Anchor {
                    color,
                    forbidden: Some(witness()?),
                    achieve: false,
                },
                (None, true) => Anchor {
                    color,
                    forbidden: None,
                    achieve: true,
                },
                (None, false) => Anchor {
                    color,
                    forbidden: Some(witness()?),
                    achieve: false,
                },
            };
            anchors_b.insert(b.q[i], anchor);
        }
        let req_b = ExtendRequest {
            anchors: anchors_b,
            deleted: b.deleted(&self.sum, &req.deleted),
        };
        let ext_b = b.colorer.extend(&req_b).map_err(|e| b.fail(e))?;

        let mut colors = vec![0; self.sum.graph.vertex_count()];
        for (part, ext) in [(a, &ext_a), (b, &ext_b)] {
            for (v, &s) in part.map.iter().enumerate() {
                colors[s] = ext.coloring.color(v);
            }
        }
        let coloring = Coloring::new(colors);
        let witness = recompute_witness(&self.sum.graph, &coloring, &self.spec, req);
        Ok(Extension { coloring, witness })
    }
}
