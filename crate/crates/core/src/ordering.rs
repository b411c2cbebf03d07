//! Ordering plans and the greedy conflict-free list colorer they drive.
//!
//! A plan is an order `v_1, ..., v_n` with sets `S_i` such that
//! `N[v_i] ∩ {v_1..v_i} ⊆ S_i ⊆ {v_1..v_i}`. With `w1 = max |S_i|` and `w2` the
//! largest `|S*_i|`, where `S*_i` is the union of the `S_j` containing `v_i`
//! cut down to `{v_1..v_i}`, lists of size `w1 + w2 - 1` always suffice.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment, WitnessMap};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("plan order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("plan violation at position {index}: {reason}")]
    PlanViolation { index: usize, reason: String },
    #[error("list assignment covers {got} vertices, graph has {expected}")]
    ListCount { expected: usize, got: usize },
    #[error("no color left for vertex {vertex}")]
    ListTooShort { vertex: Vertex },
    #[error("set S_{set} is not rainbow after step {step}")]
    RainbowViolated { step: usize, set: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingPlan {
    pub order: Vec<Vertex>,
    /// `sets[i]` is `S_i` for the vertex at position `i`.
    pub sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanWidths {
    pub w1: usize,
    pub w2: usize,
}

impl PlanWidths {
    /// `w1 + w2 - 1`.
    pub fn list_size(&self) -> usize {
        (self.w1 + self.w2).saturating_sub(1)
    }
}

fn positions(n: usize, order: &[Vertex]) -> Result<Vec<usize>, OrderingError> {
    if order.len() != n {
        return Err(OrderingError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrderingError::NotAPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

impl OrderingPlan {
    /// Positions `j` with `v_i ∈ S_j`, indexed by vertex.
    fn containing(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (j, s) in self.sets.iter().enumerate() {
            for v in s.iter() {
                out[v].push(j);
            }
        }
        out
    }

    /// `S*_i` for every position, as vertex lists.
    fn star_sets(&self, pos: &[usize]) -> Vec<Vec<Vertex>> {
        let containing = self.containing(pos.len());
        self.order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let set: BTreeSet<Vertex> = containing[v]
                    .iter()
                    .flat_map(|&j| self.sets[j].iter())
                    .filter(|&u| pos[u] <= i)
                    .collect();
                set.into_iter().collect()
            })
            .collect()
    }
}

/// Checks both inclusions and `v_i ∈ S_i`, then recomputes `w1` and `w2`.
pub fn validate_plan(g: &Graph, plan: &OrderingPlan) -> Result<PlanWidths, OrderingError> {
    let n = g.vertex_count();
    let pos = positions(n, &plan.order)?;
    if plan.sets.len() != n {
        return Err(OrderingError::PlanViolation {
            index: plan.sets.len().min(n),
            reason: format!("{} sets for {n} vertices", plan.sets.len()),
        });
    }
    for (i, (&v, s)) in plan.order.iter().zip(&plan.sets).enumerate() {
        let violation = |reason: String| OrderingError::PlanViolation { index: i, reason };
        if !s.contains(v) {
            return Err(violation(format!("S_{i} does not contain v_{i} = {v}")));
        }
        if let Some(u) = s.iter().find(|&u| u >= n || pos[u] > i) {
            return Err(violation(format!("S_{i} contains later vertex {u}")));
        }
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| pos[u] < i && !s.contains(u)) {
            return Err(violation(format!("S_{i} misses earlier neighbour {u}")));
        }
    }
    let w1 = plan.sets.iter().map(VertexSet::len).max().unwrap_or(0);
    let w2 = plan.star_sets(&pos).iter().map(Vec::len).max().unwrap_or(0);
    Ok(PlanWidths { w1, w2 })
}

/// `S_i = N[v_i] ∩ {v_1..v_i}`.
pub fn minimal_plan(g: &Graph, order: &[Vertex]) -> Result<OrderingPlan, OrderingError> {
    let pos = positions(g.vertex_count(), order)?;
    let sets = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| pos[u] < i)
                .chain(std::iter::once(v))
                .collect()
        })
        .collect();
    Ok(OrderingPlan {
        order: order.to_vec(),
        sets,
    })
}

/// A random order with minimal sets, each padded with up to `extra` random earlier vertices.
pub fn random_plan<R: Rng + ?Sized>(g: &Graph, extra: usize, rng: &mut R) -> OrderingPlan {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    let mut plan = minimal_plan(g, &order).expect("shuffled vertices form a permutation");
    for i in 1..order.len() {
        let k = rng.gen_range(0..=extra);
        for _ in 0..k {
            let u = order[rng.gen_range(0..i)];
            plan.sets[i].insert(u);
        }
    }
    plan
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanColoring {
    pub coloring: Coloring,
    pub witness: WitnessMap,
    pub widths: PlanWidths,
    /// Largest forbidden set `Z_i` met during the run.
    pub max_forbidden: usize,
}

/// Colors `v_1, ..., v_n` in turn with the smallest color of `L(v_i) - Z_i`,
/// where `Z_i` holds the colors already on `S*_i` and the witnesses of
/// earlier members of `S_i`. With `debug_rainbow` the colored part of every
/// `S_j` is re-checked for distinct colors after each step.
pub fn color_by_plan(
    g: &Graph,
    plan: &OrderingPlan,
    lists: &ListAssignment,
    debug_rainbow: bool,
) -> Result<PlanColoring, OrderingError> {
    let n = g.vertex_count();
    let widths = validate_plan(g, plan)?;
    if lists.len() != n {
        return Err(OrderingError::ListCount {
            expected: n,
            got: lists.len(),
        });
    }
    let pos = positions(n, &plan.order)?;
    let star = plan.star_sets(&pos);
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut witness: Vec<Option<Color>> = vec![None; n];
    let mut max_forbidden = 0;
    for (i, &v) in plan.order.iter().enumerate() {
        let mut z: BTreeSet<Color> = star[i].iter().filter_map(|&u| color[u]).collect();
        z.extend(plan.sets[i].iter().filter(|&u| u != v).filter_map(|u| witness[u]));
        max_forbidden = max_forbidden.max(z.len());
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| !z.contains(c))
            .ok_or(OrderingError::ListTooShort { vertex: v })?;
        color[v] = Some(c);
        let mut earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] < i)
            .collect();
        earlier.sort_by_key(|&u| pos[u]);
        for &u in &earlier {
            if witness[u].is_none() {
                witness[u] = Some(c);
            }
        }
        witness[v] = earlier.first().and_then(|&u| color[u]);
        if debug_rainbow {
            check_rainbow(plan, &color, i)?;
        }
    }
    Ok(PlanColoring {
        coloring: Coloring::new(color.into_iter().map(|c| c.expect("all colored")).collect()),
        witness: WitnessMap { witness },
        widths,
        max_forbidden,
    })
}

fn check_rainbow(
    plan: &OrderingPlan,
    color: &[Option<Color>],
    step: usize,
) -> Result<(), OrderingError> {
    for (j, s) in plan.sets.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for c in s.iter().filter_map(|u| color[u]) {
            if !seen.insert(c) {
                return Err(OrderingError::RainbowViolated { step, set: j });
            }
        }
    }
    Ok(())
}
