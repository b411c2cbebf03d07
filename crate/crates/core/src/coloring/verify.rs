use std::collections::BTreeMap;

use thiserror::Error;

use super::{AchievementSpec, Color, Coloring, ListAssignment, WitnessMap};
use crate::graph::{EdgeSet, Graph, Vertex};

/// First violation found, scanning vertices in id order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    PartialColoring { expected: usize, got: usize },
    #[error("edge {u}-{v} is monochromatic")]
    MonochromaticEdge { u: Vertex, v: Vertex },
    #[error("vertex {vertex} has no neighbour color with multiplicity in S")]
    Unachieved { vertex: Vertex },
    #[error("vertex {vertex} has color {color} outside its list")]
    ColorNotInList { vertex: Vertex, color: Color },
}

/// Which neighbourhood a vertex must be achieved in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighborhood {
    Open,
    Closed,
}

fn check_len(g: &Graph, phi: &Coloring) -> Result<(), VerifyError> {
    if phi.len() != g.vertex_count() {
        return Err(VerifyError::PartialColoring {
            expected: g.vertex_count(),
            got: phi.len(),
        });
    }
    Ok(())
}

pub fn verify_proper(g: &Graph, phi: &Coloring) -> Result<(), VerifyError> {
    check_len(g, phi)?;
    match g.edges().find(|&(u, v)| phi.color(u) == phi.color(v)) {
        Some((u, v)) => Err(VerifyError::MonochromaticEdge { u, v }),
        None => Ok(()),
    }
}

fn live_neighbors<'a>(
    g: &'a Graph,
    v: Vertex,
    deleted: Option<&'a EdgeSet>,
) -> impl Iterator<Item = Vertex> + 'a {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(move |&y| deleted.is_none_or(|h| !h.contains(v, y)))
}

/// Multiplicity of `color` in `N_{G - E(H)}(v)`.
pub fn multiplicity(
    g: &Graph,
    phi: &Coloring,
    v: Vertex,
    color: Color,
    deleted: Option<&EdgeSet>,
) -> usize {
    live_neighbors(g, v, deleted)
        .filter(|&y| phi.color(y) == color)
        .count()
}

fn smallest_witness(counts: &BTreeMap<Color, usize>, spec: &AchievementSpec) -> Option<Color> {
    counts
        .iter()
        .find(|&(_, &m)| spec.contains(m))
        .map(|(&c, _)| c)
}

/// Smallest color whose multiplicity in `N_{G - E(H)}(v)` lies in `S`.
pub fn find_witness(
    g: &Graph,
    phi: &Coloring,
    v: Vertex,
    spec: &AchievementSpec,
    deleted: Option<&EdgeSet>,
) -> Option<Color> {
    let mut counts = BTreeMap::new();
    for y in live_neighbors(g, v, deleted) {
        *counts.entry(phi.color(y)).or_insert(0) += 1;
    }
    smallest_witness(&counts, spec)
}

/// General achievement check. Vertices whose relevant neighbourhood is empty
/// are exempt and get no witness.
pub fn achievement(
    g: &Graph,
    phi: &Coloring,
    spec: &AchievementSpec,
    nbhd: Neighborhood,
    deleted: Option<&EdgeSet>,
) -> Result<WitnessMap, VerifyError> {
    check_len(g, phi)?;
    let mut witness = WitnessMap::empty(g.vertex_count());
    for v in g.vertices() {
        let mut counts = BTreeMap::new();
        let mut any = false;
        for y in live_neighbors(g, v, deleted) {
            any = true;
            *counts.entry(phi.color(y)).or_insert(0) += 1;
        }
        if nbhd == Neighborhood::Closed {
            any = true;
            *counts.entry(phi.color(v)).or_insert(0) += 1;
        }
        if !any {
            continue;
        }
        match smallest_witness(&counts, spec) {
            Some(c) => witness.set(v, Some(c)),
            None => return Err(VerifyError::Unachieved { vertex: v }),
        }
    }
    Ok(witness)
}

/// `S`-achievement in the open neighbourhood of `G - E(H)`; properness is not checked.
pub fn verify_s_achieved(
    g: &Graph,
    phi: &Coloring,
    spec: &AchievementSpec,
    deleted: Option<&EdgeSet>,
) -> Result<WitnessMap, VerifyError> {
    achievement(g, phi, spec, Neighborhood::Open, deleted)
}

/// Proper on `G` and `S`-achieved in `G - E(H)`.
pub fn verify_proper_s_achieved(
    g: &Graph,
    phi: &Coloring,
    spec: &AchievementSpec,
    deleted: Option<&EdgeSet>,
) -> Result<WitnessMap, VerifyError> {
    verify_proper(g, phi)?;
    verify_s_achieved(g, phi, spec, deleted)
}

/// Open-neighbourhood conflict-free check (no properness requirement).
pub fn verify_conflict_free(g: &Graph, phi: &Coloring) -> Result<WitnessMap, VerifyError> {
    achievement(g, phi, &AchievementSpec::conflict_free(), Neighborhood::Open, None)
}

/// Closed-neighbourhood conflict-free check (no properness requirement).
pub fn verify_conflict_free_closed(g: &Graph, phi: &Coloring) -> Result<WitnessMap, VerifyError> {
    achievement(g, phi, &AchievementSpec::conflict_free(), Neighborhood::Closed, None)
}

pub fn verify_odd(g: &Graph, phi: &Coloring) -> Result<WitnessMap, VerifyError> {
    achievement(g, phi, &AchievementSpec::Odd, Neighborhood::Open, None)
}

pub fn respects_lists(phi: &Coloring, lists: &ListAssignment) -> bool {
    check_lists(phi, lists).is_ok()
}

pub fn check_lists(phi: &Coloring, lists: &ListAssignment) -> Result<(), VerifyError> {
    if phi.len() != lists.len() {
        return Err(VerifyError::PartialColoring {
            expected: lists.len(),
            got: phi.len(),
        });
    }
    for (v, &c) in phi.colors.iter().enumerate() {
        if !lists.list(v).contains(&c) {
            return Err(VerifyError::ColorNotInList { vertex: v, color: c });
        }
    }
    Ok(())
}
