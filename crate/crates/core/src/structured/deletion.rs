//! Coloring around a small set `Y` of troublesome vertices: each `y ∈ Y` is
//! paired with a neighbour `f(y)`, the set `X = Y ∪ f(Y)` is colored rainbow
//! and the rest of the graph is colored from lists with those colors removed.

use std::collections::BTreeSet;

use super::{check_list_count, ListColorer, SquareGreedy, StructuredError};
use crate::coloring::{remove_colors, AchievementSpec, Color, Coloring, ListAssignment};
use crate::graph::{EdgeSet, Graph, GraphError, VertexSet};

/// Colors `g` by rainbow-coloring `X = Y ∪ f(Y)` and delegating `g - X` to
/// `inner`. Isolated vertices are colored first from their own lists. `S`
/// must contain 1.
pub fn color_with_deletion(
    g: &Graph,
    lists: &ListAssignment,
    y: &VertexSet,
    spec: &AchievementSpec,
    inner: &dyn ListColorer,
) -> Result<Coloring, StructuredError> {
    check_list_count(g, lists)?;
    if !spec.contains_one() {
        return Err(StructuredError::SpecWithoutOne);
    }
    let n = g.vertex_count();
    if let Some(v) = y.iter().find(|&v| v >= n) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
    }
    let mut color: Vec<Option<Color>> = vec![None; n];
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let c = lists.list(v).first().copied().ok_or(StructuredError::ListTooShort {
            vertex: v,
            have: 0,
            need: 1,
        })?;
        color[v] = Some(c);
    }

    let mut x = VertexSet::new();
    for v in y.iter().filter(|&v| g.degree(v) > 0) {
        x.insert(v);
        x.insert(g.neighbors(v)[0]);
    }
    let mut z = BTreeSet::new();
    for v in x.iter() {
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| !z.contains(c))
            .ok_or(StructuredError::ListTooShort {
                vertex: v,
                have: lists.list(v).len(),
                need: x.len(),
            })?;
        z.insert(c);
        color[v] = Some(c);
    }

    let rest: VertexSet = g.vertices().filter(|&v| color[v].is_none()).collect();
    let (sub, ids) = g.induced_subgraph(&rest);
    let removed = remove_colors(&lists.restrict(&ids), &z);
    let inner_coloring = inner.color(&sub, &removed.lists, spec, &EdgeSet::new())?;
    for (i, &v) in ids.iter().enumerate() {
        color[v] = Some(inner_coloring.color(i));
    }
    Ok(Coloring::new(color.into_iter().map(|c| c.expect("colored")).collect()))
}

/// `(⌈d⌉ - 1)² + 1 + 2⌈d⌉`: enough for [`color_near_bounded_degree`].
pub fn near_bounded_list_size(d: f64) -> usize {
    let c = d.ceil().max(1.0) as usize;
    (c - 1) * (c - 1) + 1 + 2 * c
}

/// Conflict-free list coloring when at most `d` vertices have degree `≥ d`:
/// those vertices form `Y` and the remainder, of maximum degree below `d`, is
/// colored greedily on its square.
pub fn color_near_bounded_degree(
    g: &Graph,
    lists: &ListAssignment,
    d: f64,
) -> Result<Coloring, StructuredError> {
    let y: VertexSet = g.vertices().filter(|&v| g.degree(v) as f64 >= d).collect();
    let allowed = d.floor().max(0.0) as usize;
    if y.len() > allowed {
        return Err(StructuredError::TooManyHighDegreeVertices {
            found: y.len(),
            allowed,
        });
    }
    color_with_deletion(g, lists, &y, &AchievementSpec::conflict_free(), &SquareGreedy)
}
