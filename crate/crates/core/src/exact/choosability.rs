//! Refuting choosability by enumerating list assignments over a finite universe.
//!
//! Finding no counterexample inside the universe proves nothing: the result is
//! then reported as inconclusive.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{solve, ExactError, ExactKind, Problem};
use crate::coloring::{Color, ListAssignment};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChoosabilityConfig {
    /// Colors are drawn from `1..=universe`; `None` means `2k`.
    pub universe: Option<usize>,
    /// Maximum number of list assignments examined.
    pub budget: u64,
    pub max_vertices: usize,
}

impl Default for ChoosabilityConfig {
    fn default() -> Self {
        Self {
            universe: None,
            budget: 1_000_000,
            max_vertices: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChoosabilityResult {
    Counterexample(ListAssignment),
    Inconclusive { examined: u64, exhausted: bool },
}

fn k_subsets(universe: usize, k: usize) -> Vec<BTreeSet<Color>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > universe {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| i as Color + 1).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < universe - k + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Looks for a `k`-list-assignment of `g` admitting no `kind` coloring.
pub fn refute_choosability(
    g: &Graph,
    k: usize,
    kind: &ExactKind,
    cfg: &ChoosabilityConfig,
) -> Result<ChoosabilityResult, ExactError> {
    let n = g.vertex_count();
    if n > cfg.max_vertices {
        return Err(ExactError::InstanceTooLarge {
            n,
            cap: cfg.max_vertices,
        });
    }
    let spec = kind.spec();
    let universe = cfg.universe.unwrap_or(2 * k).max(k);
    let subsets = k_subsets(universe, k);
    if n == 0 || subsets.is_empty() {
        return Ok(ChoosabilityResult::Inconclusive {
            examined: 0,
            exhausted: true,
        });
    }
    // colors are interchangeable, so the first list may be fixed to {1..k}
    let mut idx = vec![0usize; n];
    let mut examined = 0u64;
    loop {
        if examined >= cfg.budget {
            return Ok(ChoosabilityResult::Inconclusive {
                examined,
                exhausted: false,
            });
        }
        examined += 1;
        let lists = ListAssignment::new(idx.iter().map(|&i| subsets[i].clone()).collect());
        let p = Problem {
            g,
            proper: kind.proper(),
            spec: spec.as_ref(),
            closed: kind.closed(),
            deleted: None,
            domains: lists.lists.iter().map(|l| l.iter().copied().collect()).collect(),
            exempt: vec![false; n],
            canonical: false,
        };
        if solve(&p).coloring.is_none() {
            return Ok(ChoosabilityResult::Counterexample(lists));
        }
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(ChoosabilityResult::Inconclusive {
                    examined,
                    exhausted: true,
                });
            }
            idx[i] += 1;
            if idx[i] < subsets.len() {
                break;
            }
            idx[i] = 0;
            i -= 1;
        }
    }
}
