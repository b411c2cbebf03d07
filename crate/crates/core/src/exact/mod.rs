//! Exhaustive oracles for small graphs: exact chromatic parameters, list
//! coloring, choosability refutation and extendable coloring.

mod choosability;
mod extendable;
mod search;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{AchievementSpec, Color, Coloring, ListAssignment};
use crate::graph::{EdgeSet, Graph};

pub use choosability::{refute_choosability, ChoosabilityConfig, ChoosabilityResult};
pub use extendable::BruteExtendable;
pub(crate) use search::{solve, Problem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("instance has {n} vertices, above the cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("no {0} coloring exists with any number of colors")]
    NoColoring(ExactKind),
    #[error("list assignment covers {got} vertices, graph has {expected}")]
    ListCount { expected: usize, got: usize },
}

/// The parameter being minimized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactKind {
    /// Ordinary chromatic number.
    Proper,
    /// Proper, conflict-free in open neighbourhoods.
    Pcf,
    /// Proper, conflict-free in closed neighbourhoods.
    Pcfc,
    /// Improper, conflict-free in open neighbourhoods.
    Icf,
    /// Improper, conflict-free in closed neighbourhoods.
    Icfc,
    /// Proper odd coloring.
    Odd,
    /// Proper `S`-achieved coloring.
    SAchieved(AchievementSpec),
}

impl ExactKind {
    /// Whether the coloring must be proper.
    pub fn proper(&self) -> bool {
        !matches!(self, Self::Icf | Self::Icfc)
    }

    /// Whether achievement is measured in closed neighbourhoods.
    pub fn closed(&self) -> bool {
        matches!(self, Self::Pcfc | Self::Icfc)
    }

    /// The achievement set, `None` for plain proper coloring.
    pub fn spec(&self) -> Option<AchievementSpec> {
        match self {
            Self::Proper => None,
            Self::Pcf | Self::Pcfc | Self::Icf | Self::Icfc => Some(AchievementSpec::conflict_free()),
            Self::Odd => Some(AchievementSpec::Odd),
            Self::SAchieved(s) => Some(s.clone()),
        }
    }

    /// Independent check of a finished coloring against this kind.
    pub fn verify(&self, g: &Graph, phi: &Coloring) -> bool {
        use crate::coloring::{achievement, verify_proper, Neighborhood};
        if self.proper() && verify_proper(g, phi).is_err() {
            return false;
        }
        let nbhd = if self.closed() {
            Neighborhood::Closed
        } else {
            Neighborhood::Open
        };
        match self.spec() {
            None => phi.len() == g.vertex_count(),
            Some(s) => achievement(g, phi, &s, nbhd, None).is_ok(),
        }
    }
}

impl fmt::Display for ExactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Proper => write!(f, "proper"),
            Self::Pcf => write!(f, "pcf"),
            Self::Pcfc => write!(f, "pcfc"),
            Self::Icf => write!(f, "icf"),
            Self::Icfc => write!(f, "icfc"),
            Self::Odd => write!(f, "odd"),
            Self::SAchieved(s) => write!(f, "s:{s}"),
        }
    }
}

impl FromStr for ExactKind {
    type Err = String;

    /// `proper`, `pcf`, `pcfc`, `icf`, `icfc`, `odd`, or `s:<spec>` such as `s:1,3`.
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "proper" | "chi" => Self::Proper,
            "pcf" => Self::Pcf,
            "pcfc" => Self::Pcfc,
            "icf" => Self::Icf,
            "icfc" => Self::Icfc,
            "odd" => Self::Odd,
            _ => match s.strip_prefix("s:") {
                Some(rest) => Self::SAchieved(rest.parse()?),
                None => return Err(format!("unknown kind {s:?}")),
            },
        })
    }
}

impl Serialize for ExactKind {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub max_vertices: usize,
    /// Values of `k` tried concurrently; `1` is fully sequential.
    pub jobs: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            max_vertices: 12,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub parameter: ExactKind,
    pub value: usize,
    pub witness: Coloring,
    /// Search nodes summed over every `k` up to `value`.
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn palette_problem<'a>(g: &'a Graph, kind: &'a ExactKind, spec: Option<&'a AchievementSpec>, k: usize) -> Problem<'a> {
    let n = g.vertex_count();
    Problem {
        g,
        proper: kind.proper(),
        spec,
        closed: kind.closed(),
        deleted: None,
        domains: vec![(1..=k as Color).collect(); n],
        exempt: vec![false; n],
        canonical: true,
    }
}

/// Searches for a `kind` coloring with colors `1..=k`.
pub fn find_coloring(g: &Graph, kind: &ExactKind, k: usize) -> (Option<Coloring>, u64) {
    let spec = kind.spec();
    let out = solve(&palette_problem(g, kind, spec.as_ref(), k));
    (out.coloring.map(Coloring::new), out.nodes)
}

/// Smallest `k` admitting a `kind` coloring, with a witness using exactly `k` colors.
pub fn exact_chromatic(
    g: &Graph,
    kind: &ExactKind,
    cfg: &ExactConfig,
) -> Result<ExactResult, ExactError> {
    let n = g.vertex_count();
    if n > cfg.max_vertices {
        return Err(ExactError::InstanceTooLarge {
            n,
            cap: cfg.max_vertices,
        });
    }
    let start = Instant::now();
    if n == 0 {
        return Ok(ExactResult {
            parameter: kind.clone(),
            value: 0,
            witness: Coloring::new(Vec::new()),
            nodes: 0,
            elapsed: start.elapsed(),
        });
    }
    let jobs = cfg.jobs.max(1);
    let mut nodes = 0;
    let mut k = 1;
    while k <= n {
        let batch: Vec<usize> = (k..=(k + jobs - 1).min(n)).collect();
        let results: Vec<(Option<Coloring>, u64)> = if jobs == 1 {
            batch.iter().map(|&k| find_coloring(g, kind, k)).collect()
        } else {
            batch.par_iter().map(|&k| find_coloring(g, kind, k)).collect()
        };
        for (&k, (found, used)) in batch.iter().zip(results) {
            nodes += used;
            if let Some(witness) = found {
                return Ok(ExactResult {
                    parameter: kind.clone(),
                    value: k,
                    witness,
                    nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
        k += batch.len();
    }
    Err(ExactError::NoColoring(kind.clone()))
}

/// A proper `S`-achieved `L`-coloring (achievement taken in `G - E(H)`), if any.
pub fn exact_list_coloring(
    g: &Graph,
    lists: &ListAssignment,
    spec: &AchievementSpec,
    deleted: Option<&EdgeSet>,
) -> Result<Option<Coloring>, ExactError> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(ExactError::ListCount {
            expected: n,
            got: lists.len(),
        });
    }
    let p = Problem {
        g,
        proper: true,
        spec: Some(spec),
        closed: false,
        deleted,
        domains: lists.lists.iter().map(|l| l.iter().copied().collect()).collect(),
        exempt: vec![false; n],
        canonical: false,
    };
    Ok(solve(&p).coloring.map(Coloring::new))
}

/// The five classical parameters of one graph and any broken relation among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsReport {
    pub chi: usize,
    pub pcf: usize,
    pub pcfc: usize,
    pub icf: usize,
    pub icfc: usize,
    pub violations: Vec<String>,
}

impl RelationsReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes χ, χ_pcf, χ_pcfc, χ_icf, χ_icfc and checks
/// `χ_icf ≤ χ_pcf ≥ χ`, `χ_icfc ≤ 2 χ_icf` and `χ_pcfc = χ`.
pub fn exact_relations_check(g: &Graph, cfg: &ExactConfig) -> Result<RelationsReport, ExactError> {
    let value = |k: ExactKind| exact_chromatic(g, &k, cfg).map(|r| r.value);
    let chi = value(ExactKind::Proper)?;
    let pcf = value(ExactKind::Pcf)?;
    let pcfc = value(ExactKind::Pcfc)?;
    let icf = value(ExactKind::Icf)?;
    let icfc = value(ExactKind::Icfc)?;
    let mut violations = Vec::new();
    if icf > pcf {
        violations.push(format!("icf {icf} > pcf {pcf}"));
    }
    if pcf < chi {
        violations.push(format!("pcf {pcf} < chi {chi}"));
    }
    if icfc > 2 * icf {
        violations.push(format!("icfc {icfc} > 2 * icf {icf}"));
    }
    if pcfc != chi {
        violations.push(format!("pcfc {pcfc} != chi {chi}"));
    }
    Ok(RelationsReport {
        chi,
        pcf,
        pcfc,
        icf,
        icfc,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generators, one_subdivision};

    fn value(g: &Graph, kind: ExactKind) -> usize {
        let r = exact_chromatic(g, &kind, &ExactConfig::default()).unwrap();
        assert!(kind.verify(g, &r.witness));
        assert_eq!(r.witness.colors_used(), r.value);
        r.value
    }

    /// Plain `k^n` enumeration, used as an independent oracle.
    fn naive(g: &Graph, kind: &ExactKind) -> usize {
        let n = g.vertex_count();
        for k in 1..=n {
            let mut colors = vec![1 as Color; n];
            loop {
                if kind.verify(g, &Coloring::new(colors.clone())) {
                    return k;
                }
                let mut i = 0;
                while i < n && colors[i] == k as Color {
                    colors[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
                colors[i] += 1;
            }
        }
        usize::MAX
    }

    #[test]
    fn tight_small_values() {
        assert_eq!(value(&generators::cycle(5), ExactKind::Pcf), 5);
        assert_eq!(value(&generators::path(3), ExactKind::Pcf), 3);
        for n in 1..=6 {
            assert_eq!(value(&generators::complete(n), ExactKind::Pcf), n);
        }
        assert_eq!(value(&generators::complete(3), ExactKind::Icf), 3);
        assert_eq!(value(&Graph::empty(4), ExactKind::Pcf), 1);
        assert_eq!(value(&Graph::empty(0), ExactKind::Pcf), 0);
    }

    #[test]
    fn matches_naive_enumeration() {
        let kinds = [
            ExactKind::Proper,
            ExactKind::Pcf,
            ExactKind::Pcfc,
            ExactKind::Icf,
            ExactKind::Icfc,
            ExactKind::Odd,
        ];
        for seed in 0..40 {
            let g = generators::random_gnp(6, 0.45, seed);
            for kind in &kinds {
                assert_eq!(value(&g, kind.clone()), naive(&g, kind), "seed {seed} kind {kind}");
            }
        }
    }

    #[test]
    fn subdivision_lower_bound() {
        let h = generators::complete(4);
        let g = one_subdivision(&h).graph;
        assert!(value(&g, ExactKind::Pcf) >= 4);
    }

    #[test]
    fn infeasible_without_one() {
        // a leaf sees a single color once, so S = {2} is unreachable
        let kind = ExactKind::SAchieved("2".parse().unwrap());
        assert!(matches!(
            exact_chromatic(&generators::path(2), &kind, &ExactConfig::default()),
            Err(ExactError::NoColoring(_))
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = generators::petersen();
        let seq = exact_chromatic(&g, &ExactKind::Pcf, &ExactConfig::default()).unwrap();
        let par = exact_chromatic(
            &g,
            &ExactKind::Pcf,
            &ExactConfig {
                max_vertices: 12,
                jobs: 4,
            },
        )
        .unwrap();
        assert_eq!(seq.value, par.value);
        assert_eq!(seq.witness, par.witness);
        assert_eq!(seq.nodes, par.nodes);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            exact_chromatic(&generators::path(13), &ExactKind::Pcf, &ExactConfig::default()),
            Err(ExactError::InstanceTooLarge { n: 13, cap: 12 })
        ));
    }

    #[test]
    fn relations() {
        let r = exact_relations_check(&generators::cycle(5), &ExactConfig::default()).unwrap();
        assert_eq!((r.pcf, r.chi), (5, 3));
        assert!(r.holds());
        let r = exact_relations_check(&Graph::empty(3), &ExactConfig::default()).unwrap();
        assert_eq!((r.chi, r.pcf, r.pcfc, r.icf, r.icfc), (1, 1, 1, 1, 1));
    }

    #[test]
    fn list_coloring_respects_lists() {
        let g = generators::path(3);
        let lists = ListAssignment::new(vec![[1, 2].into(), [1, 2].into(), [1, 2].into()]);
        let cf = AchievementSpec::conflict_free();
        assert_eq!(exact_list_coloring(&g, &lists, &cf, None).unwrap(), None);
        let lists = ListAssignment::new(vec![[1].into(), [2].into(), [3, 1].into()]);
        let phi = exact_list_coloring(&g, &lists, &cf, None).unwrap().unwrap();
        assert_eq!(phi.colors, vec![1, 2, 3]);
        // deleting 1-2 leaves vertex 2 isolated for achievement, so 1 works
        let h: EdgeSet = [(1, 2)].into_iter().collect();
        let phi = exact_list_coloring(&g, &lists, &cf, Some(&h)).unwrap().unwrap();
        assert_eq!(phi.colors, vec![1, 2, 1]);
    }

    #[test]
    fn kind_strings() {
        for s in ["proper", "pcf", "pcfc", "icf", "icfc", "odd", "s:1,3"] {
            assert_eq!(s.parse::<ExactKind>().unwrap().to_string(), s);
        }
        assert!("bogus".parse::<ExactKind>().is_err());
    }
}
