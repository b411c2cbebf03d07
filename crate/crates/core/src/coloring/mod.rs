//! Colorings, list assignments, achievement sets and their verifiers.

mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

pub use verify::{
    achievement, check_lists, find_witness, multiplicity, respects_lists, verify_conflict_free,
    verify_conflict_free_closed, verify_odd, verify_proper, verify_proper_s_achieved,
    verify_s_achieved, Neighborhood, VerifyError,
};

/// Colors are opaque integers.
pub type Color = u32;

/// A total vertex coloring, `colors[v]` being the color of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}

/// Per-vertex color lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<Color>>) -> Self {
        Self { lists }
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        let list: BTreeSet<Color> = (1..=k as Color).collect();
        Self {
            lists: vec![list; n],
        }
    }

    /// Each vertex gets an independent uniformly random `k`-subset of `{1, ..., universe}`.
    pub fn random<R: Rng + ?Sized>(n: usize, k: usize, universe: usize, rng: &mut R) -> Self {
        assert!(k <= universe, "list size exceeds the color universe");
        let lists = (0..n)
            .map(|_| {
                sample(rng, universe, k)
                    .into_iter()
                    .map(|c| c as Color + 1)
                    .collect()
            })
            .collect();
        Self { lists }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &BTreeSet<Color> {
        &self.lists[v]
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(BTreeSet::len).min().unwrap_or(usize::MAX)
    }

    pub fn is_k_assignment(&self, k: usize) -> bool {
        self.lists.iter().all(|l| l.len() >= k)
    }

    /// True when every vertex has the same list.
    pub fn is_uniform(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// Lists of the given vertices, in that order.
    pub fn restrict(&self, vertices: &[Vertex]) -> ListAssignment {
        Self {
            lists: vertices.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Union of all lists.
    pub fn palette(&self) -> BTreeSet<Color> {
        self.lists.iter().flatten().copied().collect()
    }
}

/// Pointwise `L(v) - Z`, together with the smallest resulting list size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedLists {
    pub lists: ListAssignment,
    pub min_size: usize,
}

pub fn remove_colors(lists: &ListAssignment, removed: &BTreeSet<Color>) -> RemovedLists {
    let lists = ListAssignment {
        lists: lists
            .lists
            .iter()
            .map(|l| l.difference(removed).copied().collect())
            .collect(),
    };
    let min_size = if lists.is_empty() { 0 } else { lists.min_size() };
    RemovedLists { lists, min_size }
}

/// The set `S` of admissible multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AchievementSpec {
    /// A finite set of positive integers; `{1}` is conflict-free coloring.
    Exact(BTreeSet<usize>),
    /// All positive odd integers (odd coloring).
    Odd,
}

impl AchievementSpec {
    pub fn conflict_free() -> Self {
        Self::Exact(BTreeSet::from([1]))
    }

    pub fn odd() -> Self {
        Self::Odd
    }

    pub fn contains(&self, s: usize) -> bool {
        match self {
            Self::Exact(set) => set.contains(&s),
            Self::Odd => s % 2 == 1,
        }
    }

    pub fn contains_one(&self) -> bool {
        self.contains(1)
    }

    /// Members up to `cap`; a vertex of degree `Δ` never sees a multiplicity above `Δ`.
    pub fn support(&self, cap: usize) -> Vec<usize> {
        (1..=cap).filter(|&s| self.contains(s)).collect()
    }
}

impl fmt::Display for AchievementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Odd => write!(f, "odd"),
            Self::Exact(set) if set.len() == 1 && set.contains(&1) => write!(f, "cf"),
            Self::Exact(set) => {
                let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl FromStr for AchievementSpec {
    type Err = String;

    /// `cf`, `odd`, or a comma-separated list of positive integers such as `1,3`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cf" => Ok(Self::conflict_free()),
            "odd" => Ok(Self::Odd),
            _ => {
                let set = s
                    .split(',')
                    .map(|p| match p.trim().parse::<usize>() {
                        Ok(0) | Err(_) => Err(format!("invalid multiplicity {p:?}")),
                        Ok(v) => Ok(v),
                    })
                    .collect::<Result<BTreeSet<_>, _>>()?;
                Ok(Self::Exact(set))
            }
        }
    }
}

/// Per-vertex witness colors: `witness[v]` appears in the relevant
/// neighbourhood of `v` with a multiplicity in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMap {
    pub witness: Vec<Option<Color>>,
}

impl WitnessMap {
    pub fn empty(n: usize) -> Self {
        Self {
            witness: vec![None; n],
        }
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.witness[v]
    }

    pub fn set(&mut self, v: Vertex, c: Option<Color>) {
        self.witness[v] = c;
    }
}

/// A partial coloring keyed by vertex, used for boundary colorings.
pub type PartialColoring = BTreeMap<Vertex, Color>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!("cf".parse::<AchievementSpec>().unwrap(), AchievementSpec::conflict_free());
        assert_eq!("odd".parse::<AchievementSpec>().unwrap(), AchievementSpec::Odd);
        assert_eq!(
            "3,1".parse::<AchievementSpec>().unwrap(),
            AchievementSpec::Exact(BTreeSet::from([1, 3]))
        );
        assert!("0,1".parse::<AchievementSpec>().is_err());
        assert!("x".parse::<AchievementSpec>().is_err());
        assert_eq!(AchievementSpec::Odd.support(6), vec![1, 3, 5]);
        assert_eq!(AchievementSpec::conflict_free().to_string(), "cf");
    }

    #[test]
    fn remove_colors_examples() {
        let l = ListAssignment::uniform(3, 4);
        let same = remove_colors(&l, &BTreeSet::new());
        assert_eq!(same.lists, l);
        assert_eq!(same.min_size, 4);

        let all = remove_colors(&l, &(1..=4).collect());
        assert_eq!(all.min_size, 0);
        assert!(all.lists.lists.iter().all(BTreeSet::is_empty));

        // lists of size c + 2k minus |Z| <= 2k keep at least c colors
        let (c, k) = (3usize, 2usize);
        let l = ListAssignment::uniform(5, c + 2 * k);
        let z: BTreeSet<Color> = [2, 5, 6, 7].into();
        assert!(remove_colors(&l, &z).min_size >= c);
    }

    #[test]
    fn random_lists_have_exact_size() {
        let mut rng = crate::graph::generators::rng(3);
        let l = ListAssignment::random(20, 4, 9, &mut rng);
        assert!(l.lists.iter().all(|x| x.len() == 4 && x.iter().all(|&c| (1..=9).contains(&c))));
    }

    #[test]
    fn json_shapes() {
        let c = Coloring::new(vec![1, 2, 1]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"colors":[1,2,1]}"#);
        let l = ListAssignment::new(vec![[1, 2].into(), [3].into()]);
        assert_eq!(serde_json::to_string(&l).unwrap(), r#"{"lists":[[1,2],[3]]}"#);
    }
}
