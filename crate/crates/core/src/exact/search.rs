//! The backtracking core shared by every exact search.
//!
//! Vertices are visited in a maximum-cardinality order so neighbourhoods close
//! early. Pruning is limited to properness and to "doomed" vertices: a
//! required vertex whose achievement neighbourhood is fully colored without
//! any color of multiplicity in `S`.

use crate::coloring::{AchievementSpec, Color};
use crate::graph::{EdgeSet, Graph, Vertex};

pub(crate) struct Problem<'a> {
    pub g: &'a Graph,
    pub proper: bool,
    /// `None` disables the achievement requirement altogether.
    pub spec: Option<&'a AchievementSpec>,
    pub closed: bool,
    /// Edges ignored for achievement (never for properness).
    pub deleted: Option<&'a EdgeSet>,
    /// Allowed colors per vertex, ascending.
    pub domains: Vec<Vec<Color>>,
    /// Vertices whose achievement is not demanded.
    pub exempt: Vec<bool>,
    /// All domains equal `1..=k` and nothing else breaks color symmetry:
    /// only canonical (first-use ordered) colorings are enumerated.
    pub canonical: bool,
}

pub(crate) struct Outcome {
    pub coloring: Option<Vec<Color>>,
    pub nodes: u64,
}

struct State<'p, 'a> {
    p: &'p Problem<'a>,
    order: Vec<Vertex>,
    palette: Vec<Color>,
    dom_idx: Vec<Vec<usize>>,
    ach: Vec<Vec<Vertex>>,
    watchers: Vec<Vec<Vertex>>,
    remaining: Vec<usize>,
    counts: Vec<u16>,
    color: Vec<Option<usize>>,
    nodes: u64,
}

fn mcs_order(p: &Problem<'_>) -> Vec<Vertex> {
    let g = p.g;
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                let key = |v: Vertex| (p.domains[v].len() == 1, weight[v], g.degree(v));
                key(a).cmp(&key(b)).then(b.cmp(&a))
            })
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    order
}

impl<'p, 'a> State<'p, 'a> {
    fn new(p: &'p Problem<'a>) -> Self {
        let g = p.g;
        let n = g.vertex_count();
        let mut palette: Vec<Color> = p.domains.iter().flatten().copied().collect();
        palette.sort_unstable();
        palette.dedup();
        let dom_idx = p
            .domains
            .iter()
            .map(|d| d.iter().map(|c| palette.binary_search(c).expect("in palette")).collect())
            .collect();
        let mut ach = vec![Vec::new(); n];
        let mut watchers = vec![Vec::new(); n];
        if p.spec.is_some() {
            for v in 0..n {
                let mut nb: Vec<Vertex> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| p.deleted.is_none_or(|h| !h.contains(u, v)))
                    .collect();
                if p.closed {
                    nb.push(v);
                }
                if p.exempt[v] {
                    nb.clear();
                }
                for &u in &nb {
                    watchers[u].push(v);
                }
                ach[v] = nb;
            }
        }
        let remaining = ach.iter().map(Vec::len).collect();
        Self {
            p,
            order: mcs_order(p),
            counts: vec![0; n * palette.len().max(1)],
            palette,
            dom_idx,
            ach,
            watchers,
            remaining,
            color: vec![None; n],
            nodes: 0,
        }
    }

    fn achieved(&self, v: Vertex) -> bool {
        let spec = self.p.spec.expect("achievement enabled");
        let width = self.palette.len();
        self.ach[v].iter().any(|&u| {
            let c = self.color[u].expect("closed neighbourhood");
            spec.contains(self.counts[v * width + c] as usize)
        })
    }

    /// Assigns and reports whether no watcher became doomed; always leaves the
    /// counters updated so [`State::unassign`] can undo.
    fn assign(&mut self, u: Vertex, c: usize) -> bool {
        self.color[u] = Some(c);
        let width = self.palette.len();
        let mut ok = true;
        for i in 0..self.watchers[u].len() {
            let v = self.watchers[u][i];
            self.counts[v * width + c] += 1;
            self.remaining[v] -= 1;
            if self.remaining[v] == 0 && !self.achieved(v) {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, u: Vertex, c: usize) {
        let width = self.palette.len();
        for i in 0..self.watchers[u].len() {
            let v = self.watchers[u][i];
            self.counts[v * width + c] -= 1;
            self.remaining[v] += 1;
        }
        self.color[u] = None;
    }

    fn dfs(&mut self, depth: usize, max_used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for k in 0..self.dom_idx[u].len() {
            let c = self.dom_idx[u][k];
            if self.p.canonical && c > max_used {
                break;
            }
            if self.p.proper && self.p.g.neighbors(u).iter().any(|&y| self.color[y] == Some(c)) {
                continue;
            }
            self.nodes += 1;
            let ok = self.assign(u, c);
            if ok && self.dfs(depth + 1, max_used.max(c + 1)) {
                return true;
            }
            self.unassign(u, c);
        }
        false
    }
}

pub(crate) fn solve(p: &Problem<'_>) -> Outcome {
    let n = p.g.vertex_count();
    debug_assert_eq!(p.domains.len(), n);
    debug_assert_eq!(p.exempt.len(), n);
    if p.domains.iter().any(Vec::is_empty) {
        return Outcome {
            coloring: None,
            nodes: 0,
        };
    }
    let mut st = State::new(p);
    let found = st.dfs(0, 0);
    let coloring = found.then(|| {
        st.color
            .iter()
            .map(|c| st.palette[c.expect("complete")])
            .collect()
    });
    Outcome {
        coloring,
        nodes: st.nodes,
    }
}
