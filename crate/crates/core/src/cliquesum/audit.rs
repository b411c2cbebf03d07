//! Checking a colorer against the extendability definition on many requests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{check_extension, compatible_edges, Anchor, ExtendRequest, ExtendableColorer};
use crate::coloring::Color;
use crate::graph::{generators, EdgeSet, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub seed: u64,
    /// Graphs up to this size are audited exhaustively; larger ones are sampled.
    pub exhaustive_max_vertices: usize,
    /// Largest clique `W` tried (also capped by the colorer's threshold).
    pub max_clique: usize,
    /// Above `2^edges` of this many compatible-edge subsets, `H` is sampled.
    pub max_h_subsets: usize,
    /// Precoloring/forbidden-color combinations tried per `(W, H, g)` when
    /// lists are not uniform.
    pub combos: usize,
    /// Requests drawn in sampled mode.
    pub samples: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            exhaustive_max_vertices: 10,
            max_clique: 2,
            max_h_subsets: 16,
            combos: 24,
            samples: 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditFailure {
    pub request: ExtendRequest,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub checked: usize,
    /// Every request shape was enumerated, with colors taken up to symmetry.
    pub exhaustive: bool,
    pub failure: Option<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn cliques(g: &Graph, max: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, max: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        let start = cur.last().map_or(0, |&v| v + 1);
        for v in start..g.vertex_count() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                grow(g, max, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, max, &mut Vec::new(), &mut out);
    out
}

/// Forbidden-color tuples for precolor `1..=w` up to relabeling the other colors.
fn canonical_forbidden(w: usize, k: usize) -> Vec<Vec<Option<Color>>> {
    fn go(w: usize, k: usize, next: usize, cur: &mut Vec<Option<Color>>, out: &mut Vec<Vec<Option<Color>>>) {
        if cur.len() == w {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        go(w, k, next, cur, out);
        cur.pop();
        for c in 1..=next.min(k) {
            cur.push(Some(c as Color));
            go(w, k, if c == next { next + 1 } else { next }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, k, w + 1, &mut Vec::new(), &mut out);
    out
}

struct Runner<'a> {
    c: &'a dyn ExtendableColorer,
    checked: usize,
    failure: Option<AuditFailure>,
}

impl Runner<'_> {
    fn run(&mut self, req: ExtendRequest) -> bool {
        self.checked += 1;
        let reason = match self.c.extend(&req) {
            Ok(ext) => check_extension(self.c, &req, &ext).err(),
            Err(e) => Some(e.to_string()),
        };
        if let Some(reason) = reason {
            self.failure = Some(AuditFailure { request: req, reason });
            return false;
        }
        true
    }
}

fn random_anchors<R: Rng>(c: &dyn ExtendableColorer, w: &[Vertex], modes: &[bool], rng: &mut R, palette: &[Color]) -> Option<Vec<(Vertex, Anchor)>> {
    let mut used = Vec::new();
    let mut out = Vec::new();
    for (&v, &achieve) in w.iter().zip(modes) {
        let free: Vec<Color> = c.lists().list(v).iter().copied().filter(|x| !used.contains(x)).collect();
        let color = *free.choose(rng)?;
        used.push(color);
        let forbidden = if rng.gen_bool(0.2) { None } else { palette.choose(rng).copied() };
        out.push((v, Anchor { color, forbidden, achieve }));
    }
    Some(out)
}

/// Re-verifies the colorer on a family of requests and reports the first failure.
///
/// Up to `exhaustive_max_vertices` vertices every clique `W` (up to
/// `max_clique`), every mode function `g` and every compatible `H` (while
/// there are at most `max_h_subsets` of them) is tried. With uniform lists
/// `1..=k` the precoloring is fixed to `1..=|W|` and forbidden colors range
/// over all tuples up to relabeling; otherwise `combos` random precolorings
/// and forbidden colors are drawn. Larger graphs get `samples` random requests.
pub fn extendability_audit(c: &dyn ExtendableColorer, cfg: &AuditConfig) -> AuditReport {
    let g = c.graph();
    let n = g.vertex_count();
    let mut rng: ChaCha8Rng = generators::rng(cfg.seed);
    let compat: Vec<(Vertex, Vertex)> = compatible_edges(g, c.frame()).iter().collect();
    let palette: Vec<Color> = c.lists().palette().into_iter().collect();
    let kmax = cfg.max_clique.min(c.threshold());
    let mut runner = Runner {
        c,
        checked: 0,
        failure: None,
    };
    let mut exhaustive = n <= cfg.exhaustive_max_vertices;

    if !exhaustive {
        let all = cliques(g, kmax);
        for _ in 0..cfg.samples {
            let w = all.choose(&mut rng).expect("the empty clique");
            let modes: Vec<bool> = w.iter().map(|_| rng.gen_bool(0.5)).collect();
            let Some(anchors) = random_anchors(c, w, &modes, &mut rng, &palette) else {
                continue;
            };
            let deleted: EdgeSet = compat.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if !runner.run(ExtendRequest { anchors: anchors.into_iter().collect(), deleted }) {
                break;
            }
        }
        return AuditReport {
            checked: runner.checked,
            exhaustive: false,
            failure: runner.failure,
        };
    }

    let h_options: Vec<EdgeSet> = if compat.len() < usize::BITS as usize && (1usize << compat.len()) <= cfg.max_h_subsets {
        (0..1usize << compat.len())
            .map(|mask| compat.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect())
            .collect()
    } else {
        exhaustive = false;
        let mut opts = vec![EdgeSet::new(), compat.iter().copied().collect()];
        while opts.len() < cfg.max_h_subsets {
            opts.push(compat.iter().copied().filter(|_| rng.gen_bool(0.5)).collect());
        }
        opts
    };
    let uniform_k = c.lists().is_uniform().then(|| c.lists().min_size()).filter(|&k| {
        c.lists().lists.iter().all(|l| l.iter().copied().eq(1..=k as Color))
    });
    if uniform_k.is_none() {
        exhaustive = false;
    }

    'outer: for w in cliques(g, kmax) {
        for mask in 0..1usize << w.len() {
            let modes: Vec<bool> = (0..w.len()).map(|i| mask >> i & 1 == 1).collect();
            for h in &h_options {
                let mut batch: Vec<Vec<(Vertex, Anchor)>> = Vec::new();
                match uniform_k {
                    Some(k) if k >= w.len() => {
                        for f in canonical_forbidden(w.len(), k) {
                            batch.push(
                                w.iter()
                                    .zip(&modes)
                                    .zip(f)
                                    .enumerate()
                                    .map(|(i, ((&v, &achieve), forbidden))| {
                                        (v, Anchor { color: i as Color + 1, forbidden, achieve })
                                    })
                                    .collect(),
                            );
                        }
                    }
                    Some(_) => {}
                    None => {
                        for _ in 0..cfg.combos {
                            if let Some(a) = random_anchors(c, &w, &modes, &mut rng, &palette) {
                                batch.push(a);
                            }
                        }
                    }
                }
                for anchors in batch {
                    let req = ExtendRequest {
                        anchors: anchors.into_iter().collect(),
                        deleted: h.clone(),
                    };
                    if !runner.run(req) {
                        break 'outer;
                    }
                }
            }
        }
    }
    AuditReport {
        checked: runner.checked,
        exhaustive,
        failure: runner.failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquesum::{CliqueSumError, Extension};
    use crate::coloring::{AchievementSpec, ListAssignment};
    use crate::exact::BruteExtendable;
    use crate::graph::VertexSet;

    #[test]
    fn canonical_tuples() {
        // W = {a}: None, 1, 2
        assert_eq!(canonical_forbidden(1, 5).len(), 3);
        // W = {a, b}: f(a) ∈ {None, 1, 2} gives 4 choices for f(b), f(a) = 3 gives 5
        assert_eq!(canonical_forbidden(2, 5).len(), 17);
        assert_eq!(canonical_forbidden(2, 3).len(), 16);
    }

    #[test]
    fn clique_enumeration() {
        let g = generators::complete(4);
        assert_eq!(cliques(&g, 2).len(), 1 + 4 + 6);
        assert_eq!(cliques(&g, 4).len(), 16);
    }

    #[test]
    fn edgeless_graph_passes() {
        let c = BruteExtendable::new(Graph::empty(4), vec![], ListAssignment::uniform(4, 1), 1, AchievementSpec::conflict_free()).unwrap();
        let r = extendability_audit(&c, &AuditConfig::default());
        assert!(r.passed() && r.exhaustive);
        assert_eq!(r.checked, 1 + 4 * 2 * 2);
    }

    /// Drops every forbidden color before delegating.
    struct IgnoresForbidden(BruteExtendable);

    impl ExtendableColorer for IgnoresForbidden {
        fn graph(&self) -> &Graph {
            self.0.graph()
        }
        fn frame(&self) -> &[VertexSet] {
            self.0.frame()
        }
        fn lists(&self) -> &ListAssignment {
            self.0.lists()
        }
        fn threshold(&self) -> usize {
            self.0.threshold()
        }
        fn spec(&self) -> &AchievementSpec {
            self.0.spec()
        }
        fn extend(&self, req: &ExtendRequest) -> Result<Extension, CliqueSumError> {
            let mut r = req.clone();
            for a in r.anchors.values_mut() {
                a.forbidden = None;
            }
            self.0.extend(&r)
        }
    }

    #[test]
    fn broken_colorer_is_caught() {
        let g = generators::star(4);
        let inner = BruteExtendable::new(g, vec![], ListAssignment::uniform(4, 4), 1, AchievementSpec::conflict_free()).unwrap();
        let r = extendability_audit(&IgnoresForbidden(inner), &AuditConfig::default());
        let failure = r.failure.expect("counterexample");
        assert!(failure.reason.contains("forbidden"), "{}", failure.reason);
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let g = generators::random_gnp(7, 0.4, 1);
        let c = BruteExtendable::new(g, vec![], ListAssignment::random(7, 11, 14, &mut generators::rng(0)), 2, AchievementSpec::odd()).unwrap();
        let cfg = AuditConfig { exhaustive_max_vertices: 5, samples: 50, ..Default::default() };
        let a = extendability_audit(&c, &cfg);
        let b = extendability_audit(&c, &cfg);
        assert!(a.passed() && !a.exhaustive);
        assert_eq!(a, b);
    }
}
