//! Exhaustive extendable coloring: the ground truth the audits compare against.

use super::{solve, ExactError, Problem};
use crate::cliquesum::{
    extendability_audit, validate_request, AuditConfig, AuditReport, CliqueSumError,
    ExtendRequest, ExtendableColorer, Extension,
};
use crate::coloring::{find_witness, AchievementSpec, Coloring, ListAssignment, WitnessMap};
use crate::graph::{Graph, VertexSet};

/// Answers every request by backtracking search. Fails with
/// [`CliqueSumError::NoExtension`] exactly when no valid extension exists.
#[derive(Debug, Clone)]
pub struct BruteExtendable {
    graph: Graph,
    frame: Vec<VertexSet>,
    lists: ListAssignment,
    threshold: usize,
    spec: AchievementSpec,
}

impl BruteExtendable {
    pub const DEFAULT_CAP: usize = 7;

    pub fn new(
        graph: Graph,
        frame: Vec<VertexSet>,
        lists: ListAssignment,
        threshold: usize,
        spec: AchievementSpec,
    ) -> Result<Self, CliqueSumError> {
        Self::with_cap(graph, frame, lists, threshold, spec, Self::DEFAULT_CAP)
    }

    pub fn with_cap(
        graph: Graph,
        frame: Vec<VertexSet>,
        lists: ListAssignment,
        threshold: usize,
        spec: AchievementSpec,
        cap: usize,
    ) -> Result<Self, CliqueSumError> {
        let n = graph.vertex_count();
        if n > cap {
            return Err(ExactError::InstanceTooLarge { n, cap }.into());
        }
        if lists.len() != n {
            return Err(ExactError::ListCount {
                expected: n,
                got: lists.len(),
            }
            .into());
        }
        Ok(Self {
            graph,
            frame,
            lists,
            threshold,
            spec,
        })
    }

    /// Audits this colorer; a failure is a request with no extension at all,
    /// i.e. a certificate that the graph is not extendable.
    pub fn certify(&self, cfg: &AuditConfig) -> AuditReport {
        extendability_audit(self, cfg)
    }
}

impl ExtendableColorer for BruteExtendable {
    fn graph(&self) -> &Graph {
        &self.graph
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
        let g = &self.graph;
        let mut domains: Vec<Vec<_>> = self
            .lists
            .lists
            .iter()
            .map(|l| l.iter().copied().collect())
            .collect();
        let mut exempt = vec![false; g.vertex_count()];
        for (&w, a) in &req.anchors {
            domains[w] = vec![a.color];
            if !a.achieve {
                exempt[w] = true;
                if let Some(f) = a.forbidden {
                    for &u in g.neighbors(w) {
                        if !req.anchors.contains_key(&u) {
                            domains[u].retain(|&c| c != f);
                        }
                    }
                }
            }
        }
        let p = Problem {
            g,
            proper: true,
            spec: Some(&self.spec),
            closed: false,
            deleted: Some(&req.deleted),
            domains,
            exempt,
            canonical: false,
        };
        let colors = solve(&p)
            .coloring
            .ok_or_else(|| CliqueSumError::NoExtension(Box::new(req.clone())))?;
        let coloring = Coloring::new(colors);
        let mut witness = WitnessMap::empty(g.vertex_count());
        for v in g.vertices().filter(|&v| req.requires_witness(v)) {
            witness.set(v, find_witness(g, &coloring, v, &self.spec, Some(&req.deleted)));
        }
        Ok(Extension { coloring, witness })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquesum::Anchor;
    use crate::graph::generators;

    fn anchor(color: u32, forbidden: Option<u32>, achieve: bool) -> Anchor {
        Anchor {
            color,
            forbidden,
            achieve,
        }
    }

    #[test]
    fn edgeless_always_extends() {
        let c = BruteExtendable::new(Graph::empty(3), vec![], ListAssignment::uniform(3, 1), 1, AchievementSpec::conflict_free()).unwrap();
        let mut req = ExtendRequest::default();
        req.anchors.insert(1, anchor(1, Some(1), false));
        assert_eq!(c.extend(&req).unwrap().coloring.colors, vec![1, 1, 1]);
    }

    #[test]
    fn triangle_with_hostile_forbidden_color() {
        // K_3 on lists {1,2,3}: φ(0) = 1 and f(0) = 2 force the other two
        // vertices onto {2,3} minus 2, impossible for a proper coloring
        let c = BruteExtendable::new(generators::complete(3), vec![], ListAssignment::uniform(3, 3), 1, AchievementSpec::conflict_free()).unwrap();
        let mut req = ExtendRequest::default();
        req.anchors.insert(0, anchor(1, Some(2), false));
        assert!(matches!(c.extend(&req), Err(CliqueSumError::NoExtension(_))));
        // with g(0) = 1 the forbidden color is ignored
        req.anchors.insert(0, anchor(1, Some(2), true));
        assert_eq!(c.extend(&req).unwrap().coloring.colors, vec![1, 2, 3]);
        // a fourth color makes the hostile request solvable
        let c = BruteExtendable::new(generators::complete(3), vec![], ListAssignment::uniform(3, 4), 1, AchievementSpec::conflict_free()).unwrap();
        req.anchors.insert(0, anchor(1, Some(2), false));
        assert_eq!(c.extend(&req).unwrap().coloring.colors, vec![1, 3, 4]);
    }

    #[test]
    fn cap() {
        assert!(matches!(
            BruteExtendable::new(Graph::empty(8), vec![], ListAssignment::uniform(8, 1), 0, AchievementSpec::conflict_free()),
            Err(CliqueSumError::Exact(ExactError::InstanceTooLarge { n: 8, cap: 7 }))
        ));
    }

    #[test]
    fn rainbow_sized_lists_certify() {
        for seed in 0..10 {
            let g = generators::random_gnp(5, 0.5, seed);
            let frame = vec![[0, 1].into_iter().collect()];
            let c = BruteExtendable::new(g, frame, ListAssignment::uniform(5, 5 + 4), 2, AchievementSpec::conflict_free()).unwrap();
            let r = c.certify(&AuditConfig::default());
            assert!(r.passed() && r.exhaustive, "{r:?}");
        }
    }
}
