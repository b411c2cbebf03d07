//! Extendable colorers: gluing two along a clique, then folding a whole
//! tree-decomposition.
//!
//! ```bash
//! cargo run -p cfcolor --example clique_sum_fold
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use cfcolor::cliquesum::{
    adapt_colorability, combine_extendable, extendability_audit, fold_tree_decomposition, Anchor,
    AuditConfig, CliqueSumSpec, ExtendRequest, ExtendableColorer,
};
use cfcolor::coloring::verify_proper_s_achieved;
use cfcolor::decomp::random_decomposed_graph;
use cfcolor::exact::BruteExtendable;
use cfcolor::graph::generators;
use cfcolor::structured::ExactListColorer;
use cfcolor::{AchievementSpec, ListAssignment, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cf = AchievementSpec::conflict_free();

    // Two triangles sharing the edge {0, 1}.
    let left = generators::complete(3);
    let right = generators::path(3).with_edges(&[(0, 1), (0, 2)].into_iter().collect())?;
    let side = |g: &cfcolor::Graph| -> Result<Box<dyn ExtendableColorer>, Box<dyn std::error::Error>> {
        let frame = vec![VertexSet::from_iter([0, 1])];
        Ok(Box::new(BruteExtendable::new(g.clone(), frame, ListAssignment::uniform(3, 6), 2, cf.clone())?))
    };
    let spec = CliqueSumSpec {
        left: left.clone(),
        right: right.clone(),
        q_left: vec![0, 1],
        q_right: vec![0, 1],
        dropped: vec![(0, 1)],
    };
    let glued = combine_extendable(side(&left)?, side(&right)?, &spec)?;
    println!("sum: {} vertices, {} edges", glued.graph().vertex_count(), glued.graph().edge_count());

    // Precolor vertex 0 with 2 and keep color 5 unique around it.
    let mut anchors = BTreeMap::new();
    anchors.insert(0, Anchor { color: 2, forbidden: Some(5), achieve: false });
    let ext = glued.extend(&ExtendRequest { anchors, deleted: Default::default() })?;
    println!("extension {:?}", ext.coloring.colors);

    let report = extendability_audit(&glued, &AuditConfig::default());
    println!("audit: {} requests, exhaustive {}, passed {}", report.checked, report.exhaustive, report.passed());

    // A random graph with a width-3, adhesion-1 decomposition.
    let (g, td) = random_decomposed_graph(5, 4, 1, 0.6, 17);
    let k = 4 + 2 * td.adhesion();
    let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut generators::rng(17));
    let folded = fold_tree_decomposition(&g, &td, &lists, |ts| {
        let c = adapt_colorability(ts.graph.clone(), ts.frame.clone(), ts.lists.clone(), ts.adhesion, cf.clone(), Arc::new(ExactListColorer::default()))?;
        Ok(Box::new(c) as Box<dyn ExtendableColorer>)
    })?;
    let phi = folded.color()?;
    verify_proper_s_achieved(&g, &phi, &cf, None)?;
    println!(
        "fold over {} bags: {} vertices, {} fill edges, {} colors",
        td.node_count(),
        g.vertex_count(),
        folded.fill_edge_count(),
        phi.colors_used()
    );
    let report = extendability_audit(&folded, &AuditConfig { samples: 100, exhaustive_max_vertices: 0, ..Default::default() });
    println!("folded audit: {} sampled requests, passed {}", report.checked, report.passed());
    Ok(())
}
