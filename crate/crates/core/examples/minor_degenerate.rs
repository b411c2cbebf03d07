//! List coloring graphs whose minors are all degenerate: trees, outerplanar
//! and planar graphs, with some edges exempt from the witness condition.
//!
//! ```bash
//! cargo run -p cfcolor --example minor_degenerate
//! ```

use cfcolor::coloring::{respects_lists, verify_conflict_free, verify_proper_s_achieved};
use cfcolor::graph::generators;
use cfcolor::structured::{color_minor_degenerate, surface_profile, MinorColorRequest};
use cfcolor::{AchievementSpec, DegeneracyProfile, EdgeSet, ListAssignment};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = generators::rng(1);

    let tree = generators::random_tree(40, 1);
    let lists = ListAssignment::random(40, 3, 6, &mut rng);
    let out = color_minor_degenerate(&MinorColorRequest::new(tree.clone(), lists.clone(), DegeneracyProfile::degenerate(1.0)))?;
    verify_conflict_free(&tree, &out.coloring)?;
    assert!(respects_lists(&out.coloring, &lists));
    println!("tree: {} colors, {} contractions", out.coloring.colors_used(), out.contractions);

    let op = generators::random_maximal_outerplanar(30, 2);
    let profile = DegeneracyProfile::degenerate(2.0);
    let lists = ListAssignment::random(30, profile.required_list_size(), 10, &mut rng);
    let mut req = MinorColorRequest::new(op.clone(), lists, profile);
    // Every third edge need not help its endpoints.
    req.deleted = op.edges().step_by(3).collect::<EdgeSet>();
    let out = color_minor_degenerate(&req)?;
    verify_proper_s_achieved(&op, &out.coloring, &AchievementSpec::conflict_free(), Some(&req.deleted))?;
    println!("outerplanar with {} exempt edges: {} colors", req.deleted.len(), out.coloring.colors_used());

    let sp = surface_profile(0);
    let planar = generators::random_planar_triangulation(50, 3);
    let lists = ListAssignment::random(50, sp.list_size, 2 * sp.list_size, &mut rng);
    let out = color_minor_degenerate(&MinorColorRequest::new(planar.clone(), lists, sp.profile))?;
    verify_conflict_free(&planar, &out.coloring)?;
    println!("planar with {}-lists: {} colors", sp.list_size, out.coloring.colors_used());
    Ok(())
}
