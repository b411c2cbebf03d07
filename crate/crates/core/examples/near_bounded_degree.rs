//! Graphs where few vertices have high degree: color those apart, then
//! the rest greedily on its square.
//!
//! ```bash
//! cargo run -p cfcolor --example near_bounded_degree
//! ```

use cfcolor::coloring::verify_conflict_free;
use cfcolor::graph::generators;
use cfcolor::structured::{color_near_bounded_degree, color_with_deletion, near_bounded_list_size, SquareGreedy};
use cfcolor::{AchievementSpec, ListAssignment, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two hubs on a long cycle.
    let mut g = generators::cycle(30);
    let mut extra = Vec::new();
    for v in (2..30).step_by(3) {
        extra.push((0, v));
        extra.push((1, (v + 1) % 30));
    }
    g = g.with_edges(&extra.into_iter().filter(|&(u, v)| u != v && !g.has_edge(u, v)).collect())?;
    println!("max degree {}", g.max_degree());

    let d = 4.0;
    let k = near_bounded_list_size(d);
    let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut generators::rng(2));
    let phi = color_near_bounded_degree(&g, &lists, d)?;
    verify_conflict_free(&g, &phi)?;
    println!("d={d}: lists of {k}, {} colors", phi.colors_used());

    // The same split with an explicit Y.
    let y = VertexSet::from_iter([0, 1]);
    let phi = color_with_deletion(&g, &lists, &y, &AchievementSpec::conflict_free(), &SquareGreedy)?;
    verify_conflict_free(&g, &phi)?;
    println!("Y={{0,1}}: hubs colored {} and {}", phi.colors[0], phi.colors[1]);

    match color_near_bounded_degree(&g, &lists, 1.0) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("d=1: {e}"),
    }
    Ok(())
}
