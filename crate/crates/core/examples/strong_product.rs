//! Coloring a strong product `H ⊠ P` from a tree-decomposition of `H`.
//!
//! ```bash
//! cargo run -p cfcolor --example strong_product
//! ```

use cfcolor::coloring::verify_conflict_free;
use cfcolor::decomp::{forest_decomposition, path_decomposition};
use cfcolor::graph::generators;
use cfcolor::ordering::color_by_plan;
use cfcolor::structured::build_product_plan;
use cfcolor::ListAssignment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("P4 x P6", generators::path(4), path_decomposition(4), generators::path(6)),
        ("T10 x C5", generators::random_tree(10, 4), forest_decomposition(&generators::random_tree(10, 4))?, generators::cycle(5)),
    ];
    for (name, h, td, p) in cases {
        let pp = build_product_plan(&h, &td, &p)?;
        let g = &pp.product.graph;
        let k = pp.guaranteed_list_size();
        let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut generators::rng(9));
        let out = color_by_plan(g, &pp.plan, &lists, false)?;
        verify_conflict_free(g, &out.coloring)?;
        println!(
            "{name}: {} vertices, w={} d={}, lists of {k}, {} colors used",
            g.vertex_count(),
            pp.w,
            pp.d,
            out.coloring.colors_used()
        );
    }
    Ok(())
}
