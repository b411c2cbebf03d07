//! Ordering plans from a tree-decomposition and a layering.
//!
//! ```bash
//! cargo run -p cfcolor --example layered_treewidth
//! ```

use cfcolor::coloring::{verify_conflict_free, verify_odd};
use cfcolor::decomp::{grid_column_decomposition, grid_row_layering, layered_width};
use cfcolor::graph::generators;
use cfcolor::ordering::color_by_plan;
use cfcolor::structured::build_layered_plan;
use cfcolor::ListAssignment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (r, c) = (5, 8);
    let g = generators::grid(r, c);
    for span in [2, 3] {
        let td = grid_column_decomposition(r, c, span);
        let lay = grid_row_layering(r, c);
        println!("span {span}: layered width {}", layered_width(&g, &td, &lay)?);

        let lp = build_layered_plan(&g, &td, &lay)?;
        let k = lp.guaranteed_list_size();
        println!("  w1={} w2={} guaranteed list size {k}", lp.widths.w1, lp.widths.w2);

        let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut generators::rng(span as u64));
        let out = color_by_plan(&g, &lp.plan, &lists, false)?;
        verify_conflict_free(&g, &out.coloring)?;
        verify_odd(&g, &out.coloring)?;
        println!("  {} colors, at most {} forbidden at once", out.coloring.colors_used(), out.max_forbidden);
    }
    Ok(())
}
