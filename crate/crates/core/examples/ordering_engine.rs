//! The ordering-plan colorer on its own: an order plus sets `S_i`.
//!
//! ```bash
//! cargo run -p cfcolor --example ordering_engine
//! ```

use cfcolor::coloring::verify_conflict_free;
use cfcolor::graph::{degeneracy_ordering, generators};
use cfcolor::ordering::{color_by_plan, minimal_plan, random_plan, validate_plan};
use cfcolor::ListAssignment;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = generators::random_gnp(20, 0.25, 5);

    // The smallest plan for a degeneracy order.
    let order = degeneracy_ordering(&g).order;
    let plan = minimal_plan(&g, &order)?;
    let widths = validate_plan(&g, &plan)?;
    println!("minimal plan: w1={} w2={} lists of {}", widths.w1, widths.w2, widths.list_size());

    let k = widths.list_size();
    let lists = ListAssignment::random(20, k, 3 * k, &mut generators::rng(5));
    let out = color_by_plan(&g, &plan, &lists, true)?;
    verify_conflict_free(&g, &out.coloring)?;
    println!("colored with {} colors; witnesses {:?}", out.coloring.colors_used(), out.witness);

    // Padding the sets only raises the widths.
    let padded = random_plan(&g, 2, &mut generators::rng(6));
    let w = validate_plan(&g, &padded)?;
    println!("padded plan: w1={} w2={}", w.w1, w.w2);

    let mut broken = plan.clone();
    broken.order.swap(0, 1);
    broken.order.push(0);
    println!("broken plan: {}", validate_plan(&g, &broken).unwrap_err());
    Ok(())
}
