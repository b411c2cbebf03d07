//! Building graphs and taking minors, subdivisions and products.
//!
//! ```bash
//! cargo run -p cfcolor --example graph_operations
//! ```

use cfcolor::graph::io::{parse_edge_list, write_edge_list};
use cfcolor::graph::{
    contract_edge, degeneracy_ordering, generators, odd_contract, one_subdivision, strong_product,
};
use cfcolor::{Graph, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    println!("{} vertices, {} edges, max degree {}", g.vertex_count(), g.edge_count(), g.max_degree());

    // Text round trip.
    let text = write_edge_list(&g);
    print!("{text}");
    assert_eq!(parse_edge_list(&text)?, g);

    let c = contract_edge(&g, 0, 1)?;
    println!("contract 0-1: {} vertices, {} edges, merged into {}", c.graph.vertex_count(), c.graph.edge_count(), c.merged);

    // Odd contraction collapses the components of the crossing edges.
    let side: VertexSet = [0, 1].into_iter().collect();
    let oc = odd_contract(&g, &side)?;
    println!("odd contraction on {{0,1}}: {} vertices, remap {:?}", oc.graph.vertex_count(), oc.remap);

    let s = one_subdivision(&generators::complete(4));
    println!("1-subdivision of K4: {} vertices, {} branch", s.graph.vertex_count(), s.branch_count);
    for (edge, path) in s.paths.iter().take(2) {
        println!("  {edge:?} -> {path:?}");
    }

    let p = strong_product(&generators::path(3), &generators::cycle(4));
    println!("P3 x C4: {} vertices, {} edges", p.graph.vertex_count(), p.graph.edge_count());

    let petersen = generators::petersen();
    let d = degeneracy_ordering(&petersen);
    println!("petersen degeneracy {} order {:?}", d.degeneracy, d.order);
    println!("petersen square has {} edges", petersen.square().edge_count());
    Ok(())
}
