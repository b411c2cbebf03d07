//! Finding a highly chromatic piece inside a partial subdivision.
//!
//! ```bash
//! cargo run -p cfcolor --example subdivision_witness
//! ```

use std::collections::BTreeMap;

use cfcolor::exact::{exact_chromatic, ExactConfig, ExactKind};
use cfcolor::graph::{generators, subdivide};
use cfcolor::structured::{extract_subdivision_witness, SubdivisionWitness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExactConfig::default();
    // chi(K5) = 5 = (k - 1)^2 + 1 for k = 3.
    let h = generators::complete(5);
    let k = 3;

    for (label, subdivided) in [("all edges", h.edges().collect::<Vec<_>>()), ("a star", (1..5).map(|v| (0, v)).collect())] {
        let times: BTreeMap<_, _> = subdivided.into_iter().map(|e| (e, 1)).collect();
        let sub = subdivide(&h, &times, 0)?;
        match extract_subdivision_witness(&sub, &h, k, &cfg)? {
            SubdivisionWitness::Chromatic { vertices, chromatic } => {
                println!("{label} subdivided: unsubdivided part {vertices:?} has chi {chromatic}")
            }
            SubdivisionWitness::OneSubdivision { vertices, branch_vertices, chromatic } => println!(
                "{label} subdivided: 1-subdivision on {} vertices over branches {branch_vertices:?} (chi {chromatic})",
                vertices.len()
            ),
        }
    }

    // 1-subdivisions have large pcf even though they are bipartite.
    let s = cfcolor::graph::one_subdivision(&generators::complete(4));
    let pcf = exact_chromatic(&s.graph, &ExactKind::Pcf, &ExactConfig { max_vertices: 16, ..cfg })?;
    println!("pcf of the 1-subdivision of K4 is {}", pcf.value);
    Ok(())
}
