//! Exact parameters of small graphs and choosability counterexamples.
//!
//! ```bash
//! cargo run -p cfcolor --example exact_oracle
//! ```

use cfcolor::exact::{
    exact_chromatic, exact_relations_check, refute_choosability, ChoosabilityConfig,
    ChoosabilityResult, ExactConfig, ExactKind,
};
use cfcolor::graph::generators;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExactConfig { jobs: 4, ..Default::default() };
    for (name, g) in [("C5", generators::cycle(5)), ("K4", generators::complete(4)), ("petersen", generators::petersen())] {
        let r = exact_relations_check(&g, &cfg)?;
        println!(
            "{name}: chi={} pcf={} pcfc={} icf={} icfc={} relations hold: {}",
            r.chi,
            r.pcf,
            r.pcfc,
            r.icf,
            r.icfc,
            r.holds()
        );
    }

    let r = exact_chromatic(&generators::cycle(5), &ExactKind::Odd, &cfg)?;
    println!("odd chromatic number of C5 is {}, witness {:?}", r.value, r.witness.colors);

    // pcf(C5) = 5, so the search finds a failing 4-list assignment.
    let c5 = generators::cycle(5);
    let search = ChoosabilityConfig { universe: Some(4), ..Default::default() };
    match refute_choosability(&c5, 4, &ExactKind::Pcf, &search)? {
        ChoosabilityResult::Counterexample(lists) => println!("C5 is not 4-choosable: {lists:?}"),
        ChoosabilityResult::Inconclusive { examined, exhausted } => {
            println!("no counterexample in {examined} assignments (exhausted: {exhausted})")
        }
    }
    Ok(())
}
