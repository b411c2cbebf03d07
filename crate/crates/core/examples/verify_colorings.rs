//! The verifiers: proper, conflict-free, closed, odd and general `S`.
//!
//! ```bash
//! cargo run -p cfcolor --example verify_colorings
//! ```

use cfcolor::coloring::{
    check_lists, find_witness, verify_conflict_free, verify_conflict_free_closed, verify_odd,
    verify_proper, verify_proper_s_achieved,
};
use cfcolor::graph::generators;
use cfcolor::{AchievementSpec, Coloring, ListAssignment};

fn main() {
    let c5 = generators::cycle(5);

    // Proper but not conflict-free: vertex 2 sees color 1 twice.
    let phi = Coloring::new(vec![1, 2, 3, 2, 3]);
    println!("proper: {:?}", verify_proper(&c5, &phi).is_ok());
    match verify_conflict_free(&c5, &phi) {
        Ok(_) => println!("conflict-free"),
        Err(e) => println!("not conflict-free: {e}"),
    }
    println!("odd: {:?}", verify_odd(&c5, &phi).is_ok());

    // Five colors always work on C5.
    let rainbow = Coloring::new(vec![1, 2, 3, 4, 5]);
    let witness = verify_conflict_free(&c5, &rainbow).expect("rainbow");
    println!("rainbow witnesses {witness:?}");

    // The closed variant counts the vertex itself.
    let k3 = generators::complete(3);
    let closed = Coloring::new(vec![1, 1, 2]);
    println!("closed cf on K3 with 1,1,2: {:?}", verify_conflict_free_closed(&k3, &closed).is_ok());

    // S = {1, 3}: some color appears once or three times.
    let s: AchievementSpec = "1,3".parse().expect("spec");
    let star = generators::star(4);
    let phi = Coloring::new(vec![1, 2, 2, 2]);
    println!("star, S={s}: {:?}", verify_proper_s_achieved(&star, &phi, &s, None).is_ok());
    println!("center witness {:?}", find_witness(&star, &phi, 0, &s, None));

    let lists = ListAssignment::new(vec![[1, 2].into(), [2].into(), [2, 5].into(), [2].into()]);
    println!("lists respected: {:?}", check_lists(&phi, &lists).is_ok());
}
