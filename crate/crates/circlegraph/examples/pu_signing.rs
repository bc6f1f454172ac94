//! Principally unimodular signings and t-regularity.

use circlegraph::fixtures::pu_b;
use circlegraph::graphs::LoopedGraph;
use circlegraph::pu::{is_pu, is_t_regular_graph, pu_sign, transversal_determinants_unimodular};

pub fn run_example() -> bool {
    let k5 = pu_sign(&LoopedGraph::complete(5).adjacency())
        .unwrap()
        .expect("K5 is signable");
    println!("K5 signing is PU: {}", is_pu(k5.matrix()).unwrap());
    let b = pu_b();
    let a = b.submatrix(&[0, 1, 2, 3], &[4, 5, 6, 7]);
    println!(
        "(I | A) fixture: transversal determinants unimodular {}",
        transversal_determinants_unimodular(&a).unwrap()
    );
    let w5 = is_t_regular_graph(&LoopedGraph::wheel(5)).unwrap();
    println!(
        "W5 t-regular {} (failing section {:?})",
        w5.regular,
        w5.witness.map(|t| t.to_string())
    );
    w5.regular
}

fn main() {
    run_example();
}
