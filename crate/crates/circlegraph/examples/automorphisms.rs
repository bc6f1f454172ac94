//! Automorphism groups of isotropic matroids.

use circlegraph::fixtures::w7;
use circlegraph::isotropic::ias_matroid;

pub fn run_example() -> u128 {
    let n = ias_matroid(&w7())
        .unwrap()
        .matroid()
        .automorphism_count()
        .unwrap();
    println!("|Aut M[IAS(W7)]| = {n}");
    n
}

fn main() {
    run_example();
}
