//! Every characterization of circle graphs evaluated on one graph.

use circlegraph::fixtures::bw3;
use circlegraph::recognize::characterization_report;

pub fn run_example() -> bool {
    let r = characterization_report(&bw3()).unwrap();
    println!("circle {}", r.circle);
    for c in &r.characterizations {
        println!(
            "{:>24}  applies {:5}  implies circle {:?}",
            c.name, c.applies, c.implies_circle
        );
    }
    r.consistent
}

fn main() {
    run_example();
}
