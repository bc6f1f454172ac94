//! The isotropic matroid of a wheel and its transverse circuits.

use circlegraph::fixtures::{w7, w7_special_transversal};
use circlegraph::isotropic::ias_matroid;

pub fn run_example() -> usize {
    let p = ias_matroid(&w7()).unwrap();
    let small = p.transverse_circuits(4);
    println!("W7: {} transverse circuits of size at most 4", small.len());
    let t = w7_special_transversal();
    let m = p.transverse_matroid(&t).unwrap();
    let circuits = m.circuits().unwrap();
    for c in &circuits {
        let labels: Vec<&str> = c.iter().map(|&e| m.label(e)).collect();
        println!("circuit of {t}: {}", labels.join(" "));
    }
    circuits.len()
}

fn main() {
    run_example();
}
