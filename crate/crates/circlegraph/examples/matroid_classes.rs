//! Class tests and minors of small binary matroids.

use circlegraph::matroid::{fano, mk33, mk5, u23, MatroidClass};

pub fn run_example() -> Vec<bool> {
    let mut out = Vec::new();
    for (name, m) in [("F7", fano()), ("M(K5)", mk5()), ("M(K3,3)", mk33())] {
        let row: Vec<bool> = [
            MatroidClass::Graphic,
            MatroidClass::Cographic,
            MatroidClass::Regular,
            MatroidClass::Planar,
        ]
        .into_iter()
        .map(|c| m.class_test(c).unwrap())
        .collect();
        println!(
            "{name}: graphic {} cographic {} regular {} planar {}",
            row[0], row[1], row[2], row[3]
        );
        out.extend(row);
    }
    let w = mk5().has_minor(&u23()).unwrap();
    println!("M(K5) has a U2,3 minor: {}", w.is_some());
    out
}

fn main() {
    run_example();
}
