//! Circle-graph recognition by chord diagrams and by obstructions.

use circlegraph::fixtures::{bw3, k44_interlacement, w5, w7};
use circlegraph::recognize::{is_circle, Method};

pub fn run_example() -> Vec<bool> {
    let mut verdicts = Vec::new();
    for (name, g) in [
        ("K44 interlacement", k44_interlacement()),
        ("W5", w5()),
        ("BW3", bw3()),
        ("W7", w7()),
    ] {
        let r = is_circle(&g, Method::Both).unwrap();
        match (&r.dow, &r.obstruction) {
            (Some(dow), _) => println!("{name}: circle, word {dow}"),
            (_, Some(o)) => println!("{name}: not circle, contains {}", o.name),
            _ => unreachable!(),
        }
        verdicts.push(r.verdict.is_circle());
    }
    verdicts
}

fn main() {
    run_example();
}
