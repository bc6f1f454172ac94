//! Simple 4-regular graphs of small order.

use circlegraph::fourregular::enumerate_four_regular;

pub fn run_example() -> usize {
    let mut total = 0;
    for n in 5..=8 {
        let gs = enumerate_four_regular(n, true).unwrap();
        println!("order {n}: {}", gs.len());
        total += gs.len();
    }
    total
}

fn main() {
    run_example();
}
