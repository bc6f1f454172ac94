//! Fixtures printed in the text formats and read back.

use circlegraph::fixtures::{fixture, NAMES};
use circlegraph::formats::{parse_graph_or_dow, parse_matrix};
use circlegraph::isotropic::Transversal;

pub fn run_example() -> usize {
    let mut parsed = 0;
    for name in NAMES {
        let text = fixture(name).unwrap().to_text(name);
        let ok = parse_graph_or_dow(&text).is_ok()
            || parse_matrix(&text).is_ok()
            || text.trim().parse::<Transversal>().is_ok();
        println!("{name:24} {} lines, parses {ok}", text.lines().count());
        parsed += usize::from(ok);
    }
    parsed
}

fn main() {
    run_example();
}
