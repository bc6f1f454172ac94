//! Delta-matroids of graphs: twists, loop complementation, Eulerian and regular.

use circlegraph::deltamatroid::{dm_from_graph, reconstruct_matrix};
use circlegraph::graphs::LoopedGraph;

pub fn run_example() -> (bool, bool) {
    let d = dm_from_graph(&LoopedGraph::cycle(5));
    println!("D(C5): {} feasible sets, even {}", d.len(), d.is_even());
    let twisted = d.twist(0b00011);
    assert_eq!(twisted.twist(0b00011), d);
    let back = reconstruct_matrix(&d).unwrap();
    assert_eq!(back, LoopedGraph::cycle(5).adjacency());
    let lc = d.loop_complement(0b1);
    println!("loop complement at 0: {} feasible sets", lc.len());
    let c5 = (d.is_eulerian().unwrap(), d.is_regular().unwrap().is_some());
    let w5 = dm_from_graph(&LoopedGraph::wheel(5)).is_eulerian().unwrap();
    println!("C5 eulerian {} regular {}; W5 eulerian {w5}", c5.0, c5.1);
    c5
}

fn main() {
    run_example();
}
