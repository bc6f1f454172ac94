//! Circuit partitions, touch-graphs and the kernel of the transition matrix.

use circlegraph::algebra::{gf2_kernel, span_basis};
use circlegraph::fixtures::k44_euler_system;
use circlegraph::fourregular::{touch_graph, transition_matrix, CircuitPartition, CHI};

pub fn run_example() -> usize {
    let c = k44_euler_system();
    let f = c.graph();
    let choice = (0..f.n()).map(|v| c.transition(v, CHI)).collect();
    let p = CircuitPartition { choice };
    let t = touch_graph(f, &p);
    println!("all-chi partition: {} circuits", t.circuits.len());
    let kernel = gf2_kernel(&transition_matrix(&c, &p).unwrap());
    let cocycles: Vec<Vec<bool>> = (0..t.graph.n())
        .map(|v| t.graph.vertex_cocycle(v))
        .collect();
    assert_eq!(
        span_basis(&cocycles, f.n()),
        span_basis(&kernel.basis, f.n())
    );
    println!("kernel dimension {} = cocycle rank", kernel.basis.len());
    kernel.basis.len()
}

fn main() {
    run_example();
}
