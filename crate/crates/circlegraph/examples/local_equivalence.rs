//! Local complementation orbits and a vertex-minor search.

use circlegraph::fixtures::bw4;
use circlegraph::graphs::{
    apply_local_op, is_vertex_minor, local_equivalence_orbit, Generators, LocalOp, LoopedGraph,
    OrbitMode, DEFAULT_ORBIT_CAP,
};

pub fn run_example() -> usize {
    let c5 = LoopedGraph::cycle(5);
    let lc = apply_local_op(&c5, &LocalOp::SimpleLc(0)).unwrap();
    println!(
        "C5 after local complement at 0 has {} edges",
        lc.edge_count()
    );
    let orbit = local_equivalence_orbit(
        &c5,
        OrbitMode::UpToIso,
        Generators::SimpleLc,
        DEFAULT_ORBIT_CAP,
    )
    .unwrap();
    println!("C5 orbit: {} graphs up to isomorphism", orbit.len());
    let w = is_vertex_minor(&bw4(), &LoopedGraph::wheel(5), DEFAULT_ORBIT_CAP)
        .unwrap()
        .expect("W5 is a vertex-minor of BW4");
    println!(
        "W5 inside BW4: lc {:?}, delete {:?}",
        w.lc_sequence, w.deleted
    );
    orbit.len()
}

fn main() {
    run_example();
}
