//! Plane maps, boundary words of spanning trees, and crossing lower bounds.

use circlegraph::fourregular::{
    boundary_trace, boundary_trace_holds, detach, euler_systems, interlacement, medial_graph,
    random_plane_map, random_spanning_tree, EulerMode, RotationSystem,
};
use circlegraph::recognize::{crossing_lower_bound, planar_realizability};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = random_plane_map(&mut rng, 4, 7);
    let tree = random_spanning_tree(&mut rng, &h);
    let word = boundary_trace(&h, &tree).unwrap();
    assert!(boundary_trace_holds(&h, &tree, &word));
    println!("boundary word {:?}", word);

    // medial graph of the tetrahedron, detached along a crossing transition
    let pts = [(0.0, 10.0), (-9.0, -5.0), (9.0, -5.0), (0.0, 0.0)];
    let tetra = RotationSystem::from_coordinates(
        &pts,
        vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
    )
    .unwrap();
    let m = medial_graph(&tetra).unwrap();
    let f = detach(&m.graph, 0, m.crossing[0]).unwrap();
    let g = interlacement(&euler_systems(&f, EulerMode::One).unwrap()[0]);
    let b = crossing_lower_bound(&g, true).unwrap();
    println!(
        "planar realization: {:?}",
        planar_realizability(&g)
            .unwrap()
            .map(|(a, b)| format!("{a} {b}"))
    );
    println!("crossing lower bound {}", b.bound);
    b.bound
}

fn main() {
    run_example();
}
