//! Euler systems of a 4-regular graph, kappa-transforms and interlacement.

use circlegraph::fixtures::k44_euler_system;
use circlegraph::fourregular::{
    euler_systems, interlacement, kappa_orbit, kappa_transform, EulerMode,
};
use circlegraph::graphs::{apply_local_op, LocalOp};

pub fn run_example() -> usize {
    let c = k44_euler_system();
    let f = c.graph();
    let all = euler_systems(f, EulerMode::All).unwrap();
    let orbit = kappa_orbit(&c).unwrap();
    println!("{} Euler circuits, kappa-orbit {}", all.len(), orbit.len());
    let a = f.vertex("a").unwrap();
    let g = interlacement(&kappa_transform(&c, a).unwrap());
    let h = apply_local_op(&interlacement(&c), &LocalOp::SimpleLc(a)).unwrap();
    assert_eq!(g, h);
    println!("interlacement after kappa at a equals the local complement at a");
    all.len()
}

fn main() {
    run_example();
}
