//! Kernels of the two 5x5 matrices from the K5 example agree.

use circlegraph::algebra::{gf2_kernel, span_elements};
use circlegraph::fixtures::{k5_mcp, k5_mdp};

pub fn run_example() -> usize {
    let a = gf2_kernel(&k5_mcp());
    let b = gf2_kernel(&k5_mdp());
    assert_eq!(a, b);
    let bits = |v: &Vec<bool>| {
        v.iter()
            .map(|&x| if x { '1' } else { '0' })
            .collect::<String>()
    };
    println!("rank {} nullity {}", k5_mcp().rank(), a.basis.len());
    for v in &span_elements(&a.basis) {
        println!("kernel vector {}", bits(v));
    }
    a.basis.len()
}

fn main() {
    run_example();
}
