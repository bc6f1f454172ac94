//! Every example runs and reports what it demonstrates.

#[allow(dead_code)]
#[path = "../examples/automorphisms.rs"]
mod automorphisms;

#[allow(dead_code)]
#[path = "../examples/characterizations.rs"]
mod characterizations;

#[allow(dead_code)]
#[path = "../examples/delta_matroids.rs"]
mod delta_matroids;

#[allow(dead_code)]
#[path = "../examples/enumeration.rs"]
mod enumeration;

#[allow(dead_code)]
#[path = "../examples/euler_systems.rs"]
mod euler_systems;

#[allow(dead_code)]
#[path = "../examples/formats_roundtrip.rs"]
mod formats_roundtrip;

#[allow(dead_code)]
#[path = "../examples/gf2_kernel.rs"]
mod gf2_kernel;

#[allow(dead_code)]
#[path = "../examples/isotropic_matroid.rs"]
mod isotropic_matroid;

#[allow(dead_code)]
#[path = "../examples/local_equivalence.rs"]
mod local_equivalence;

#[allow(dead_code)]
#[path = "../examples/matroid_classes.rs"]
mod matroid_classes;

#[allow(dead_code)]
#[path = "../examples/planarization.rs"]
mod planarization;

#[allow(dead_code)]
#[path = "../examples/pu_signing.rs"]
mod pu_signing;

#[allow(dead_code)]
#[path = "../examples/recognition.rs"]
mod recognition;

#[allow(dead_code)]
#[path = "../examples/touch_graphs.rs"]
mod touch_graphs;

#[test]
fn examples_run() {
    assert_eq!(automorphisms::run_example(), 336);
    assert!(characterizations::run_example());
    assert_eq!(delta_matroids::run_example(), (true, true));
    assert_eq!(enumeration::run_example(), 10);
    assert_eq!(euler_systems::run_example(), 3168);
    assert_eq!(formats_roundtrip::run_example(), 11);
    assert_eq!(gf2_kernel::run_example(), 2);
    assert_eq!(isotropic_matroid::run_example(), 2);
    assert_eq!(local_equivalence::run_example(), 3);
    assert_eq!(
        matroid_classes::run_example()
            .iter()
            .filter(|&&b| b)
            .count(),
        4
    );
    assert_eq!(planarization::run_example(), 1);
    assert!(!pu_signing::run_example());
    assert_eq!(recognition::run_example(), [true, false, false, false]);
    assert_eq!(touch_graphs::run_example(), 2);
}
