use circlegraph::algebra::{gf2_kernel, int_det, Gf2Matrix, IntMatrix};
use circlegraph::deltamatroid::{dm_from_graph, dm_from_matrix, reconstruct_matrix, SetSystem};
use circlegraph::fourregular::{dow_from_words, interlacement, kappa_transform};
use circlegraph::graphs::{
    apply_local_op, is_vertex_minor, local_equivalence_orbit, Generators, LocalOp, LoopedGraph,
    Multigraph, OrbitMode,
};
use circlegraph::isotropic::{ias_matroid, Transversal};
use circlegraph::matroid::{graph_matroid, BinaryMatroid, GraphMatroidKind, MatroidClass};
use circlegraph::pu::{
    is_pu, is_t_regular_graph, pu_sign, pu_sign_unrestricted, transversal_determinants_unimodular,
};
use circlegraph::recognize::{chord_diagram, has_obstruction, is_circle, is_circle_graph, Method};
use proptest::prelude::*;

const CAP: usize = 200_000;

fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = LoopedGraph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n.max(1) - 1) / 2).prop_map(move |bits| {
            let mut g = LoopedGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.set_edge(u, v, true);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn looped_strategy(lo: usize, hi: usize) -> impl Strategy<Value = LoopedGraph> {
    graph_strategy(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        prop::collection::vec(any::<bool>(), n).prop_map(move |loops| {
            let mut h = g.clone();
            for (v, &l) in loops.iter().enumerate() {
                h.set_edge(v, v, l);
            }
            h
        })
    })
}

fn gf2_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r)
            .prop_map(|rows| Gf2Matrix::from_rows(&rows).unwrap())
    })
}

fn skew_strategy(lo: usize, hi: usize) -> impl Strategy<Value = IntMatrix> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(-1i64..=1, n * (n.max(1) - 1) / 2).prop_map(move |vals| {
            let mut m = IntMatrix::zeros(n, n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    m.set(i, j, vals[k]);
                    m.set(j, i, -vals[k]);
                    k += 1;
                }
            }
            m
        })
    })
}

/// A random double occurrence word on `n` letters.
fn dow_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Vec<usize>> {
    (lo..=hi).prop_flat_map(|n| {
        let letters: Vec<usize> = (0..n).flat_map(|v| [v, v]).collect();
        Just(letters).prop_shuffle()
    })
}

fn matroid_of(m: &Gf2Matrix) -> BinaryMatroid {
    BinaryMatroid::from_matrix(m).unwrap()
}

fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn min_degree_over_orbit(g: &LoopedGraph) -> usize {
    local_equivalence_orbit(g, OrbitMode::UpToIso, Generators::SimpleLc, CAP)
        .unwrap()
        .iter()
        .flat_map(|h| (0..h.n()).map(|v| h.degree(v)).collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// Element map induced by simple local complementation at `v`: the triple at
/// `v` swaps `p` and `s`, each neighbour swaps `c` and `s`, others stay put.
fn lc_element_map(g: &LoopedGraph, v: usize) -> Vec<usize> {
    let n = g.n();
    let mut map = vec![0; 3 * n];
    for w in 0..n {
        let perm: [usize; 3] = if w == v {
            [2, 1, 0]
        } else if g.has_edge(v, w) {
            [0, 2, 1]
        } else {
            [0, 1, 2]
        };
        for l in 0..3 {
            map[l * n + w] = perm[l] * n + w;
        }
    }
    map
}

fn subdivision(g: &LoopedGraph) -> (LoopedGraph, Vec<usize>) {
    let n = g.n();
    let edges = g.edges();
    let mut s_edges = Vec::new();
    let mut middles = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        s_edges.push((u, n + i));
        s_edges.push((v, n + i));
        middles.push(n + i);
    }
    (
        LoopedGraph::from_edges(n + edges.len(), &s_edges).unwrap(),
        middles,
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn kernel_vectors_vanish(m in gf2_strategy(16, 48)) {
        let k = gf2_kernel(&m);
        prop_assert_eq!(k.rank + k.basis.len(), m.cols());
        prop_assert_eq!(k.rank, m.rank());
        for v in &k.basis {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| !x));
        }
    }

    #[test]
    fn rank_equals_transpose_rank(m in gf2_strategy(16, 48)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn determinant_matches_cofactor_expansion(
        rows in (0usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-2i64..=2, n), n))
    ) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let d = int_det(&m).unwrap();
        prop_assert_eq!(d, cofactor_det(&rows).into());
    }

    #[test]
    fn local_complementation_is_an_involution(g in graph_strategy(1, 8), v in 0usize..8) {
        let v = v % g.n();
        let h = apply_local_op(&apply_local_op(&g, &LocalOp::SimpleLc(v)).unwrap(), &LocalOp::SimpleLc(v)).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn pivot_is_symmetric(g in graph_strategy(2, 8), e in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[e % edges.len()];
        let a = apply_local_op(&g, &LocalOp::Pivot(u, v)).unwrap();
        let b = apply_local_op(&g, &LocalOp::Pivot(v, u)).unwrap();
        prop_assert_eq!(&a, &b);
        // Pivoting swaps the neighbourhoods of u and v outside the pair.
        for w in 0..g.n() {
            if w != u && w != v {
                prop_assert_eq!(a.has_edge(u, w), g.has_edge(v, w));
            }
        }
    }

    #[test]
    fn orbit_membership_is_symmetric(g in graph_strategy(1, 6), seq in prop::collection::vec(0usize..6, 0..6)) {
        let mut h = g.clone();
        for v in seq {
            h = apply_local_op(&h, &LocalOp::SimpleLc(v % g.n())).unwrap();
        }
        let og = local_equivalence_orbit(&g, OrbitMode::UpToIso, Generators::SimpleLc, CAP).unwrap();
        let oh = local_equivalence_orbit(&h, OrbitMode::UpToIso, Generators::SimpleLc, CAP).unwrap();
        prop_assert_eq!(og.len(), oh.len());
        prop_assert!(oh.iter().any(|x| x.is_isomorphic(&g)));
    }

    #[test]
    fn vertex_minor_relation_is_reflexive_and_transitive(g in graph_strategy(2, 7), a in 0usize..7, b in 0usize..7) {
        prop_assert!(is_vertex_minor(&g, &g, CAP).unwrap().is_some());
        let h = g.delete(&[a % g.n()]);
        prop_assume!(h.n() >= 1);
        let k = h.delete(&[b % h.n()]);
        let w = is_vertex_minor(&g, &k, CAP).unwrap();
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(w.replay(&g).unwrap().is_isomorphic(&k));
    }

    #[test]
    fn obstruction_test_is_invariant_under_local_complementation(g in graph_strategy(5, 7), v in 0usize..7) {
        let h = apply_local_op(&g, &LocalOp::SimpleLc(v % g.n())).unwrap();
        prop_assert_eq!(has_obstruction(&g).unwrap(), has_obstruction(&h).unwrap());
    }

    #[test]
    fn kappa_transform_matches_local_complementation(word in dow_strategy(1, 8), v in 0usize..8) {
        let names: Vec<String> = word.iter().map(|x| format!("v{x}")).collect();
        let c = dow_from_words(&[names]).unwrap();
        let v = v % c.graph().n();
        let k = kappa_transform(&c, v).unwrap();
        let back = kappa_transform(&k, v).unwrap();
        prop_assert_eq!(back.normalized_words(), c.normalized_words());
        let g = interlacement(&c);
        let expect = apply_local_op(&g, &LocalOp::SimpleLc(v)).unwrap();
        prop_assert_eq!(interlacement(&k).edges(), expect.edges());
    }

    #[test]
    fn row_operations_preserve_the_matroid(m in gf2_strategy(6, 10), i in 0usize..6, j in 0usize..6) {
        let (i, j) = (i % m.rows(), j % m.rows());
        prop_assume!(i != j);
        let mut n = m.clone();
        for c in 0..m.cols() {
            if m.get(j, c) {
                n.flip(i, c);
            }
        }
        let (a, b) = (matroid_of(&m), matroid_of(&n));
        for s in 0u32..(1 << m.cols()) {
            let set: Vec<usize> = (0..m.cols()).filter(|&e| s >> e & 1 == 1).collect();
            prop_assert_eq!(a.rank_of(&set), b.rank_of(&set));
        }
    }

    #[test]
    fn dual_circuits_are_cocircuits(m in gf2_strategy(6, 10)) {
        let a = matroid_of(&m);
        let d = a.dual();
        let len = a.len();
        prop_assert_eq!(a.rank() + d.rank(), len);
        let r = a.rank();
        let mut cocircuits = Vec::new();
        for s in 1u32..(1 << len) {
            let rest: Vec<usize> = (0..len).filter(|&e| s >> e & 1 == 0).collect();
            let inside: Vec<usize> = (0..len).filter(|&e| s >> e & 1 == 1).collect();
            if a.rank_of(&rest) == r {
                continue;
            }
            // Minimal: putting back any one element restores full rank.
            let minimal = inside.iter().all(|&e| {
                let mut t = rest.clone();
                t.push(e);
                a.rank_of(&t) == r
            });
            if minimal {
                cocircuits.push(inside);
            }
        }
        let mut circuits = d.circuits().unwrap();
        circuits.sort();
        cocircuits.sort();
        prop_assert_eq!(circuits, cocircuits);
    }

    #[test]
    fn planar_is_graphic_and_cographic(m in gf2_strategy(5, 9)) {
        let a = matroid_of(&m);
        let planar = a.class_test(MatroidClass::Planar).unwrap();
        let both = a.class_test(MatroidClass::Graphic).unwrap() && a.class_test(MatroidClass::Cographic).unwrap();
        prop_assert_eq!(planar, both);
        if planar {
            prop_assert!(a.class_test(MatroidClass::Regular).unwrap());
        }
    }

    #[test]
    fn graph_matroids_are_classified(
        edges in (2usize..=6).prop_flat_map(|n| prop::collection::vec((0..n, 0..n), 1..=10).prop_map(move |e| (n, e)))
    ) {
        let (n, edges) = edges;
        let g = Multigraph::new(n, edges).unwrap();
        let cycle = graph_matroid(&g, GraphMatroidKind::Cycle).unwrap();
        let bond = graph_matroid(&g, GraphMatroidKind::Bond).unwrap();
        prop_assert!(cycle.class_test(MatroidClass::Graphic).unwrap());
        prop_assert!(bond.class_test(MatroidClass::Cographic).unwrap());
        prop_assert!(cycle.dual().is_isomorphic(&bond).unwrap().is_some());
    }

    #[test]
    fn automorphism_count_is_relabel_invariant(m in gf2_strategy(4, 7), shift in 0usize..7) {
        let a = matroid_of(&m);
        let len = a.len();
        let count = a.automorphism_count().unwrap();
        let factorial: u128 = (1..=len as u128).product();
        prop_assert_eq!(factorial % count, 0);
        let cols: Vec<u64> = (0..len).map(|e| a.column((e + shift) % len)).collect();
        let labels: Vec<String> = (0..len).map(|e| format!("e{e}")).collect();
        let b = BinaryMatroid::from_columns(a.rank().max(1) + 6, &cols, labels).unwrap();
        prop_assert_eq!(b.automorphism_count().unwrap(), count);
    }

    #[test]
    fn local_complementation_preserves_the_isotropic_matroid(g in graph_strategy(1, 6), v in 0usize..6) {
        let v = v % g.n();
        let h = apply_local_op(&g, &LocalOp::SimpleLc(v)).unwrap();
        let (pg, ph) = (ias_matroid(&g).unwrap(), ias_matroid(&h).unwrap());
        let map = lc_element_map(&g, v);
        for s in 0u32..(1 << (3 * g.n())).min(1 << 15) {
            let a: Vec<usize> = (0..3 * g.n()).filter(|&e| s >> e & 1 == 1).collect();
            let b: Vec<usize> = a.iter().map(|&e| map[e]).collect();
            prop_assert_eq!(pg.rank_of(&a), ph.rank_of(&b));
        }
    }

    #[test]
    fn shortest_transverse_circuit_tracks_minimum_degree(g in graph_strategy(1, 6)) {
        let p = ias_matroid(&g).unwrap();
        let shortest = p.transverse_circuits(g.n() + 1).iter().map(|t| t.size()).min().unwrap();
        prop_assert_eq!(shortest, min_degree_over_orbit(&g) + 1);
    }

    #[test]
    fn tight_sections_are_the_even_ones(g in looped_strategy(1, 4), t in prop::collection::vec(0u8..3, 4)) {
        let p = ias_matroid(&g).unwrap();
        let t = Transversal::total(t[..g.n()].to_vec());
        let s = p.section(&t).unwrap();
        prop_assert_eq!(s.is_tight(), s.delta_matroid().is_even());
        prop_assert_eq!(s.is_tight(), s.is_tight_literal());
    }

    #[test]
    fn twist_and_loop_complement_compose(g in looped_strategy(1, 5), x in 0u32..32, y in 0u32..32) {
        let d = dm_from_graph(&g);
        let full = d.full();
        let (x, y) = (x & full, y & full);
        prop_assert!(d.is_delta_matroid().unwrap());
        prop_assert_eq!(d.twist(x).twist(y), d.twist(x ^ y));
        prop_assert_eq!(d.loop_complement(x).loop_complement(x), d.clone());
        let e = d.twist(x).loop_complement(y);
        prop_assert!(e.is_delta_matroid().unwrap());
    }

    #[test]
    fn graphic_delta_matroid_parity_follows_the_diagonal(g in looped_strategy(1, 6)) {
        let a = g.adjacency();
        let d = dm_from_matrix(&a).unwrap();
        prop_assert_eq!(d.is_even(), g.loop_mask() == 0);
        prop_assert_eq!(reconstruct_matrix(&d).unwrap(), a);
    }

    #[test]
    fn matroid_bases_form_a_delta_matroid(m in gf2_strategy(4, 7)) {
        let a = matroid_of(&m);
        let len = a.len();
        let r = a.rank();
        let bases = (0u32..(1 << len)).filter(|&s| {
            let set: Vec<usize> = (0..len).filter(|&e| s >> e & 1 == 1).collect();
            set.len() == r && a.is_independent(&set)
        });
        let d = SetSystem::from_bases(len, bases).unwrap();
        prop_assert!(d.is_delta_matroid().unwrap());
        prop_assert!(d.is_even());
    }

    #[test]
    fn principal_unimodularity_matches_transversal_determinants(m in skew_strategy(1, 6)) {
        prop_assert_eq!(is_pu(&m).unwrap(), transversal_determinants_unimodular(&m).unwrap());
    }

    #[test]
    fn diagonal_signature_preserves_principal_unimodularity(m in skew_strategy(1, 6), signs in prop::collection::vec(any::<bool>(), 6)) {
        let n = m.rows();
        let mut s = m.clone();
        for i in 0..n {
            for j in 0..n {
                let f = if signs[i] != signs[j] { -1 } else { 1 };
                s.set(i, j, f * m.get(i, j));
            }
        }
        prop_assert_eq!(is_pu(&m).unwrap(), is_pu(&s).unwrap());
    }

    #[test]
    fn pu_signing_is_sound_and_complete(g in graph_strategy(1, 5)) {
        let support = g.adjacency();
        let fast = pu_sign(&support).unwrap();
        let slow = pu_sign_unrestricted(&support).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(s) = fast {
            prop_assert!(is_pu(s.matrix()).unwrap());
            prop_assert_eq!(s.matrix().mod2(), support);
        }
    }

    #[test]
    fn recognition_verdict_is_locally_invariant(g in graph_strategy(1, 7), v in 0usize..7) {
        let h = apply_local_op(&g, &LocalOp::SimpleLc(v % g.n())).unwrap();
        prop_assert_eq!(is_circle_graph(&g).unwrap(), is_circle_graph(&h).unwrap());
        if let Some(words) = chord_diagram(&g).unwrap() {
            let rebuilt = circlegraph::fourregular::word_interlacement(g.n(), &words);
            prop_assert_eq!(rebuilt.edges(), g.edges());
        }
    }

    #[test]
    fn every_graph_is_a_vertex_minor_of_a_bipartite_circle_graph(g in graph_strategy(1, 6)) {
        let (s, middles) = subdivision(&g);
        prop_assert!(s.bipartition().is_some());
        let mut h = s.clone();
        for &x in &middles {
            h = apply_local_op(&h, &LocalOp::SimpleLc(x)).unwrap();
        }
        let back = h.delete(&middles);
        prop_assert_eq!(back.edges(), g.edges());
        if s.n() <= 10 {
            prop_assert!(is_circle_graph(&s).unwrap());
            prop_assert!(is_vertex_minor(&s, &g, CAP).unwrap().is_some());
        }
    }

    #[test]
    fn circle_graphs_pass_both_recognizers(word in dow_strategy(1, 8)) {
        let n = word.len() / 2;
        let g = circlegraph::fourregular::word_interlacement(n, &[word]);
        let r = is_circle(&g, Method::Both).unwrap();
        prop_assert!(r.verdict.is_circle());
        prop_assert!(!has_obstruction(&g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn t_regularity_matches_circle_recognition(g in graph_strategy(6, 6)) {
        let t = is_t_regular_graph(&g).unwrap();
        prop_assert_eq!(t.regular, is_circle_graph(&g).unwrap());
    }
}
