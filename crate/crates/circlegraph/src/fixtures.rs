//! Named graphs, words and matrices used throughout the tests and the CLI.

use crate::algebra::{Gf2Matrix, IntMatrix};
use crate::error::{Error, Result};
use crate::formats::{write_gf2_matrix, write_graph, write_int_matrix, write_multigraph};
use crate::fourregular::{interlacement, parse_dow, EulerSystem};
use crate::graphs::{LoopedGraph, Multigraph};
use crate::isotropic::Transversal;

pub const NAMES: [&str; 11] = [
    "W5",
    "BW3",
    "W7",
    "BW4",
    "K44_DOW",
    "K5_MCP",
    "K5_MDP",
    "PU_B",
    "TG_DOUBLED_C4",
    "TG_K4_PLUS2",
    "W7_SPECIAL_TRANSVERSAL",
];

#[derive(Clone, Debug)]
pub enum Fixture {
    Graph(LoopedGraph),
    Dow(String),
    Gf2(Gf2Matrix),
    Int(IntMatrix),
    Multigraph(Multigraph),
    Transversal(Transversal),
}

impl Fixture {
    pub fn to_text(&self, name: &str) -> String {
        match self {
            Fixture::Graph(g) => write_graph(name, g),
            Fixture::Dow(w) => format!("{w}\n"),
            Fixture::Gf2(m) => write_gf2_matrix(m),
            Fixture::Int(m) => write_int_matrix(m),
            Fixture::Multigraph(m) => write_multigraph(name, m),
            Fixture::Transversal(t) => format!("{t}\n"),
        }
    }
}

pub fn fixture(name: &str) -> Result<Fixture> {
    Ok(match name {
        "W5" => Fixture::Graph(w5()),
        "BW3" => Fixture::Graph(bw3()),
        "W7" => Fixture::Graph(w7()),
        "BW4" => Fixture::Graph(bw4()),
        "K44_DOW" => Fixture::Dow(K44_DOW.into()),
        "K5_MCP" => Fixture::Gf2(k5_mcp()),
        "K5_MDP" => Fixture::Gf2(k5_mdp()),
        "PU_B" => Fixture::Int(pu_b()),
        "TG_DOUBLED_C4" => Fixture::Multigraph(tg_doubled_c4()),
        "TG_K4_PLUS2" => Fixture::Multigraph(tg_k4_plus2()),
        "W7_SPECIAL_TRANSVERSAL" => Fixture::Transversal(w7_special_transversal()),
        _ => {
            return Err(Error::Unknown(format!(
                "fixture {name:?}; available: {}",
                NAMES.join(", ")
            )))
        }
    })
}

/// Graph-valued fixtures, with `K44_DOW` read as its interlacement graph.
pub fn graph_fixture(name: &str) -> Result<LoopedGraph> {
    match fixture(name)? {
        Fixture::Graph(g) => Ok(g),
        Fixture::Dow(_) => Ok(k44_interlacement()),
        _ => Err(Error::Precondition(format!(
            "fixture {name} is not a graph"
        ))),
    }
}

fn one_based(g: LoopedGraph) -> LoopedGraph {
    let names = (1..=g.n()).map(|i| i.to_string()).collect();
    g.with_names(names).expect("distinct names")
}

/// Hub `1`, rim `2..=6` in cyclic order.
pub fn w5() -> LoopedGraph {
    one_based(LoopedGraph::wheel(5))
}

/// Hub `1`, rim `2..=8` in cyclic order.
pub fn w7() -> LoopedGraph {
    one_based(LoopedGraph::wheel(7))
}

fn subdivided_wheel(k: usize) -> LoopedGraph {
    // rim 1..=2k with odd labels on the wheel rim, hub 2k+1
    let mut edges: Vec<(usize, usize)> = (0..2 * k).map(|i| (i, (i + 1) % (2 * k))).collect();
    edges.extend((0..k).map(|i| (2 * k, 2 * i)));
    one_based(LoopedGraph::from_edges(2 * k + 1, &edges).expect("in range"))
}

/// `W3` with its rim edges subdivided: a fundamental graph of `F7`.
pub fn bw3() -> LoopedGraph {
    subdivided_wheel(3)
}

/// `W4` with its rim edges subdivided: a fundamental graph of `M(K3,3)`.
pub fn bw4() -> LoopedGraph {
    subdivided_wheel(4)
}

pub const K44_DOW: &str = "a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2";

pub fn k44_euler_system() -> EulerSystem {
    parse_dow(K44_DOW).expect("fixture word is valid")
}

pub fn k44_interlacement() -> LoopedGraph {
    interlacement(&k44_euler_system())
}

pub fn k5_mcp() -> Gf2Matrix {
    Gf2Matrix::from_rows(&[
        [1u8, 0, 1, 1, 0],
        [0, 1, 1, 1, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 1, 0, 1],
    ])
    .expect("square")
}

pub fn k5_mdp() -> Gf2Matrix {
    Gf2Matrix::from_rows(&[
        [1u8, 1, 1, 0, 1],
        [1, 1, 1, 0, 1],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 1, 1],
        [1, 1, 0, 0, 0],
    ])
    .expect("square")
}

/// `(I | A)` with `A` the skew block `+1` above the diagonal; columns
/// `t1,1 .. t1,4, t2,1 .. t2,4`.
pub fn pu_b() -> IntMatrix {
    let mut rows = vec![vec![0i64; 8]; 4];
    for i in 0..4 {
        rows[i][i] = 1;
        for j in 0..4 {
            rows[i][4 + j] = (j as i64 - i as i64).signum();
        }
    }
    IntMatrix::from_rows(&rows).expect("rectangular")
}

pub fn tg_doubled_c4() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((i, (i + 1) % 4));
    }
    Multigraph::new(4, edges).expect("in range")
}

pub fn tg_k4_plus2() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push((a, b));
        }
    }
    edges.push((0, 1));
    edges.push((2, 3));
    Multigraph::new(4, edges).expect("in range")
}

/// `{φ1, φ2, χ3, φ4, φ5, ψ6, ψ7, φ8}` on `W7`.
pub fn w7_special_transversal() -> Transversal {
    "ppcppssp".parse().expect("valid letters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{fano, mk33, BinaryMatroid};

    fn fundamental_matroid(g: &LoopedGraph) -> BinaryMatroid {
        let (a, _) = g.bipartition().unwrap();
        let rows: Vec<usize> = crate::graphs::bits(a).collect();
        let cols: Vec<usize> = (0..g.n()).filter(|v| a >> v & 1 == 0).collect();
        let mut m = Gf2Matrix::zeros(rows.len(), rows.len() + cols.len());
        for (i, &r) in rows.iter().enumerate() {
            m.set(i, i, true);
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, rows.len() + j, g.has_edge(r, c));
            }
        }
        BinaryMatroid::from_matrix(&m).unwrap()
    }

    #[test]
    fn subdivided_wheels_are_fundamental_graphs() {
        let f = fundamental_matroid(&bw3());
        let f = if f.rank() == 3 { f } else { f.dual() };
        assert!(f.is_isomorphic(&fano()).unwrap().is_some());
        let k = fundamental_matroid(&bw4());
        let k = if k.rank() == 5 { k } else { k.dual() };
        assert!(k.is_isomorphic(&mk33()).unwrap().is_some());
    }

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            assert!(!fixture(n).unwrap().to_text(n).is_empty());
        }
        assert!(matches!(fixture("nope"), Err(Error::Unknown(_))));
        assert_eq!(w5().degree(0), 5);
        assert_eq!(pu_b().get(1, 4), -1);
    }
}
