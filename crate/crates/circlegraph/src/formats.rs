//! Plain-text interchange formats.
//!
//! ```text
//! graph W5 6          matrix 2 3 gf2       dm 2         r 0: 0.0 1.0 0.1 1.1
//! e 0 1               elements a b c       -
//! e 1 1               1 0 1                0 1
//!                     0 1 1
//! ```

use std::fmt::Write as _;

use crate::algebra::{Gf2Matrix, IntMatrix};
use crate::deltamatroid::SetSystem;
use crate::error::{Error, Result};
use crate::fourregular::{interlacement, parse_dow, FourRegularGraph, RotationSystem};
use crate::graphs::{bits, LoopedGraph, Multigraph};
use crate::matroid::BinaryMatroid;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, t)| !t.is_empty())
}

fn num(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line}: expected a number, got {tok:?}")))
}

fn graph_edges(text: &str) -> Result<(String, usize, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text);
    let (l, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    if head.len() != 3 || head[0] != "graph" {
        return Err(Error::Parse(format!(
            "line {l}: expected `graph <name> <n>`"
        )));
    }
    let n = num(head[2], l)?;
    let mut edges = Vec::new();
    for (l, t) in lines {
        if t.len() != 3 || t[0] != "e" {
            return Err(Error::Parse(format!("line {l}: expected `e <u> <v>`")));
        }
        let (u, v) = (num(t[1], l)?, num(t[2], l)?);
        if u >= n || v >= n {
            return Err(Error::Parse(format!(
                "line {l}: vertex out of range 0..{n}"
            )));
        }
        edges.push((u, v));
    }
    Ok((head[1].to_string(), n, edges))
}

/// Repeated edges cancel in pairs, as they would in the adjacency over GF(2);
/// use `parse_multigraph` to keep them.
pub fn parse_graph(text: &str) -> Result<(String, LoopedGraph)> {
    let (name, n, edges) = graph_edges(text)?;
    let mut g = LoopedGraph::new(n);
    for (u, v) in edges {
        g.toggle_edge(u, v);
    }
    Ok((name, g))
}

pub fn parse_multigraph(text: &str) -> Result<(String, Multigraph)> {
    let (name, n, edges) = graph_edges(text)?;
    Ok((name, Multigraph::new(n, edges)?))
}

/// A `graph` file, or a DOW whose interlacement graph is meant.
pub fn parse_graph_or_dow(text: &str) -> Result<(String, LoopedGraph)> {
    match content_lines(text).next() {
        Some((_, t)) if t[0] == "graph" => parse_graph(text),
        Some(_) => Ok(("interlacement".into(), interlacement(&parse_dow(text)?))),
        None => Err(Error::Parse("empty input".into())),
    }
}

/// Vertex names, when present, go in a trailing-comment line.
pub fn write_graph(name: &str, g: &LoopedGraph) -> String {
    let mut s = format!("graph {name} {}\n", g.n());
    if let Some(names) = g.names() {
        writeln!(s, "# names {}", names.join(" ")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn write_multigraph(name: &str, g: &Multigraph) -> String {
    let mut s = format!("graph {name} {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn write_four_regular(name: &str, f: &FourRegularGraph) -> String {
    let s = write_multigraph(name, &f.to_multigraph());
    let (head, rest) = s.split_once('\n').expect("header line");
    format!("{head}\n# names {}\n{rest}", f.names().join(" "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matrix {
    Gf2(Gf2Matrix),
    Int(IntMatrix),
}

/// Returns the matrix and the `elements` labels if present.
pub fn parse_matrix(text: &str) -> Result<(Matrix, Option<Vec<String>>)> {
    let mut lines = content_lines(text);
    let (l, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    if head.len() != 4 || head[0] != "matrix" {
        return Err(Error::Parse(format!(
            "line {l}: expected `matrix <rows> <cols> <gf2|int>`"
        )));
    }
    let (r, c) = (num(head[1], l)?, num(head[2], l)?);
    let gf2 = match head[3] {
        "gf2" => true,
        "int" => false,
        x => return Err(Error::Parse(format!("line {l}: unknown ring {x:?}"))),
    };
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (l, t) in lines {
        if t[0] == "elements" {
            if t.len() != c + 1 {
                return Err(Error::Parse(format!(
                    "line {l}: {} labels for {c} columns",
                    t.len() - 1
                )));
            }
            labels = Some(t[1..].iter().map(|s| s.to_string()).collect());
            continue;
        }
        if t.len() != c {
            return Err(Error::Parse(format!(
                "line {l}: {} entries, expected {c}",
                t.len()
            )));
        }
        let row = t
            .iter()
            .map(|x| {
                x.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {l}: bad entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if gf2 && row.iter().any(|&x| x != 0 && x != 1) {
            return Err(Error::Parse(format!(
                "line {l}: gf2 entries must be 0 or 1"
            )));
        }
        rows.push(row);
    }
    if rows.len() != r {
        return Err(Error::Parse(format!("{} rows, expected {r}", rows.len())));
    }
    let m = if gf2 {
        let rows: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as u8).collect())
            .collect();
        let mut m = if r == 0 {
            Gf2Matrix::zeros(0, c)
        } else {
            Gf2Matrix::from_rows(&rows)?
        };
        if let Some(l) = &labels {
            m = m.with_col_labels(l.clone())?;
        }
        Matrix::Gf2(m)
    } else {
        Matrix::Int(if r == 0 {
            IntMatrix::zeros(0, c)
        } else {
            IntMatrix::from_rows(&rows)?
        })
    };
    Ok((m, labels))
}

pub fn parse_gf2_matrix(text: &str) -> Result<Gf2Matrix> {
    match parse_matrix(text)?.0 {
        Matrix::Gf2(m) => Ok(m),
        Matrix::Int(_) => Err(Error::Parse("expected a gf2 matrix".into())),
    }
}

pub fn write_gf2_matrix(m: &Gf2Matrix) -> String {
    let mut s = format!("matrix {} {} gf2\n", m.rows(), m.cols());
    if let Some(l) = m.col_labels() {
        writeln!(s, "elements {}", l.join(" ")).unwrap();
    }
    for row in m.to_rows() {
        let row: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

pub fn write_int_matrix(m: &IntMatrix) -> String {
    let mut s = format!("matrix {} {} int\n", m.rows(), m.cols());
    for row in m.to_rows() {
        let row: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

pub fn parse_matroid(text: &str) -> Result<BinaryMatroid> {
    let m = parse_gf2_matrix(text)?;
    BinaryMatroid::from_matrix(&m)
}

pub fn write_matroid(m: &BinaryMatroid) -> String {
    write_gf2_matrix(&m.representation())
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut lines = content_lines(text);
    let (l, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty set system".into()))?;
    if head.len() != 2 || head[0] != "dm" {
        return Err(Error::Parse(format!("line {l}: expected `dm <n>`")));
    }
    let n = num(head[1], l)?;
    let mut sets = Vec::new();
    for (l, t) in lines {
        let mut x = 0u32;
        if t != ["-"] {
            for tok in t {
                let e = num(tok, l)?;
                if e >= n {
                    return Err(Error::Parse(format!(
                        "line {l}: element {e} outside 0..{n}"
                    )));
                }
                x |= 1 << e;
            }
        }
        sets.push(x);
    }
    SetSystem::new(n, sets)
}

pub fn write_set_system(d: &SetSystem) -> String {
    let mut s = format!("dm {}\n", d.n());
    for x in d.feasible() {
        if x == 0 {
            s.push_str("-\n");
        } else {
            let e: Vec<String> = bits(x as u64).map(|v| v.to_string()).collect();
            writeln!(s, "{}", e.join(" ")).unwrap();
        }
    }
    s
}

fn half(tok: &str, l: usize) -> Result<usize> {
    let (e, s) = tok.split_once('.').ok_or_else(|| {
        Error::Parse(format!("line {l}: half-edge {tok:?} is not `<edge>.<0|1>`"))
    })?;
    let s = num(s, l)?;
    if s > 1 {
        return Err(Error::Parse(format!(
            "line {l}: half-edge side must be 0 or 1"
        )));
    }
    Ok(2 * num(e, l)? + s)
}

/// Edges are recovered from where their two halves sit.
pub fn parse_rotation_system(text: &str) -> Result<RotationSystem> {
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    for (l, t) in content_lines(text) {
        if t.len() < 2 || t[0] != "r" || !t[1].ends_with(':') {
            return Err(Error::Parse(format!("line {l}: expected `r <v>: <h> ...`")));
        }
        let v = num(t[1].trim_end_matches(':'), l)?;
        if v >= rotation.len() {
            rotation.resize(v + 1, Vec::new());
        }
        rotation[v] = t[2..].iter().map(|h| half(h, l)).collect::<Result<_>>()?;
    }
    let halves = rotation.iter().map(Vec::len).sum::<usize>();
    if halves % 2 == 1 {
        return Err(Error::Parse("odd number of half-edges".into()));
    }
    let mut ends = vec![None; halves];
    for (v, rot) in rotation.iter().enumerate() {
        for &h in rot {
            let slot = ends.get_mut(h).ok_or_else(|| {
                Error::Parse(format!("half-edge {}.{} out of range", h / 2, h % 2))
            })?;
            *slot = Some(v);
        }
    }
    let edges = ends
        .chunks(2)
        .enumerate()
        .map(|(e, c)| match (c[0], c[1]) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Parse(format!("edge {e} is missing a half"))),
        })
        .collect::<Result<Vec<_>>>()?;
    RotationSystem::new(rotation.len(), edges, rotation)
}

pub fn write_rotation_system(h: &RotationSystem) -> String {
    let mut s = String::new();
    for v in 0..h.n() {
        let r: Vec<String> = h
            .rotation(v)
            .iter()
            .map(|&x| format!("{}.{}", x / 2, x % 2))
            .collect();
        writeln!(s, "r {v}: {}", r.join(" ")).unwrap();
    }
    s
}

/// Graphviz dump of a graph.
pub fn dot_graph(name: &str, g: &LoopedGraph) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        writeln!(s, "  {v} [label=\"{}\"];", g.name(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn dot_multigraph(name: &str, g: &Multigraph) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip() {
        let mut g = LoopedGraph::wheel(5);
        g.set_edge(2, 2, true);
        let text = write_graph("W5", &g);
        let (name, h) = parse_graph(&text).unwrap();
        assert_eq!(name, "W5");
        assert_eq!(g, h);
        assert!(parse_graph("graph x 2\ne 0 2\n").is_err());
        let (_, k) = parse_graph_or_dow("a b a b").unwrap();
        assert_eq!(k.edge_count(), 1);
    }

    #[test]
    fn matrix_and_dm_roundtrip() {
        let m = Gf2Matrix::from_rows(&[[1u8, 0, 1], [0, 1, 1]])
            .unwrap()
            .with_col_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let text = write_gf2_matrix(&m);
        assert_eq!(parse_gf2_matrix(&text).unwrap(), m);
        let i = IntMatrix::from_rows(&[[0, -1], [1, 0]]).unwrap();
        assert_eq!(
            parse_matrix(&write_int_matrix(&i)).unwrap().0,
            Matrix::Int(i)
        );
        let d = SetSystem::new(3, [0, 0b011, 0b110]).unwrap();
        assert_eq!(parse_set_system(&write_set_system(&d)).unwrap(), d);
    }

    #[test]
    fn rotation_roundtrip() {
        let text = "r 0: 0.0 1.0 0.1 1.1\n";
        let h = parse_rotation_system(text).unwrap();
        assert_eq!(h.edges(), &[(0, 0), (0, 0)]);
        assert_eq!(write_rotation_system(&h), text);
    }
}
