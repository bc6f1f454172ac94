//! Circle-graph recognition, the small-circuit and degree characterizations,
//! planar realizability and crossing-number lower bounds.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{guard, require, Error, Result};
use crate::fixtures::{bw3, bw4, k44_interlacement, w5, w7};
use crate::fourregular::word_interlacement;
use crate::graphs::{
    bits, is_vertex_minor, vertex_minor_in_tree, Generators, LoopedGraph, OrbitTree,
    VertexMinorWitness, DEFAULT_ORBIT_CAP,
};
use crate::isotropic::{ias_matroid, IsotropicPresentation, Transversal};
use crate::matroid::{BinaryMatroid, MatroidClass};

pub const MAX_ORACLE_ORDER: usize = 10;
pub const MAX_REPORT_ORDER: usize = 8;
pub const MAX_PAIR_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Circle,
    NotCircle,
}

impl Verdict {
    pub fn is_circle(self) -> bool {
        self == Verdict::Circle
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Circle
        } else {
            Verdict::NotCircle
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Obstruction,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub name: &'static str,
    pub witness: VertexMinorWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub method: Method,
    /// One word per component over the graph's vertex names.
    pub dow: Option<String>,
    pub obstruction: Option<Obstruction>,
}

/// A double occurrence word per component whose interlacement graph is
/// exactly `g` (loops ignored), or `None` if `g` is not a circle graph.
///
/// Vertices of a component are inserted in breadth-first order; each
/// insertion must interlace exactly the earlier neighbours, and partial
/// diagrams equal up to rotation and reflection are explored once.
pub fn chord_diagram(g: &LoopedGraph) -> Result<Option<Vec<Vec<usize>>>> {
    let g = g.without_loops();
    let mut words = Vec::new();
    for comp in g.components() {
        guard(comp.len() <= MAX_ORACLE_ORDER, || {
            format!("chord-diagram search limited to {MAX_ORACLE_ORDER} vertices per component")
        })?;
        match realize_component(&g, &comp) {
            Some(w) => words.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(words))
}

fn realize_component(g: &LoopedGraph, comp: &[usize]) -> Option<Vec<usize>> {
    let mut order = vec![comp[0]];
    let mut placed = 1u64 << comp[0];
    let mut i = 0;
    while i < order.len() {
        for w in bits(g.neighbors(order[i]) & !placed) {
            placed |= 1 << w;
            order.push(w);
        }
        i += 1;
    }
    // earlier neighbours as masks over positions in `order`
    let need: Vec<u32> = (0..order.len())
        .map(|i| {
            (0..i)
                .filter(|&j| g.has_edge(order[i], order[j]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let mut seen = HashSet::new();
    let word = insert(&need, vec![0, 0], &mut seen)?;
    Some(word.into_iter().map(|x| order[x as usize]).collect())
}

fn canonical_cyclic(w: &[u8]) -> Vec<u8> {
    let n = w.len();
    let mut best: Option<Vec<u8>> = None;
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    for base in [w, &rev[..]] {
        for r in 0..n {
            let cand: Vec<u8> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn insert(need: &[u32], word: Vec<u8>, seen: &mut HashSet<Vec<u8>>) -> Option<Vec<u8>> {
    let level = word.len() / 2;
    if level == need.len() {
        return Some(word);
    }
    if !seen.insert(canonical_cyclic(&word)) {
        return None;
    }
    let len = word.len();
    let x = level as u8;
    // inserting at the very end is the cyclic twin of inserting at the start
    for p in 0..len {
        let mut between = 0u32;
        for q in p..=len {
            if q > p {
                between ^= 1 << word[q - 1];
            }
            if between != need[level] {
                continue;
            }
            let mut next = Vec::with_capacity(len + 2);
            next.extend_from_slice(&word[..p]);
            next.push(x);
            next.extend_from_slice(&word[p..q]);
            next.push(x);
            next.extend_from_slice(&word[q..]);
            if let Some(w) = insert(need, next, seen) {
                return Some(w);
            }
        }
    }
    None
}

pub fn obstructions() -> [(&'static str, LoopedGraph); 3] {
    [("W5", w5()), ("BW3", bw3()), ("W7", w7())]
}

/// First of `W5`, `BW3`, `W7` that is a vertex-minor of `g`.
pub fn find_obstruction(g: &LoopedGraph, cap: usize) -> Result<Option<Obstruction>> {
    let g = g.without_loops();
    if g.n() < 6 {
        return Ok(None);
    }
    let tree = OrbitTree::build(&g, Generators::SimpleLc, cap)?;
    for (name, h) in obstructions() {
        if h.n() <= g.n() {
            if let Some(witness) = vertex_minor_in_tree(&tree, &h) {
                return Ok(Some(Obstruction { name, witness }));
            }
        }
    }
    Ok(None)
}

fn dow_text(g: &LoopedGraph, words: &[Vec<usize>]) -> String {
    words
        .iter()
        .map(|w| w.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn is_circle(g: &LoopedGraph, method: Method) -> Result<RecognitionResult> {
    let simple = g.without_loops();
    let oracle = match method {
        Method::Oracle | Method::Both => {
            let words = chord_diagram(&simple)?;
            if let Some(w) = &words {
                let back = word_interlacement(simple.n(), w);
                if back != simple {
                    return Err(Error::Internal("chord diagram does not replay".into()));
                }
            }
            Some(words)
        }
        Method::Obstruction => None,
    };
    let obstruction = match method {
        Method::Obstruction | Method::Both => {
            let o = find_obstruction(&simple, DEFAULT_ORBIT_CAP)?;
            if let Some(o) = &o {
                let h = obstructions()
                    .into_iter()
                    .find(|(n, _)| *n == o.name)
                    .expect("known name")
                    .1;
                if !o.witness.replay(&simple)?.is_isomorphic(&h) {
                    return Err(Error::Internal(
                        "obstruction witness does not replay".into(),
                    ));
                }
            }
            Some(o)
        }
        Method::Oracle => None,
    };
    let verdict = match (&oracle, &obstruction) {
        (Some(w), Some(o)) => {
            if w.is_some() == o.is_some() {
                return Err(Error::Internal(
                    "oracle and obstruction methods disagree".into(),
                ));
            }
            Verdict::from_bool(w.is_some())
        }
        (Some(w), None) => Verdict::from_bool(w.is_some()),
        (None, Some(o)) => Verdict::from_bool(o.is_none()),
        (None, None) => unreachable!(),
    };
    Ok(RecognitionResult {
        verdict,
        method,
        dow: oracle.flatten().map(|w| dow_text(g, &w)),
        obstruction: obstruction.flatten(),
    })
}

pub fn is_circle_graph(g: &LoopedGraph) -> Result<bool> {
    Ok(chord_diagram(g)?.is_some())
}

fn orbit(g: &LoopedGraph) -> Result<OrbitTree> {
    OrbitTree::build(&g.without_loops(), Generators::SimpleLc, DEFAULT_ORBIT_CAP)
}

fn has_vertex_of_degree(g: &LoopedGraph, ok: impl Fn(usize) -> bool) -> bool {
    (0..g.n()).any(|v| ok(g.degree(v)))
}

fn adjacent_degree_two(g: &LoopedGraph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| u != v && g.degree(u) == 2 && g.degree(v) == 2)
}

/// All transverse matroids of `p`, in `pcs` order.
fn transverse_matroids(
    p: &IsotropicPresentation,
) -> impl Iterator<Item = (Transversal, BinaryMatroid)> + '_ {
    Transversal::all(p.n()).map(move |t| {
        let m = p.transverse_matroid(&t).expect("total transversal");
        (t, m)
    })
}

pub fn all_transverse_cographic(g: &LoopedGraph) -> Result<bool> {
    let p = ias_matroid(g)?;
    let mut cache: HashMap<Vec<u64>, bool> = HashMap::new();
    for (_, m) in transverse_matroids(&p) {
        let key = m.representation().column_masks();
        let ok = match cache.get(&key) {
            Some(&b) => b,
            None => {
                let b = m.class_test(MatroidClass::Cographic)?;
                cache.insert(key, b);
                b
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonempty vertex-minors of `g` with at most `max_n` vertices, one per
/// isomorphism class, in discovery order.
pub fn vertex_minor_classes(g: &LoopedGraph, max_n: usize) -> Result<Vec<LoopedGraph>> {
    let tree = orbit(g)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for node in &tree.nodes {
        let n = node.graph.n();
        for x in 1u64..(1 << n) {
            if x.count_ones() as usize > max_n {
                continue;
            }
            let keep: Vec<usize> = bits(x).collect();
            let h = node.graph.induced(&keep);
            if seen.insert(h.canonical_form().key) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Characterization {
    pub name: &'static str,
    pub applies: bool,
    pub conditions: Vec<(String, bool)>,
    /// The circle verdict the characterization implies, when it applies.
    pub implies_circle: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterizationReport {
    pub circle: bool,
    pub characterizations: Vec<Characterization>,
    pub consistent: bool,
}

struct MinorFacts {
    small: bool,
    loop_or_meeting_triangles: bool,
    split_triangles: bool,
    is_k44: bool,
    disjoint_circuits_not_alone: bool,
}

fn isotropic_minor_facts(h: &LoopedGraph, k44: &BinaryMatroid) -> Result<MinorFacts> {
    let p = ias_matroid(h)?;
    let m = p.matroid();
    let small = !p.transverse_circuits(2).is_empty();
    let triangles: Vec<Vec<usize>> = m
        .circuits_up_to(3)?
        .into_iter()
        .filter(|c| c.len() == 3)
        .collect();
    let meeting = triangles.iter().enumerate().any(|(i, a)| {
        triangles[i + 1..]
            .iter()
            .any(|b| a.iter().any(|e| b.contains(e)))
    });
    let loop_or_meeting_triangles = !m.loops().is_empty() || meeting;
    let transverse3 = p.transverse_circuits(3);
    let transverse3: Vec<&Transversal> = transverse3.iter().filter(|t| t.size() == 3).collect();
    let split_triangles = transverse3.iter().enumerate().any(|(i, a)| {
        transverse3[i + 1..].iter().any(|b| {
            a.0.iter()
                .zip(&b.0)
                .any(|(x, y)| x.is_some() && y.is_some() && x != y)
        })
    });
    let is_k44 = m.len() == k44.len() && m.is_isomorphic(k44)?.is_some();
    let mut disjoint_circuits_not_alone = true;
    if m.len() == 24 && !loop_or_meeting_triangles {
        for (_, t) in transverse_matroids(&p) {
            let c = t.circuits()?;
            let masks: Vec<u64> = c
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &e| m | 1 << e))
                .collect();
            let has_disjoint = masks
                .iter()
                .enumerate()
                .any(|(i, a)| masks[i + 1..].iter().any(|b| a & b == 0));
            if has_disjoint && masks.len() == 2 {
                disjoint_circuits_not_alone = false;
                break;
            }
        }
    }
    Ok(MinorFacts {
        small,
        loop_or_meeting_triangles,
        split_triangles,
        is_k44,
        disjoint_circuits_not_alone,
    })
}

/// Evaluates each characterization's conditions independently and checks
/// that all implied verdicts agree with the chord-diagram oracle.
pub fn characterization_report(g: &LoopedGraph) -> Result<CharacterizationReport> {
    let g = g.without_loops();
    let n = g.n();
    guard(n <= MAX_REPORT_ORDER, || {
        format!("characterization report limited to {MAX_REPORT_ORDER} vertices")
    })?;
    let circle = is_circle_graph(&g)?;
    let p = ias_matroid(&g)?;
    let tree = orbit(&g)?;
    let mut out = Vec::new();

    let tc3 = !p.transverse_circuits(3).is_empty();
    let low_degree = tree
        .nodes
        .iter()
        .any(|x| has_vertex_of_degree(&x.graph, |d| d <= 2));
    out.push(Characterization {
        name: "small circuits (at most 6 vertices)",
        applies: n <= 6,
        conditions: vec![
            ("circle graph".into(), circle),
            ("transverse circuit of size <= 3".into(), tc3),
            (
                "locally equivalent to a graph with a vertex of degree <= 2".into(),
                low_degree,
            ),
        ],
        implies_circle: (n <= 6).then_some(tc3),
    });

    let cographic = all_transverse_cographic(&g)?;
    let k44 = ias_matroid(&k44_interlacement())?.matroid().clone();
    let k44_key = k44_interlacement().canonical_form().key;
    let minors = vertex_minor_classes(&g, 8)?;
    // orbit id per vertex-minor class
    let mut orbit_of: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut orbits: Vec<OrbitTree> = Vec::new();
    // locally equivalent graphs have isomorphic isotropic matroids, so the
    // matroid facts are computed once per orbit
    let mut facts_cache: HashMap<usize, MinorFacts> = HashMap::new();
    let mut c2 = true;
    let mut c3 = true;
    let mut j1 = true;
    let mut j7 = true;
    let mut j8 = true;
    let mut j6 = true;
    for h in &minors {
        let key = h.canonical_form().key;
        let id = match orbit_of.get(&key) {
            Some(&id) => id,
            None => {
                let t = orbit(h)?;
                let id = orbits.len();
                for node in &t.nodes {
                    orbit_of.insert(node.key.clone(), id);
                }
                orbits.push(t);
                id
            }
        };
        let members = &orbits[id].nodes;
        let deg01 = members
            .iter()
            .any(|x| has_vertex_of_degree(&x.graph, |d| d <= 1));
        let adj2 = members.iter().any(|x| adjacent_degree_two(&x.graph));
        let all5 = members
            .iter()
            .all(|x| has_vertex_of_degree(&x.graph, |d| d == 5));
        let is_k44_class = members.iter().any(|x| x.key == k44_key);
        j6 &= deg01 || adj2 || all5;
        j8 &= is_k44_class || deg01 || adj2;
        if let std::collections::hash_map::Entry::Vacant(e) = facts_cache.entry(id) {
            e.insert(isotropic_minor_facts(h, &k44)?);
        }
        let f = &facts_cache[&id];
        if h.n() < 8 {
            c2 &= f.loop_or_meeting_triangles;
        } else if !f.loop_or_meeting_triangles {
            c3 &= f.disjoint_circuits_not_alone;
        }
        j1 &= f.loop_or_meeting_triangles || f.is_k44;
        j7 &= f.small || f.split_triangles || f.is_k44;
    }
    out.push(Characterization {
        name: "cographic transverse matroids and small isotropic minors",
        applies: true,
        conditions: vec![
            ("every transverse matroid is cographic".into(), cographic),
            ("isotropic minors of size < 24 have a loop or meeting 3-circuits".into(), c2),
            ("size-24 isotropic minors without them have no transverse matroid with exactly two disjoint circuits".into(), c3),
        ],
        implies_circle: Some(cographic && c2 && c3),
    });
    out.push(Characterization {
        name: "cographic transverse matroids and the K4,4 transition matroid",
        applies: true,
        conditions: vec![
            ("every transverse matroid is cographic".into(), cographic),
            ("isotropic minors of size <= 24 without a loop or meeting 3-circuits are the K4,4 transition matroid".into(), j1),
        ],
        implies_circle: Some(cographic && j1),
    });
    out.push(Characterization {
        name: "transverse 3-circuits of isotropic minors",
        applies: true,
        conditions: vec![("every isotropic minor of size <= 24 has a transverse circuit of size <= 2, two transverse 3-circuits in no common transversal, or is the K4,4 transition matroid".into(), j7)],
        implies_circle: Some(j7),
    });
    out.push(Characterization {
        name: "low degrees in vertex-minors",
        applies: true,
        conditions: vec![("every vertex-minor on <= 8 vertices outside the K4,4 class has an equivalent graph with a vertex of degree <= 1 or adjacent degree-2 vertices".into(), j8)],
        implies_circle: Some(j8),
    });
    out.push(Characterization {
        name: "degree conditions in vertex-minors",
        applies: true,
        conditions: vec![("every vertex-minor on <= 8 vertices has an equivalent graph with a vertex of degree <= 1 or adjacent degree-2 vertices, or all its equivalents have a degree-5 vertex".into(), j6)],
        implies_circle: Some(j6),
    });

    let bipartite = tree.nodes.iter().any(|x| x.graph.bipartition().is_some());
    let no_bw = {
        let a = vertex_minor_in_tree(&tree, &bw3()).is_none();
        let b = bw4().n() > n || vertex_minor_in_tree(&tree, &bw4()).is_none();
        a && b
    };
    out.push(Characterization {
        name: "bipartite equivalents",
        applies: bipartite,
        conditions: vec![
            ("locally equivalent to a bipartite graph".into(), bipartite),
            ("every transverse matroid is cographic".into(), cographic),
            ("neither BW3 nor BW4 is a vertex-minor".into(), no_bw),
        ],
        implies_circle: bipartite.then_some(cographic),
    });

    let planar = planar_realizability(&g)?.is_some();
    out.push(Characterization {
        name: "planar realizability",
        applies: true,
        conditions: vec![
            (
                "disjoint transversals with rank sum n and planar union".into(),
                planar,
            ),
            (
                "bipartite equivalent and every transverse matroid cographic".into(),
                bipartite && cographic,
            ),
        ],
        implies_circle: planar.then_some(true),
    });

    let consistent = out.iter().all(|c| {
        let agree = c.implies_circle.is_none_or(|v| v == circle);
        let internal = match c.name {
            "small circuits (at most 6 vertices)" | "planar realizability" => {
                !c.applies || c.conditions.iter().all(|x| x.1 == c.conditions[0].1)
            }
            "bipartite equivalents" => !c.applies || (c.conditions[1].1 == c.conditions[2].1),
            _ => true,
        };
        agree && internal
    });
    Ok(CharacterizationReport {
        circle,
        characterizations: out,
        consistent,
    })
}

fn transversal_ranks(p: &IsotropicPresentation) -> Vec<usize> {
    Transversal::all(p.n())
        .map(|t| p.rank_of(&t.elements()))
        .collect()
}

fn index_of(t: &[u8]) -> usize {
    t.iter().fold(0, |k, &l| 3 * k + l as usize)
}

/// Calls `f(i, j)` for every ordered pair of disjoint transversals, as
/// indices into `Transversal::all`, until it returns true.
fn disjoint_pairs(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> bool {
    for t in Transversal::all(n) {
        let a: Vec<u8> = t.0.iter().map(|x| x.unwrap()).collect();
        let i = index_of(&a);
        for mask in 0u32..(1 << n) {
            let b: Vec<u8> = (0..n)
                .map(|v| (a[v] + 1 + (mask >> v & 1) as u8) % 3)
                .collect();
            if f(i, index_of(&b)) {
                return true;
            }
        }
    }
    false
}

fn nth_transversal(n: usize, mut k: usize) -> Transversal {
    let mut t = vec![0u8; n];
    for v in (0..n).rev() {
        t[v] = (k % 3) as u8;
        k /= 3;
    }
    Transversal::total(t)
}

/// Disjoint transversals with `r(T1) + r(T2) = n` whose union is a planar
/// matroid, if any.
///
/// With that rank sum the union spans everything in rank `n`, so it is the
/// direct sum of the two transverse matroids and is planar exactly when both
/// are.
pub fn planar_realizability(g: &LoopedGraph) -> Result<Option<(Transversal, Transversal)>> {
    let g = g.without_loops();
    let n = g.n();
    guard(n <= MAX_PAIR_ORDER, || {
        format!("transversal pair search limited to {MAX_PAIR_ORDER} vertices")
    })?;
    let p = ias_matroid(&g)?;
    let ranks = transversal_ranks(&p);
    let mut planar: HashMap<usize, bool> = HashMap::new();
    let mut err = None;
    let mut found = None;
    disjoint_pairs(n, |i, j| {
        if ranks[i] + ranks[j] != n {
            return false;
        }
        for k in [i, j] {
            if let std::collections::hash_map::Entry::Vacant(e) = planar.entry(k) {
                let m = p.transverse_matroid(&nth_transversal(n, k)).expect("total");
                match m.class_test(MatroidClass::Planar) {
                    Ok(b) => {
                        e.insert(b);
                    }
                    Err(e) => {
                        err = Some(e);
                        return true;
                    }
                }
            }
        }
        if planar[&i] && planar[&j] {
            found = Some((nth_transversal(n, i), nth_transversal(n, j)));
            return true;
        }
        false
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingBound {
    /// `min r(T1) + r(T2) - n` over disjoint transversal pairs, raised to 2
    /// by the refinement when no pair at 1 has a planar union.
    pub bound: usize,
    pub raw: usize,
    pub refined: bool,
    pub witness: (Transversal, Transversal),
}

pub fn crossing_lower_bound(g: &LoopedGraph, refine: bool) -> Result<CrossingBound> {
    let g = g.without_loops();
    let n = g.n();
    guard(n <= MAX_PAIR_ORDER, || {
        format!("transversal pair search limited to {MAX_PAIR_ORDER} vertices")
    })?;
    let p = ias_matroid(&g)?;
    let ranks = transversal_ranks(&p);
    let mut best = (usize::MAX, 0, 0);
    disjoint_pairs(n, |i, j| {
        let s = ranks[i] + ranks[j];
        if s < best.0 {
            best = (s, i, j);
        }
        false
    });
    let raw = best.0 - n;
    let mut witness = (nth_transversal(n, best.1), nth_transversal(n, best.2));
    let mut bound = raw;
    if refine && raw == 1 {
        let mut tried = HashSet::new();
        let mut err = None;
        let mut hit = None;
        disjoint_pairs(n, |i, j| {
            if ranks[i] + ranks[j] != n + 1 || !tried.insert((i.min(j), i.max(j))) {
                return false;
            }
            let mut elems = nth_transversal(n, i).elements();
            elems.extend(nth_transversal(n, j).elements());
            elems.sort_unstable();
            match p
                .matroid()
                .restrict(&elems)
                .class_test(MatroidClass::Planar)
            {
                Ok(true) => {
                    hit = Some((i, j));
                    true
                }
                Ok(false) => false,
                Err(e) => {
                    err = Some(e);
                    true
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        match hit {
            Some((i, j)) => witness = (nth_transversal(n, i), nth_transversal(n, j)),
            None => bound = 2,
        }
    }
    Ok(CrossingBound {
        bound,
        raw,
        refined: refine,
        witness,
    })
}

/// Vertex-minor test against every obstruction, for callers that only need
/// the boolean.
pub fn has_obstruction(g: &LoopedGraph) -> Result<bool> {
    for (_, h) in obstructions() {
        if is_vertex_minor(&g.without_loops(), &h, DEFAULT_ORBIT_CAP)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn require_simple(g: &LoopedGraph) -> Result<()> {
    require(g.is_simple(), || "graph has loops".into())
}
