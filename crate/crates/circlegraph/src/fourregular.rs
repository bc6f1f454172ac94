//! 4-regular multigraphs at half-edge resolution.
//!
//! Edge `e` owns half-edges `2e` and `2e + 1`; the twin of `h` is `h ^ 1`.
//! At a vertex with sorted incident half-edges `[h0, h1, h2, h3]` the three
//! transitions are indexed
//!
//! * 0: `{h0,h1} {h2,h3}`
//! * 1: `{h0,h2} {h1,h3}`
//! * 2: `{h0,h3} {h1,h2}`
//!
//! An Euler system (and any circuit partition) is just one transition index per
//! vertex; the circuits are recovered by tracing.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::algebra::Gf2Matrix;
use crate::canon::CanonicalForm;
use crate::error::{guard, require, Error, Result};
use crate::graphs::{LoopedGraph, Multigraph};

/// Transition letters relative to an Euler system.
pub const PHI: u8 = 0;
pub const CHI: u8 = 1;
pub const PSI: u8 = 2;

pub const MAX_ENUMERATION_ORDER: usize = 10;
pub const MAX_EULER_ENUMERATION: usize = 12;

/// Numeric tokens first (by value), then the rest lexicographically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let num = |s: &str| -> Option<u128> {
        if !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit()) {
            s.parse().ok()
        } else {
            None
        }
    };
    match (num(a), num(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FourRegularGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 4]>,
}

impl fmt::Debug for FourRegularGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FourRegularGraph(n={}, edges={:?})",
            self.n(),
            self.edges
        )
    }
}

impl FourRegularGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_names((0..n).map(|v| v.to_string()).collect(), edges)
    }

    pub fn with_names(names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        let distinct: HashSet<&String> = names.iter().collect();
        require(distinct.len() == n, || "duplicate vertex names".into())?;
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Dimension(format!("edge ({a},{b}) outside 0..{n}")));
            }
            inc[a].push(2 * e);
            inc[b].push(2 * e + 1);
        }
        let mut incidence = Vec::with_capacity(n);
        for (v, hs) in inc.into_iter().enumerate() {
            if hs.len() != 4 {
                return Err(Error::Precondition(format!(
                    "vertex {} has degree {}, expected 4",
                    names[v],
                    hs.len()
                )));
            }
            incidence.push([hs[0], hs[1], hs[2], hs[3]]);
        }
        Ok(FourRegularGraph {
            names,
            edges,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::Unknown(format!("vertex {name}")))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn half_edges(&self, v: usize) -> [usize; 4] {
        self.incidence[v]
    }

    pub fn vertex_of_half(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    /// Half-edge ids as written in files: `<edge>.<0|1>`.
    pub fn half_name(h: usize) -> String {
        format!("{}.{}", h / 2, h % 2)
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::new(self.n(), self.edges.clone()).expect("edges in range")
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.to_multigraph().canonical_form()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.to_multigraph().is_isomorphic(&other.to_multigraph())
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    /// Vertex sets of the connected components, in order of least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.to_multigraph().components()
    }

    fn component_of(&self) -> (Vec<usize>, usize) {
        let comps = self.components();
        let mut of = vec![0; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                of[v] = i;
            }
        }
        (of, comps.len())
    }

    /// The two pairs of transition `t` at `v`.
    pub fn transition_pairs(&self, v: usize, t: u8) -> [(usize, usize); 2] {
        let [h0, h1, h2, h3] = self.incidence[v];
        match t {
            0 => [(h0, h1), (h2, h3)],
            1 => [(h0, h2), (h1, h3)],
            2 => [(h0, h3), (h1, h2)],
            _ => panic!("transition index {t} out of range"),
        }
    }

    /// Index of the transition at `v` that pairs `a` with `b`.
    pub fn transition_index(&self, v: usize, a: usize, b: usize) -> u8 {
        let inc = self.incidence[v];
        let pos = |h: usize| {
            inc.iter()
                .position(|&x| x == h)
                .expect("half-edge not at vertex")
        };
        let (pa, pb) = (pos(a), pos(b));
        debug_assert_ne!(pa, pb);
        let other = if pa == 0 {
            pb
        } else if pb == 0 {
            pa
        } else {
            6 - pa - pb
        };
        (other - 1) as u8
    }

    fn mates(&self, choice: &[u8]) -> Vec<usize> {
        let mut mate = vec![0; 2 * self.edges.len()];
        for v in 0..self.n() {
            for (a, b) in self.transition_pairs(v, choice[v]) {
                mate[a] = b;
                mate[b] = a;
            }
        }
        mate
    }

    /// Circuits obtained by following `choice[v]` at every vertex.
    pub fn trace(&self, choice: &[u8]) -> Vec<Circuit> {
        assert_eq!(choice.len(), self.n());
        let mate = self.mates(choice);
        let mut used = vec![false; mate.len()];
        let mut out = Vec::new();
        for start in 0..mate.len() {
            if used[start] {
                continue;
            }
            let mut steps = Vec::new();
            let mut h = start;
            loop {
                used[h] = true;
                let inn = h ^ 1;
                used[inn] = true;
                let next = mate[inn];
                steps.push(Step {
                    vertex: self.vertex_of_half(inn),
                    in_half: inn,
                    out_half: next,
                });
                if next == start {
                    break;
                }
                h = next;
            }
            out.push(Circuit { steps });
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub vertex: usize,
    pub in_half: usize,
    pub out_half: usize,
}

/// A closed trail as the sequence of vertex passages.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub steps: Vec<Step>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Least rotation over both orientations.
    pub fn normalized(&self) -> Circuit {
        let fwd = self.steps.clone();
        let rev: Vec<Step> = self
            .steps
            .iter()
            .rev()
            .map(|s| Step {
                vertex: s.vertex,
                in_half: s.out_half,
                out_half: s.in_half,
            })
            .collect();
        let mut best: Option<Vec<Step>> = None;
        for seq in [fwd, rev] {
            for r in 0..seq.len().max(1) {
                let mut cand = seq.clone();
                cand.rotate_left(r.min(seq.len()));
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Circuit {
            steps: best.unwrap_or_default(),
        }
    }

    /// The transition at each passed vertex that contains the circuit's
    /// single transitions there; `None` if two passages at one vertex fail to
    /// form a transition (cannot happen in a 4-regular graph).
    pub fn transitions(&self, f: &FourRegularGraph) -> Vec<(usize, u8)> {
        let mut out: Vec<(usize, u8)> = Vec::new();
        for s in &self.steps {
            let t = f.transition_index(s.vertex, s.in_half, s.out_half);
            if !out.contains(&(s.vertex, t)) {
                out.push((s.vertex, t));
            }
        }
        out.sort_unstable();
        out
    }
}

/// One transition index per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircuitPartition {
    pub choice: Vec<u8>,
}

impl CircuitPartition {
    pub fn circuits(&self, f: &FourRegularGraph) -> Vec<Circuit> {
        f.trace(&self.choice)
    }

    /// All `3^n` circuit partitions.
    pub fn all(f: &FourRegularGraph) -> Result<Vec<CircuitPartition>> {
        let n = f.n();
        guard(n <= MAX_EULER_ENUMERATION, || {
            format!("3^{n} circuit partitions is beyond the guard")
        })?;
        let mut out = Vec::with_capacity(3usize.pow(n as u32));
        let mut choice = vec![0u8; n];
        loop {
            out.push(CircuitPartition {
                choice: choice.clone(),
            });
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(out);
                }
                choice[i] += 1;
                if choice[i] < 3 {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct EulerSystem {
    graph: FourRegularGraph,
    choice: Vec<u8>,
    circuits: Vec<Circuit>,
    /// Per vertex, `[(in1, out1), (in2, out2)]` along its circuit.
    passages: Vec<[(usize, usize); 2]>,
    /// Per vertex, the transition index carrying each letter.
    letters: Vec<[u8; 3]>,
}

impl fmt::Debug for EulerSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EulerSystem({})", self.dow_string().replace('\n', " | "))
    }
}

impl EulerSystem {
    /// Fails unless `choice` yields exactly one circuit per component.
    pub fn from_choice(graph: &FourRegularGraph, choice: Vec<u8>) -> Result<Self> {
        if choice.len() != graph.n() || choice.iter().any(|&t| t > 2) {
            return Err(Error::Dimension(
                "transition choice does not match the graph".into(),
            ));
        }
        let circuits = graph.trace(&choice);
        let (_, comps) = graph.component_of();
        require(circuits.len() == comps, || {
            format!(
                "{} circuits for {} components: not an Euler system",
                circuits.len(),
                comps
            )
        })?;
        let n = graph.n();
        let mut seen = vec![0usize; n];
        let mut passages = vec![[(0, 0); 2]; n];
        for c in &circuits {
            for s in &c.steps {
                passages[s.vertex][seen[s.vertex]] = (s.in_half, s.out_half);
                seen[s.vertex] += 1;
            }
        }
        let letters = (0..n)
            .map(|v| {
                let [(i1, o1), (i2, o2)] = passages[v];
                [
                    graph.transition_index(v, i1, o1),
                    graph.transition_index(v, i1, o2),
                    graph.transition_index(v, i1, i2),
                ]
            })
            .collect();
        Ok(EulerSystem {
            graph: graph.clone(),
            choice,
            circuits,
            passages,
            letters,
        })
    }

    pub fn graph(&self) -> &FourRegularGraph {
        &self.graph
    }

    pub fn choice(&self) -> &[u8] {
        &self.choice
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn passages(&self, v: usize) -> [(usize, usize); 2] {
        self.passages[v]
    }

    /// Transition index at `v` labeled `letter` (`PHI`, `CHI` or `PSI`).
    pub fn transition(&self, v: usize, letter: u8) -> u8 {
        self.letters[v][letter as usize]
    }

    /// Letter of transition index `t` at `v`.
    pub fn letter(&self, v: usize, t: u8) -> u8 {
        self.letters[v]
            .iter()
            .position(|&x| x == t)
            .expect("three distinct transitions") as u8
    }

    /// Words as vertex indices, one per component, in traced order.
    pub fn words(&self) -> Vec<Vec<usize>> {
        self.circuits.iter().map(|c| c.vertices()).collect()
    }

    /// Each word rotated/reflected to its least form over vertex names, then
    /// sorted, for comparing systems presented differently.
    pub fn normalized_words(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .words()
            .iter()
            .map(|w| {
                let names: Vec<String> = w.iter().map(|&v| self.graph.names[v].clone()).collect();
                let mut best: Option<Vec<String>> = None;
                let mut rev = names.clone();
                rev.reverse();
                for seq in [names, rev] {
                    for r in 0..seq.len() {
                        let mut c = seq.clone();
                        c.rotate_left(r);
                        if best.as_ref().is_none_or(|b| c < *b) {
                            best = Some(c);
                        }
                    }
                }
                best.unwrap_or_default()
            })
            .collect();
        out.sort();
        out
    }

    pub fn dow_string(&self) -> String {
        self.words()
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&v| self.graph.names[v].as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Parses a DOW file: one component word per line, tokens separated by
/// whitespace, `#` starts a comment. Vertices are indexed in natural order of
/// their names. Edge `i` of a word runs from letter `i` to letter `i + 1`.
pub fn parse_dow(text: &str) -> Result<EulerSystem> {
    let words: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .filter(|w| !w.is_empty())
        .collect();
    dow_from_words(&words)
}

pub fn dow_from_words<S: AsRef<str>>(words: &[Vec<S>]) -> Result<EulerSystem> {
    let mut count: HashMap<&str, usize> = HashMap::new();
    let mut line_of: HashMap<&str, usize> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        for t in w {
            let t = t.as_ref();
            *count.entry(t).or_default() += 1;
            if let Some(&j) = line_of.get(t) {
                if j != i {
                    return Err(Error::Parse(format!("vertex {t} appears in two words")));
                }
            }
            line_of.insert(t, i);
        }
    }
    if let Some((t, c)) = count.iter().find(|(_, &c)| c != 2) {
        return Err(Error::Parse(format!(
            "vertex {t} appears {c} times, expected 2"
        )));
    }
    let mut names: Vec<String> = count.keys().map(|s| s.to_string()).collect();
    names.sort_by(|a, b| natural_cmp(a, b));
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut edges = Vec::new();
    let mut passes: Vec<(usize, usize, usize)> = Vec::new();
    for w in words {
        let base = edges.len();
        let m = w.len();
        for i in 0..m {
            edges.push((index[w[i].as_ref()], index[w[(i + 1) % m].as_ref()]));
        }
        for i in 0..m {
            let prev = base + (i + m - 1) % m;
            passes.push((index[w[i].as_ref()], 2 * prev + 1, 2 * (base + i)));
        }
    }
    let graph = FourRegularGraph::with_names(names, edges)?;
    let mut choice = vec![0u8; graph.n()];
    for (v, a, b) in passes {
        choice[v] = graph.transition_index(v, a, b);
    }
    EulerSystem::from_choice(&graph, choice)
}

/// Interlacement graph of a set of cyclic words over letters `0..n`.
pub fn word_interlacement(n: usize, words: &[Vec<usize>]) -> LoopedGraph {
    let mut g = LoopedGraph::new(n);
    for w in words {
        let mut pos: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &v) in w.iter().enumerate() {
            pos.entry(v).or_default().push(i);
        }
        let letters: Vec<(usize, usize, usize)> = pos
            .into_iter()
            .filter(|(_, p)| p.len() == 2)
            .map(|(v, p)| (v, p[0], p[1]))
            .collect();
        for (i, &(v, a1, a2)) in letters.iter().enumerate() {
            for &(u, b1, b2) in &letters[i + 1..] {
                let inside = |x: usize| a1 < x && x < a2;
                if inside(b1) != inside(b2) {
                    g.set_edge(v, u, true);
                }
            }
        }
    }
    g
}

pub fn interlacement(c: &EulerSystem) -> LoopedGraph {
    word_interlacement(c.graph.n(), &c.words())
        .with_names(c.graph.names.clone())
        .expect("names are distinct")
}

/// Reverses one `v`-to-`v` walk: the transition at `v` becomes its `PSI`.
pub fn kappa_transform(c: &EulerSystem, v: usize) -> Result<EulerSystem> {
    if v >= c.graph.n() {
        return Err(Error::Unknown(format!("vertex {v}")));
    }
    let mut choice = c.choice.clone();
    choice[v] = c.transition(v, PSI);
    EulerSystem::from_choice(&c.graph, choice)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerMode {
    One,
    All,
}

pub fn euler_systems(f: &FourRegularGraph, mode: EulerMode) -> Result<Vec<EulerSystem>> {
    let (_, comps) = f.component_of();
    match mode {
        EulerMode::One => {
            let mut choice = vec![0u8; f.n()];
            loop {
                let circuits = f.trace(&choice);
                if circuits.len() == comps {
                    return Ok(vec![EulerSystem::from_choice(f, choice)?]);
                }
                // splice two circuits at a vertex where they meet
                let mut owner = vec![usize::MAX; f.n()];
                let mut site = None;
                'scan: for (i, c) in circuits.iter().enumerate() {
                    for s in &c.steps {
                        if owner[s.vertex] != usize::MAX && owner[s.vertex] != i {
                            site = Some(s.vertex);
                            break 'scan;
                        }
                        owner[s.vertex] = i;
                    }
                }
                let v = site.ok_or_else(|| {
                    Error::Internal("no splice site in a connected component".into())
                })?;
                choice[v] = (choice[v] + 1) % 3;
            }
        }
        EulerMode::All => {
            let n = f.n();
            guard(n <= MAX_EULER_ENUMERATION, || {
                format!("3^{n} transition choices is beyond the guard")
            })?;
            let mut out = Vec::new();
            for p in CircuitPartition::all(f)? {
                if f.trace(&p.choice).len() == comps {
                    out.push(EulerSystem::from_choice(f, p.choice)?);
                }
            }
            Ok(out)
        }
    }
}

/// Closure of `c` under kappa-transforms.
pub fn kappa_orbit(c: &EulerSystem) -> Result<Vec<EulerSystem>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::from([c.choice.clone()]);
    let mut out = vec![c.clone()];
    let mut i = 0;
    while i < out.len() {
        for v in 0..c.graph.n() {
            let d = kappa_transform(&out[i], v)?;
            if seen.insert(d.choice.clone()) {
                out.push(d);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Columns of `IAS(interlacement(c))` selected by `p`'s transitions.
pub fn transition_matrix(c: &EulerSystem, p: &CircuitPartition) -> Result<Gf2Matrix> {
    let n = c.graph.n();
    if p.choice.len() != n {
        return Err(Error::Dimension(
            "circuit partition does not match the graph".into(),
        ));
    }
    let g = interlacement(c);
    let mut cols = Vec::with_capacity(n);
    for v in 0..n {
        let unit = 1u64 << v;
        cols.push(match c.letter(v, p.choice[v]) {
            PHI => unit,
            CHI => g.neighbors(v),
            _ => g.neighbors(v) | unit,
        });
    }
    Ok(Gf2Matrix::from_column_masks(n, &cols))
}

/// `3n` columns, column `3v + t` representing transition `t` at `v`.
pub fn transition_matroid_matrix(c: &EulerSystem) -> Gf2Matrix {
    let n = c.graph.n();
    let g = interlacement(c);
    let mut cols = vec![0u64; 3 * n];
    for v in 0..n {
        for t in 0..3u8 {
            let unit = 1u64 << v;
            cols[3 * v + t as usize] = match c.letter(v, t) {
                PHI => unit,
                CHI => g.neighbors(v),
                _ => g.neighbors(v) | unit,
            };
        }
    }
    Gf2Matrix::from_column_masks(n, &cols)
}

pub struct TouchGraph {
    pub circuits: Vec<Circuit>,
    /// Edge `v` is the vertex `v` of the 4-regular graph.
    pub graph: Multigraph,
}

pub fn touch_graph(f: &FourRegularGraph, p: &CircuitPartition) -> TouchGraph {
    let circuits = p.circuits(f);
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); f.n()];
    for (i, c) in circuits.iter().enumerate() {
        for s in &c.steps {
            at[s.vertex].push(i);
        }
    }
    let edges = at.iter().map(|cs| (cs[0], cs[1])).collect();
    TouchGraph {
        graph: Multigraph::new(circuits.len(), edges).expect("in range"),
        circuits,
    }
}

/// Removes `v` and glues its half-edges along transition `t`, discarding
/// closed loops left at `v`. Surviving edges keep their order; new edges follow.
pub fn detach(f: &FourRegularGraph, v: usize, t: u8) -> Result<FourRegularGraph> {
    if v >= f.n() {
        return Err(Error::Unknown(format!("vertex {v}")));
    }
    if t > 2 {
        return Err(Error::Precondition(format!("transition index {t}")));
    }
    let remap = |u: usize| if u > v { u - 1 } else { u };
    let mut edges: Vec<(usize, usize)> = f
        .edges
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (remap(a), remap(b)))
        .collect();
    let mut mate = HashMap::new();
    for (a, b) in f.transition_pairs(v, t) {
        mate.insert(a, b);
        mate.insert(b, a);
    }
    let mut used = HashSet::new();
    for &y in &f.incidence[v] {
        if used.contains(&y) || f.vertex_of_half(y ^ 1) == v {
            continue;
        }
        used.insert(y);
        let mut z = mate[&y];
        used.insert(z);
        while f.vertex_of_half(z ^ 1) == v {
            let y2 = z ^ 1;
            used.insert(y2);
            z = mate[&y2];
            used.insert(z);
        }
        edges.push((
            remap(f.vertex_of_half(y ^ 1)),
            remap(f.vertex_of_half(z ^ 1)),
        ));
    }
    let names = f
        .names
        .iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, s)| s.clone())
        .collect();
    FourRegularGraph::with_names(names, edges)
}

/// 4-regular graphs on `n` vertices up to isomorphism, sorted by canonical key.
/// Loops and parallel edges are allowed unless `simple_only`.
pub fn enumerate_four_regular(n: usize, simple_only: bool) -> Result<Vec<FourRegularGraph>> {
    guard(n <= MAX_ENUMERATION_ORDER, || {
        format!("order {n} exceeds the enumeration guard {MAX_ENUMERATION_ORDER}")
    })?;
    let mut found: HashMap<Vec<u8>, Vec<u8>> = HashMap::new();
    let mut w = vec![0u8; n * n];
    let mut residual = vec![4u8; n];
    enumerate_rows(n, simple_only, 0, &mut w, &mut residual, &mut found);
    let mut keys: Vec<(Vec<u8>, Vec<u8>)> = found.into_iter().collect();
    keys.sort();
    keys.into_iter()
        .map(|(_, w)| {
            let mut edges = Vec::new();
            for i in 0..n {
                for _ in 0..w[i * n + i] {
                    edges.push((i, i));
                }
                for j in i + 1..n {
                    for _ in 0..w[i * n + j] {
                        edges.push((i, j));
                    }
                }
            }
            FourRegularGraph::new(n, edges)
        })
        .collect()
}

fn enumerate_rows(
    n: usize,
    simple: bool,
    i: usize,
    w: &mut Vec<u8>,
    residual: &mut Vec<u8>,
    found: &mut HashMap<Vec<u8>, Vec<u8>>,
) {
    if i == n {
        let key = crate::canon::canonical_form(n, w).key;
        found.entry(key).or_insert_with(|| w.clone());
        return;
    }
    let max_loops = if simple { 0 } else { residual[i] / 2 };
    for loops in 0..=max_loops {
        w[i * n + i] = loops;
        residual[i] -= 2 * loops;
        fill_row(n, simple, i, i + 1, w, residual, found);
        residual[i] += 2 * loops;
        w[i * n + i] = 0;
    }
}

fn fill_row(
    n: usize,
    simple: bool,
    i: usize,
    j: usize,
    w: &mut Vec<u8>,
    residual: &mut Vec<u8>,
    found: &mut HashMap<Vec<u8>, Vec<u8>>,
) {
    if residual[i] == 0 {
        enumerate_rows(n, simple, i + 1, w, residual, found);
        return;
    }
    if j == n {
        return;
    }
    let capacity: u32 = (j..n).map(|k| if simple { residual[k].min(1) } else { residual[k] } as u32).sum();
    if capacity < residual[i] as u32 {
        return;
    }
    // j and j-1 are interchangeable if their columns agree on rows before i;
    // then j may not receive more than j-1 did.
    let twin = j > i + 1 && (0..i).all(|r| w[r * n + j] == w[r * n + j - 1]);
    let mut hi = residual[i].min(residual[j]);
    if simple {
        hi = hi.min(1);
    }
    if twin {
        hi = hi.min(w[i * n + j - 1]);
    }
    for m in (0..=hi).rev() {
        w[i * n + j] = m;
        w[j * n + i] = m;
        residual[i] -= m;
        residual[j] -= m;
        fill_row(n, simple, i, j + 1, w, residual, found);
        residual[i] += m;
        residual[j] += m;
    }
    w[i * n + j] = 0;
    w[j * n + i] = 0;
}

/// A multigraph with a cyclic order of half-edges around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    n: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::Dimension(format!(
                "{} rotations for {n} vertices",
                rotation.len()
            )));
        }
        let mut seen = vec![false; 2 * edges.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for &h in rot {
                if h >= seen.len() {
                    return Err(Error::Parse(format!(
                        "half-edge {} does not exist",
                        FourRegularGraph::half_name(h)
                    )));
                }
                let (a, b) = edges[h / 2];
                let owner = if h % 2 == 0 { a } else { b };
                require(owner == v && !seen[h], || {
                    format!(
                        "half-edge {} misplaced in rotation at {v}",
                        FourRegularGraph::half_name(h)
                    )
                })?;
                seen[h] = true;
            }
        }
        require(seen.iter().all(|&s| s), || {
            "rotation system misses a half-edge".into()
        })?;
        Ok(RotationSystem { n, edges, rotation })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn vertex_of_half(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    /// `succ[h]`: the half-edge after `h` in the rotation at its vertex.
    pub fn successor(&self) -> Vec<usize> {
        let mut succ = vec![0; 2 * self.edges.len()];
        for rot in &self.rotation {
            for (i, &h) in rot.iter().enumerate() {
                succ[h] = rot[(i + 1) % rot.len()];
            }
        }
        succ
    }

    /// Face boundaries, each as the cycle of half-edges leaving along it.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let succ = self.successor();
        let mut seen = vec![false; succ.len()];
        let mut faces = Vec::new();
        for s in 0..succ.len() {
            if seen[s] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = succ[h ^ 1];
            }
            faces.push(face);
        }
        faces
    }

    /// Rotations read off a straight-line drawing: half-edges at each vertex
    /// in counterclockwise order of direction.
    pub fn from_coordinates(points: &[(f64, f64)], edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = points.len();
        let mut rotation: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            require(a < n && b < n && a != b, || {
                format!("edge {e} is not a straight segment")
            })?;
            for (h, x, y) in [(2 * e, a, b), (2 * e + 1, b, a)] {
                let (dx, dy) = (points[y].0 - points[x].0, points[y].1 - points[x].1);
                rotation[x].push((dy.atan2(dx), h));
            }
        }
        let rotation = rotation
            .into_iter()
            .map(|mut r| {
                r.sort_by(|p, q| p.0.total_cmp(&q.0));
                r.into_iter().map(|(_, h)| h).collect()
            })
            .collect();
        Self::new(n, edges, rotation)
    }

    /// Euler characteristic 2 on every component.
    pub fn is_planar(&self) -> bool {
        let m = Multigraph::new(self.n, self.edges.clone()).expect("in range");
        let comps = m.components().len() as i64;
        let isolated = (0..self.n).filter(|&v| self.rotation[v].is_empty()).count() as i64;
        let f = self.faces().len() as i64 + isolated;
        self.n as i64 - self.edges.len() as i64 + f == 2 * comps
    }
}

/// Walks around a thin neighbourhood of the spanning tree `tree` (edge
/// indices), naming each tree edge on both sides and each non-tree edge at
/// each of its ends.
pub fn boundary_trace(h: &RotationSystem, tree: &[usize]) -> Result<Vec<usize>> {
    let m = Multigraph::new(h.n, h.edges.clone())?;
    require(h.n > 0 && m.components().len() == 1, || {
        "boundary trace needs a connected graph".into()
    })?;
    require(h.is_planar(), || "rotation system is not planar".into())?;
    let in_tree: HashSet<usize> = tree.iter().copied().collect();
    let tree_graph = Multigraph::new(h.n, tree.iter().map(|&e| h.edges[e]).collect())?;
    require(
        in_tree.len() == tree.len()
            && tree.len() + 1 == h.n
            && tree.iter().all(|&e| e < h.edges.len())
            && tree_graph.components().len() == 1,
        || "edge set is not a spanning tree".into(),
    )?;
    let mut word = Vec::with_capacity(2 * h.edges.len());
    // explicit stack of (vertex, entry position, next offset)
    let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(0, None, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, entry, k) = *top;
        let rot = &h.rotation[v];
        let (start, count) = match entry {
            Some(p) => (p + 1, rot.len() - 1),
            None => (0, rot.len()),
        };
        if k == count {
            stack.pop();
            if let Some(p) = entry {
                word.push(rot[p] / 2);
            }
            continue;
        }
        top.2 += 1;
        let x = rot[(start + k) % rot.len()];
        word.push(x / 2);
        if in_tree.contains(&(x / 2)) {
            let y = x ^ 1;
            let w = h.vertex_of_half(y);
            let p = h.rotation[w]
                .iter()
                .position(|&z| z == y)
                .expect("half-edge in rotation");
            stack.push((w, Some(p), 0));
        }
    }
    Ok(word)
}

/// Edges of the fundamental circuit of non-tree edge `e` with respect to `tree`.
pub fn fundamental_circuit(h: &RotationSystem, tree: &[usize], e: usize) -> Vec<usize> {
    let (a, b) = h.edges[e];
    // parent pointers of the tree rooted at `a`
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; h.n];
    let mut seen = vec![false; h.n];
    seen[a] = true;
    let mut queue = vec![a];
    while let Some(x) = queue.pop() {
        for &t in tree {
            let (u, v) = h.edges[t];
            for (p, q) in [(u, v), (v, u)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    parent[q] = Some((x, t));
                    queue.push(q);
                }
            }
        }
    }
    let mut out = vec![e];
    let mut x = b;
    while let Some((p, t)) = parent[x] {
        out.push(t);
        x = p;
    }
    out.sort_unstable();
    out
}

/// The three properties a tree-boundary word must have: a double
/// occurrence word over `E(h)`, interlacement bipartite between tree and
/// non-tree edges, and each chord's closed neighbourhood equal to its
/// fundamental circuit.
pub fn boundary_trace_holds(h: &RotationSystem, tree: &[usize], word: &[usize]) -> bool {
    let m = h.edges.len();
    let mut count = vec![0; m];
    for &e in word {
        if e >= m {
            return false;
        }
        count[e] += 1;
    }
    if count.iter().any(|&c| c != 2) {
        return false;
    }
    let g = word_interlacement(m, &[word.to_vec()]);
    let in_tree = |e: usize| tree.contains(&e);
    let bipartite = g.edges().iter().all(|&(u, v)| in_tree(u) != in_tree(v));
    bipartite
        && (0..m).filter(|&e| !in_tree(e)).all(|e| {
            let mut closed: Vec<usize> = g.neighbor_list(e);
            closed.push(e);
            closed.sort_unstable();
            closed == fundamental_circuit(h, tree, e)
        })
}

/// A random connected plane map: a cycle, then chords added inside faces
/// and pendant vertices hung into faces, until `edges` edges exist.
pub fn random_plane_map<R: rand::Rng>(rng: &mut R, cycle: usize, edges: usize) -> RotationSystem {
    let cycle = cycle.max(1);
    let mut es: Vec<(usize, usize)> = (0..cycle).map(|i| (i, (i + 1) % cycle)).collect();
    // rotation at i: the edge arriving from i-1, then the edge leaving to i+1
    let mut rot: Vec<Vec<usize>> = (0..cycle)
        .map(|i| vec![2 * ((i + cycle - 1) % cycle) + 1, 2 * i])
        .collect();
    if cycle == 1 {
        rot[0] = vec![0, 1];
    }
    while es.len() < edges {
        let h = RotationSystem {
            n: rot.len(),
            edges: es.clone(),
            rotation: rot.clone(),
        };
        let faces = h.faces();
        let face = &faces[rng.gen_range(0..faces.len())];
        let k = face.len();
        let corner = |i: usize| {
            let out = face[i % k];
            (h.vertex_of_half(out), out)
        };
        let e = es.len();
        let i = rng.gen_range(0..k);
        let (x, before) = corner(i);
        let insert = |rot: &mut Vec<Vec<usize>>, at: usize, before: usize, z: usize| {
            let p = rot[at]
                .iter()
                .position(|&y| y == before)
                .expect("corner half");
            rot[at].insert(p, z);
        };
        if rng.gen_bool(0.5) {
            let j = rng.gen_range(0..k);
            let (y, before_y) = corner(j);
            es.push((x, y));
            if i == j {
                // a loop in one corner: both halves sit together
                insert(&mut rot, x, before, 2 * e);
                insert(&mut rot, x, before, 2 * e + 1);
            } else {
                insert(&mut rot, x, before, 2 * e);
                insert(&mut rot, y, before_y, 2 * e + 1);
            }
        } else {
            let y = rot.len();
            es.push((x, y));
            insert(&mut rot, x, before, 2 * e);
            rot.push(vec![2 * e + 1]);
        }
    }
    RotationSystem {
        n: rot.len(),
        edges: es,
        rotation: rot,
    }
}

/// A spanning tree found by randomized depth-first search.
pub fn random_spanning_tree<R: rand::Rng>(rng: &mut R, h: &RotationSystem) -> Vec<usize> {
    let mut seen = vec![false; h.n];
    let mut tree = Vec::new();
    let start = rng.gen_range(0..h.n.max(1));
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(&x) = stack.last() {
        let mut options: Vec<(usize, usize)> = Vec::new();
        for &z in &h.rotation[x] {
            let y = h.vertex_of_half(z ^ 1);
            if !seen[y] {
                options.push((z / 2, y));
            }
        }
        if options.is_empty() {
            stack.pop();
            continue;
        }
        let (e, y) = options[rng.gen_range(0..options.len())];
        seen[y] = true;
        tree.push(e);
        stack.push(y);
    }
    tree.sort_unstable();
    tree
}

/// The medial graph of a plane map, one vertex per edge, together with the
/// transition at each vertex that crosses straight through it.
#[derive(Clone, Debug)]
pub struct Medial {
    pub graph: FourRegularGraph,
    pub crossing: Vec<u8>,
}

pub fn medial_graph(h: &RotationSystem) -> Result<Medial> {
    require(h.is_planar(), || "rotation system is not planar".into())?;
    require(!h.edges.is_empty(), || {
        "medial graph of an edgeless map".into()
    })?;
    let mut edges = Vec::new();
    for face in h.faces() {
        let k = face.len();
        for i in 0..k {
            edges.push((face[i] / 2, face[(i + 1) % k] / 2));
        }
    }
    let names = (0..h.edges.len()).map(|e| e.to_string()).collect();
    let graph = FourRegularGraph::with_names(names, edges)?;
    // side 1 of each medial edge arrives at the later map edge of its face;
    // the two arrivals come from opposite ends and continue straight on
    let crossing = (0..graph.n())
        .map(|v| {
            let arrivals: Vec<usize> = graph.incidence[v]
                .iter()
                .copied()
                .filter(|&x| x % 2 == 1)
                .collect();
            graph.transition_index(v, arrivals[0], arrivals[1])
        })
        .collect();
    Ok(Medial { graph, crossing })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5() -> FourRegularGraph {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        FourRegularGraph::new(5, edges).unwrap()
    }

    #[test]
    fn natural_order_puts_numbers_first() {
        let mut v = vec!["b", "10", "a", "2", "1"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(v, ["1", "2", "10", "a", "b"]);
    }

    #[test]
    fn two_loop_vertex() {
        let f = FourRegularGraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(euler_systems(&f, EulerMode::All).unwrap().len(), 2);
        let c = parse_dow("v v").unwrap();
        assert_eq!(interlacement(&c).edge_count(), 0);
        assert_eq!(c.circuits().len(), 1);
        // the loop-preserving transition splits into two circuits
        assert_eq!(f.trace(&[0]).len(), 2);
        let two = parse_dow("u u\nv v").unwrap();
        assert_eq!(euler_systems(two.graph(), EulerMode::All).unwrap().len(), 4);
        for t in 0..3 {
            assert_eq!(detach(&f, 0, t).unwrap().n(), 0);
            assert!(detach(&f, 0, t).unwrap().edges().is_empty());
        }
    }

    #[test]
    fn small_interlacements() {
        let c = parse_dow("a b a b").unwrap();
        assert_eq!(interlacement(&c), LoopedGraph::path(2));
        let c = parse_dow("a a b b").unwrap();
        assert_eq!(interlacement(&c).edge_count(), 0);
    }

    #[test]
    fn k44_fixture_interlacement() {
        let c = parse_dow("a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2").unwrap();
        let g = interlacement(&c);
        let names = g.names().unwrap();
        assert_eq!(names, ["1", "2", "3", "4", "a", "b", "c", "d"]);
        let nb: Vec<&str> = g
            .neighbor_list(0)
            .iter()
            .map(|&v| names[v].as_str())
            .collect();
        assert_eq!(nb, ["2", "a", "d"]);
        assert!(c.graph().is_simple());
    }

    #[test]
    fn labels_are_distinct_and_orientation_free() {
        let c = parse_dow("a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2").unwrap();
        let r = parse_dow("2 d 1 c 4 d 3 a 4 b 3 c 2 b 1 a").unwrap();
        for v in 0..8 {
            let mut ts: Vec<u8> = (0..3).map(|l| c.transition(v, l)).collect();
            ts.sort_unstable();
            assert_eq!(ts, [0, 1, 2]);
        }
        // same multigraph up to edge numbering, so compare pairings as half-edge sets of edges
        assert_eq!(interlacement(&c), interlacement(&r));
        assert_eq!(c.normalized_words(), r.normalized_words());
    }

    #[test]
    fn kappa_matches_local_complement() {
        let c = parse_dow("a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2").unwrap();
        let g = interlacement(&c);
        for v in 0..8 {
            let d = kappa_transform(&c, v).unwrap();
            let mut h = g.clone();
            h.lc_mut(v);
            assert_eq!(interlacement(&d), h);
            assert_eq!(kappa_transform(&d, v).unwrap(), c);
        }
    }

    #[test]
    fn kotzig_on_k5() {
        let f = k5();
        let all = euler_systems(&f, EulerMode::All).unwrap();
        let one = euler_systems(&f, EulerMode::One).unwrap().remove(0);
        let orbit = kappa_orbit(&one).unwrap();
        let a: HashSet<Vec<u8>> = all.iter().map(|c| c.choice().to_vec()).collect();
        let b: HashSet<Vec<u8>> = orbit.iter().map(|c| c.choice().to_vec()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn phi_partition_gives_identity() {
        let f = k5();
        let c = euler_systems(&f, EulerMode::One).unwrap().remove(0);
        let p = CircuitPartition {
            choice: c.choice().to_vec(),
        };
        assert_eq!(transition_matrix(&c, &p).unwrap(), Gf2Matrix::identity(5));
        let t = touch_graph(&f, &p);
        assert_eq!(t.graph.n(), 1);
        assert!(t.graph.edges().iter().all(|&(a, b)| a == b));
    }

    #[test]
    fn detach_phi_deletes_letters() {
        let c = parse_dow("a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2").unwrap();
        let f = c.graph();
        let v = f.vertex("b").unwrap();
        let d = detach(f, v, c.transition(v, PHI)).unwrap();
        let expect = parse_dow("a 1 2 c 3 4 a 3 d 4 c 1 d 2").unwrap();
        assert!(d.is_isomorphic(expect.graph()));
        assert_eq!(d.n(), 7);
    }

    #[test]
    fn simple_counts() {
        let counts: Vec<usize> = (5..=8)
            .map(|n| enumerate_four_regular(n, true).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 6]);
    }

    #[test]
    fn boundary_trace_small_cases() {
        let single = RotationSystem::new(2, vec![(0, 1)], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(boundary_trace(&single, &[0]).unwrap(), [0, 0]);
        let digon =
            RotationSystem::new(2, vec![(0, 1), (0, 1)], vec![vec![0, 2], vec![1, 3]]).unwrap();
        let w = boundary_trace(&digon, &[0]).unwrap();
        assert_eq!(word_interlacement(2, &[w]), LoopedGraph::path(2));
    }

    #[test]
    fn touch_cocycles_span_kernel_on_k5() {
        use crate::algebra::{gf2_kernel, span_basis};
        let f = k5();
        let c = euler_systems(&f, EulerMode::One).unwrap().remove(0);
        for p in CircuitPartition::all(&f).unwrap() {
            let m = transition_matrix(&c, &p).unwrap();
            let k = gf2_kernel(&m);
            let t = touch_graph(&f, &p);
            assert_eq!(t.graph.edges().len(), 5);
            let cocycles: Vec<Vec<bool>> = (0..t.graph.n())
                .map(|x| t.graph.vertex_cocycle(x))
                .collect();
            assert_eq!(span_basis(&cocycles, 5), span_basis(&k.basis, 5));
        }
    }

    #[test]
    fn transition_labels_depend_on_the_euler_system() {
        let f = k5();
        let all = euler_systems(&f, EulerMode::All).unwrap();
        let rotated = all.iter().any(|c| {
            all.iter().any(|d| {
                (0..f.n()).any(|v| {
                    c.transition(v, PHI) == d.transition(v, PSI)
                        && c.transition(v, CHI) == d.transition(v, PHI)
                        && c.transition(v, PSI) == d.transition(v, CHI)
                })
            })
        });
        assert!(rotated);
    }
}
