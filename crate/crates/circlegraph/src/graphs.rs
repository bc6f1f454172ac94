//! Looped simple graphs and local complementation.
//!
//! Adjacency rows are `u64` bitmasks, so graphs have at most 64 vertices.
//! Orbit searches are only practical far below that.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::algebra::Gf2Matrix;
use crate::canon::{self, CanonicalForm};
use crate::error::{guard, require, Error, Result};

pub const MAX_VERTICES: usize = 64;
pub const DEFAULT_ORBIT_CAP: usize = 5_000_000;

#[derive(Clone)]
pub struct LoopedGraph {
    n: usize,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

// Names are cosmetic: equality and hashing look at adjacency only.
impl PartialEq for LoopedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for LoopedGraph {}
impl Hash for LoopedGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for LoopedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl LoopedGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        LoopedGraph {
            n,
            adj: vec![0; n],
            names: None,
        }
    }

    /// Edges `(u, u)` are loops. Repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Dimension(format!(
                "{n} vertices exceeds {MAX_VERTICES}"
            )));
        }
        let mut g = Self::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Dimension(format!("edge ({u},{v}) outside 0..{n}")));
            }
            require(!g.has_edge(u, v), || format!("repeated edge ({u},{v})"))?;
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn from_adjacency(m: &Gf2Matrix) -> Result<Self> {
        if m.rows() != m.cols() || m.rows() > MAX_VERTICES {
            return Err(Error::Dimension(format!(
                "adjacency matrix is {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        require(m.is_symmetric(), || {
            "adjacency matrix is not symmetric".into()
        })?;
        let n = m.rows();
        let mut g = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) {
                    g.adj[i] |= bit(j);
                }
            }
        }
        Ok(g)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Dimension(format!(
                "{} names for {} vertices",
                names.len(),
                self.n
            )));
        }
        let distinct: HashSet<&String> = names.iter().collect();
        require(distinct.len() == names.len(), || {
            "duplicate vertex names".into()
        })?;
        self.names = Some(names);
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.set_edge(n - 1, 0, true);
        }
        g
    }

    /// Hub 0, rim `1..=k` in cyclic order.
    pub fn wheel(k: usize) -> Self {
        let mut g = Self::new(k + 1);
        for i in 1..=k {
            g.set_edge(0, i, true);
            g.set_edge(i, if i == k { 1 } else { i + 1 }, true);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(ns) => ns[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        } else {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        self.adj[u] ^= bit(v);
        if u != v {
            self.adj[v] ^= bit(u);
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    /// Row of the adjacency matrix, loop bit included.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Open neighborhood as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v] & !bit(v)
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        bits(self.neighbors(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn loop_mask(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.has_loop(v))
            .fold(0, |m, v| m | bit(v))
    }

    pub fn is_simple(&self) -> bool {
        self.loop_mask() == 0
    }

    pub fn without_loops(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] &= !bit(v);
        }
        g
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u <= v`, loops included.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u) {
                out.push((u, u + v));
            }
        }
        out
    }

    pub fn adjacency(&self) -> Gf2Matrix {
        let masks: Vec<u64> = self.adj.clone();
        // symmetric, so rows double as columns
        Gf2Matrix::from_column_masks(self.n, &masks)
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Induced subgraph; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut g = Self::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                }
            }
        }
        if let Some(ns) = &self.names {
            g.names = Some(keep.iter().map(|&v| ns[v].clone()).collect());
        }
        g
    }

    pub fn delete(&self, gone: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.neighbors(v);
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        let mut diam = 0;
        for s in 0..self.n {
            let mut reached = bit(s);
            let mut frontier = bit(s);
            let mut d = 0;
            while reached != self.vertex_mask() {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.neighbors(v);
                }
                frontier = next & !reached;
                reached |= next;
                d += 1;
            }
            diam = diam.max(d);
        }
        Some(diam)
    }

    /// A proper 2-colouring as `(side0, side1)` masks, if one exists.
    pub fn bipartition(&self) -> Option<(u64, u64)> {
        let mut colour = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for u in bits(self.neighbors(v)) {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(x) if x == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut sides = (0u64, 0u64);
        for (v, c) in colour.iter().enumerate() {
            if c == &Some(true) {
                sides.1 |= bit(v);
            } else {
                sides.0 |= bit(v);
            }
        }
        Some(sides)
    }

    fn weights(&self) -> Vec<u8> {
        let n = self.n;
        let mut w = vec![0u8; n * n];
        for u in 0..n {
            for v in bits(self.adj[u]) {
                w[u * n + v] = 1;
            }
        }
        w
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self.n, &self.weights())
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_form().key == other.canonical_form().key
    }

    /// An isomorphism `self -> other` as a vertex map, if one exists.
    pub fn isomorphism_to(&self, other: &Self) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let a = self.canonical_form();
        let b = other.canonical_form();
        if a.key != b.key {
            return None;
        }
        let mut map = vec![0; self.n];
        for pos in 0..self.n {
            map[a.labeling[pos]] = b.labeling[pos];
        }
        Some(map)
    }

    /// Simple local complementation: toggle every pair inside `N(v)`.
    pub(crate) fn lc_mut(&mut self, v: usize) {
        let nb = self.neighbors(v);
        for u in bits(nb) {
            // toggles u's adjacency to the other neighbours, leaving u's loop bit alone
            self.adj[u] ^= nb & !bit(u);
        }
    }

    pub(crate) fn nonsimple_lc_mut(&mut self, v: usize) {
        let nb = self.neighbors(v);
        for u in bits(nb) {
            self.adj[u] ^= nb;
        }
    }

    pub(crate) fn loop_complement_mut(&mut self, set: u64) {
        for v in bits(set) {
            self.adj[v] ^= bit(v);
        }
    }
}

/// Undirected multigraph with loops, used for touch-graphs and 4-regular graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Dimension(format!("edge ({u},{v}) outside 0..{n}")));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// A loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Multiplicity matrix; the diagonal counts loops.
    pub fn weights(&self) -> Vec<u8> {
        let n = self.n;
        let mut w = vec![0u8; n * n];
        for &(a, b) in &self.edges {
            w[a * n + b] += 1;
            if a != b {
                w[b * n + a] += 1;
            }
        }
        w
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self.n, &self.weights())
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.canonical_form().key == other.canonical_form().key
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    /// Indicator over edges of the non-loop edges at `v`.
    pub fn vertex_cocycle(&self, v: usize) -> Vec<bool> {
        self.edges
            .iter()
            .map(|&(a, b)| a != b && (a == v || b == v))
            .collect()
    }

    /// Underlying simple graph: loops dropped, parallel edges merged.
    pub fn simplify(&self) -> LoopedGraph {
        let mut g = LoopedGraph::new(self.n);
        for &(a, b) in &self.edges {
            if a != b {
                g.set_edge(a, b, true);
            }
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LocalOp {
    SimpleLc(usize),
    NonsimpleLc(usize),
    LoopComplement(Vec<usize>),
    Pivot(usize, usize),
}

pub fn apply_local_op(g: &LoopedGraph, op: &LocalOp) -> Result<LoopedGraph> {
    let check = |v: usize| -> Result<()> {
        if v < g.n {
            Ok(())
        } else {
            Err(Error::Dimension(format!("vertex {v} outside 0..{}", g.n)))
        }
    };
    let mut h = g.clone();
    match op {
        LocalOp::SimpleLc(v) => {
            check(*v)?;
            require(g.is_simple(), || {
                "simple local complementation needs a simple graph".into()
            })?;
            h.lc_mut(*v);
        }
        LocalOp::NonsimpleLc(v) => {
            check(*v)?;
            h.nonsimple_lc_mut(*v);
        }
        LocalOp::LoopComplement(set) => {
            let mut mask = 0;
            for &v in set {
                check(v)?;
                mask |= bit(v);
            }
            h.loop_complement_mut(mask);
        }
        LocalOp::Pivot(v, w) => {
            check(*v)?;
            check(*w)?;
            require(v != w && g.has_edge(*v, *w), || {
                format!("pivot on non-edge ({v},{w})")
            })?;
            require(g.is_simple(), || "pivot needs a simple graph".into())?;
            h.lc_mut(*v);
            h.lc_mut(*w);
            h.lc_mut(*v);
        }
    }
    Ok(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMode {
    Labeled,
    UpToIso,
}

/// Which operations generate the orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    SimpleLc,
    /// Nonsimple local complementation together with single-vertex loop complementation.
    Looped,
}

fn successors(g: &LoopedGraph, gens: Generators) -> Vec<(usize, bool, LoopedGraph)> {
    let mut out = Vec::new();
    for v in 0..g.n {
        match gens {
            Generators::SimpleLc => {
                if g.degree(v) >= 2 {
                    let mut h = g.clone();
                    h.lc_mut(v);
                    out.push((v, false, h));
                }
            }
            Generators::Looped => {
                let mut h = g.clone();
                h.nonsimple_lc_mut(v);
                out.push((v, false, h));
                let mut h = g.clone();
                h.loop_complement_mut(bit(v));
                out.push((v, true, h));
            }
        }
    }
    out
}

/// Breadth-first closure of `g` under the generators.
pub fn local_equivalence_orbit(
    g: &LoopedGraph,
    mode: OrbitMode,
    gens: Generators,
    cap: usize,
) -> Result<Vec<LoopedGraph>> {
    match mode {
        OrbitMode::Labeled => labeled_orbit(g, gens, cap),
        OrbitMode::UpToIso => Ok(OrbitTree::build(g, gens, cap)?
            .nodes
            .into_iter()
            .map(|n| n.graph)
            .collect()),
    }
}

fn labeled_orbit(g: &LoopedGraph, gens: Generators, cap: usize) -> Result<Vec<LoopedGraph>> {
    if gens == Generators::SimpleLc {
        require(g.is_simple(), || {
            "simple-lc orbit needs a simple graph".into()
        })?;
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::from([g.adj.clone()]);
    let mut out = vec![g.clone()];
    let mut i = 0;
    while i < out.len() {
        let cur = out[i].clone();
        for (_, _, h) in successors(&cur, gens) {
            if seen.insert(h.adj.clone()) {
                guard(out.len() < cap, || {
                    format!("labeled orbit exceeds cap {cap}")
                })?;
                out.push(h);
            }
        }
        i += 1;
    }
    Ok(out)
}

pub struct OrbitNode {
    /// A labeled member, reached from the root by the recorded operations.
    pub graph: LoopedGraph,
    pub key: Vec<u8>,
    parent: Option<usize>,
    via: (usize, bool),
}

/// Up-to-isomorphism orbit with parent pointers, so every class carries a
/// replayable operation sequence from the starting graph.
pub struct OrbitTree {
    pub nodes: Vec<OrbitNode>,
    gens: Generators,
}

impl OrbitTree {
    pub fn build(g: &LoopedGraph, gens: Generators, cap: usize) -> Result<Self> {
        if gens == Generators::SimpleLc {
            require(g.is_simple(), || {
                "simple-lc orbit needs a simple graph".into()
            })?;
        }
        let root_key = g.canonical_form().key;
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(root_key.clone(), 0)]);
        let mut nodes = vec![OrbitNode {
            graph: g.clone(),
            key: root_key,
            parent: None,
            via: (0, false),
        }];
        let mut i = 0;
        while i < nodes.len() {
            let cur = nodes[i].graph.clone();
            for (v, lc, h) in successors(&cur, gens) {
                let key = h.canonical_form().key;
                if index.contains_key(&key) {
                    continue;
                }
                guard(nodes.len() < cap, || format!("orbit exceeds cap {cap}"))?;
                index.insert(key.clone(), nodes.len());
                nodes.push(OrbitNode {
                    graph: h,
                    key,
                    parent: Some(i),
                    via: (v, lc),
                });
            }
            i += 1;
        }
        Ok(OrbitTree { nodes, gens })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Operations taking the root to `nodes[i].graph`, in order.
    pub fn ops_to(&self, mut i: usize) -> Vec<LocalOp> {
        let mut ops = Vec::new();
        while let Some(p) = self.nodes[i].parent {
            let (v, loop_op) = self.nodes[i].via;
            ops.push(match (self.gens, loop_op) {
                (Generators::SimpleLc, _) => LocalOp::SimpleLc(v),
                (Generators::Looped, false) => LocalOp::NonsimpleLc(v),
                (Generators::Looped, true) => LocalOp::LoopComplement(vec![v]),
            });
            i = p;
        }
        ops.reverse();
        ops
    }

    pub fn contains_iso(&self, h: &LoopedGraph) -> bool {
        let key = h.canonical_form().key;
        self.nodes.iter().any(|n| n.key == key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexMinorWitness {
    /// Simple local complementations applied to the host, in order.
    pub lc_sequence: Vec<usize>,
    /// Host vertices deleted afterwards.
    pub deleted: Vec<usize>,
    /// `image[i]` is the host vertex playing vertex `i` of the target.
    pub image: Vec<usize>,
}

impl VertexMinorWitness {
    pub fn replay(&self, g: &LoopedGraph) -> Result<LoopedGraph> {
        let mut h = g.clone();
        for &v in &self.lc_sequence {
            h = apply_local_op(&h, &LocalOp::SimpleLc(v))?;
        }
        Ok(h.induced(&self.image))
    }
}

fn subsets(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..=n - (k - cur.len()) {
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if k > n {
        return false;
    }
    rec(0, n, k, &mut Vec::with_capacity(k), &mut f)
}

fn find_induced(host: &LoopedGraph, h: &LoopedGraph) -> Option<Vec<usize>> {
    let k = h.n;
    let target_edges = h.edge_count();
    let mut target_deg: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
    target_deg.sort_unstable();
    let h_form = h.canonical_form();
    let mut found = None;
    subsets(host.n, k, |s| {
        let mask = s.iter().fold(0u64, |m, &v| m | bit(v));
        let mut deg: Vec<usize> = s
            .iter()
            .map(|&v| (host.neighbors(v) & mask).count_ones() as usize)
            .collect();
        if deg.iter().sum::<usize>() != 2 * target_edges {
            return false;
        }
        deg.sort_unstable();
        if deg != target_deg {
            return false;
        }
        let sub = host.induced(s);
        let f = sub.canonical_form();
        if f.key != h_form.key {
            return false;
        }
        let mut image = vec![0; k];
        for pos in 0..k {
            image[h_form.labeling[pos]] = s[f.labeling[pos]];
        }
        found = Some(image);
        true
    });
    found
}

/// Searches the local-equivalence classes of `g` (one labeled representative
/// per isomorphism class) for an induced copy of `h`.
pub fn is_vertex_minor(
    g: &LoopedGraph,
    h: &LoopedGraph,
    cap: usize,
) -> Result<Option<VertexMinorWitness>> {
    require(g.is_simple() && h.is_simple(), || {
        "vertex-minor test needs simple graphs".into()
    })?;
    if h.n > g.n {
        return Ok(None);
    }
    let tree = OrbitTree::build(g, Generators::SimpleLc, cap)?;
    Ok(vertex_minor_in_tree(&tree, h))
}

/// Same search against a prebuilt orbit, so one host can be tested against several targets.
pub fn vertex_minor_in_tree(tree: &OrbitTree, h: &LoopedGraph) -> Option<VertexMinorWitness> {
    for (i, node) in tree.nodes.iter().enumerate() {
        if let Some(image) = find_induced(&node.graph, h) {
            let lc_sequence = tree
                .ops_to(i)
                .into_iter()
                .map(|op| match op {
                    LocalOp::SimpleLc(v) => v,
                    _ => unreachable!("simple orbit records simple operations"),
                })
                .collect();
            let deleted = (0..node.graph.n).filter(|v| !image.contains(v)).collect();
            return Some(VertexMinorWitness {
                lc_sequence,
                deleted,
                image,
            });
        }
    }
    None
}

pub const MAX_SIMPLE_ENUMERATION: usize = 8;

/// Simple graphs on `n` vertices up to isomorphism, each class represented
/// once, sorted by canonical key. Built by adding a vertex with every
/// possible neighbourhood to each class on `n - 1` vertices.
pub fn simple_graphs(n: usize) -> Result<Vec<LoopedGraph>> {
    guard(n <= MAX_SIMPLE_ENUMERATION, || {
        format!("simple graph enumeration limited to {MAX_SIMPLE_ENUMERATION} vertices")
    })?;
    let mut level = vec![LoopedGraph::new(0)];
    for k in 1..=n {
        let mut next: HashMap<Vec<u8>, LoopedGraph> = HashMap::new();
        for g in &level {
            for nb in 0u64..(1 << (k - 1)) {
                let mut h = LoopedGraph::new(k);
                for (u, v) in g.edges() {
                    h.set_edge(u, v, true);
                }
                for u in bits(nb) {
                    h.set_edge(u, k - 1, true);
                }
                next.entry(h.canonical_form().key).or_insert(h);
            }
        }
        let mut classes: Vec<(Vec<u8>, LoopedGraph)> = next.into_iter().collect();
        classes.sort_by(|a, b| a.0.cmp(&b.0));
        level = classes.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> LoopedGraph {
        let mut g = LoopedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    #[test]
    fn simple_graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| simple_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn lc_on_path_gives_triangle() {
        let p = LoopedGraph::path(3);
        let t = apply_local_op(&p, &LocalOp::SimpleLc(1)).unwrap();
        assert_eq!(t, LoopedGraph::complete(3));
        let leaf = apply_local_op(&p, &LocalOp::SimpleLc(0)).unwrap();
        assert_eq!(leaf, p);
    }

    #[test]
    fn operation_preconditions() {
        let p = LoopedGraph::path(3);
        assert!(matches!(
            apply_local_op(&p, &LocalOp::Pivot(0, 2)),
            Err(Error::Precondition(_))
        ));
        let mut l = p.clone();
        l.set_edge(0, 0, true);
        assert!(matches!(
            apply_local_op(&l, &LocalOp::SimpleLc(1)),
            Err(Error::Precondition(_))
        ));
        let ns = apply_local_op(&l, &LocalOp::NonsimpleLc(1)).unwrap();
        assert!(!ns.has_loop(0) && ns.has_loop(2) && ns.has_edge(0, 2));
    }

    #[test]
    fn lc_involution_and_pivot_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 0.45);
            for v in 0..n {
                let twice = apply_local_op(
                    &apply_local_op(&g, &LocalOp::SimpleLc(v)).unwrap(),
                    &LocalOp::SimpleLc(v),
                )
                .unwrap();
                assert_eq!(twice, g);
            }
            for (v, w) in g.edges() {
                let piv = apply_local_op(&g, &LocalOp::Pivot(v, w)).unwrap();
                let piv2 = apply_local_op(&g, &LocalOp::Pivot(w, v)).unwrap();
                assert_eq!(piv, piv2);
            }
        }
    }

    #[test]
    fn canonical_keys_respect_loops() {
        let mut a = LoopedGraph::path(3);
        let mut b = LoopedGraph::path(3);
        a.set_edge(0, 0, true);
        b.set_edge(1, 1, true);
        assert_ne!(a.canonical_form().key, b.canonical_form().key);
        let mut c = LoopedGraph::path(3);
        c.set_edge(2, 2, true);
        assert_eq!(a.canonical_form().key, c.canonical_form().key);
        assert_eq!(a.isomorphism_to(&c), Some(vec![2, 1, 0]));
    }

    #[test]
    fn small_orbits() {
        let k1 = LoopedGraph::new(1);
        assert_eq!(
            local_equivalence_orbit(&k1, OrbitMode::Labeled, Generators::SimpleLc, 10)
                .unwrap()
                .len(),
            1
        );
        // K3 and the three labeled paths P3 are locally equivalent
        let k3 = LoopedGraph::complete(3);
        assert_eq!(
            local_equivalence_orbit(&k3, OrbitMode::Labeled, Generators::SimpleLc, 10)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            local_equivalence_orbit(&k3, OrbitMode::UpToIso, Generators::SimpleLc, 10)
                .unwrap()
                .len(),
            2
        );
        let err =
            local_equivalence_orbit(&k3, OrbitMode::Labeled, Generators::SimpleLc, 2).unwrap_err();
        assert!(matches!(err, Error::Guard(_)));
    }

    #[test]
    fn vertex_minor_witness_replays() {
        let g = LoopedGraph::cycle(5);
        let w = is_vertex_minor(&g, &g, 100).unwrap().unwrap();
        assert_eq!(w.replay(&g).unwrap(), g);
        // P4 is a vertex-minor of C5 (delete one vertex)
        let p4 = LoopedGraph::path(4);
        let w = is_vertex_minor(&g, &p4, 100).unwrap().unwrap();
        assert_eq!(w.replay(&g).unwrap(), p4);
        let c4 = LoopedGraph::cycle(4);
        let w = is_vertex_minor(&g, &c4, 100).unwrap().unwrap();
        assert_eq!(w.replay(&g).unwrap(), c4);
    }
}
