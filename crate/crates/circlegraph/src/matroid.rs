//! Binary matroids as column matroids over GF(2).
//!
//! Representations are kept in reduced row echelon form with full row rank.
//! The row space of a binary representation is determined by the matroid, so
//! two labeled matroids are equal exactly when their normalized columns agree.
//!
//! Isomorphism, automorphism counting and minor containment all rest on
//! unique representability: a bijection between binary matroids preserves
//! circuits iff it is induced by a linear isomorphism of the column spaces, so
//! the searches only guess images of a basis and check the rest by
//! coordinates.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Gf2Matrix, TrackedBasis};
use crate::error::{guard, require, Error, Result};
use crate::graphs::Multigraph;

pub const MAX_ELEMENTS: usize = 64;
pub const MAX_ISO_ELEMENTS: usize = 24;
pub const MAX_MINOR_ELEMENTS: usize = 24;
pub const MAX_CLASS_ELEMENTS: usize = 20;

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    rank: usize,
    cols: Vec<u64>,
    labels: Vec<String>,
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatroid(rank={}, elements={:?})",
            self.rank, self.labels
        )
    }
}

/// Reduced row echelon columns of the row space spanned by `cols`.
fn normalize(rows: usize, cols: &[u64]) -> (usize, Vec<u64>) {
    let m = Gf2Matrix::from_column_masks(rows, cols);
    let (r, pivots) = m.rref();
    let rank = pivots.len();
    let out = (0..cols.len())
        .map(|j| {
            (0..rank)
                .filter(|&i| r.get(i, j))
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();
    (rank, out)
}

fn bits(m: u64) -> impl Iterator<Item = usize> {
    crate::graphs::bits(m)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatroidClass {
    Graphic,
    Cographic,
    Regular,
    Planar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphMatroidKind {
    Cycle,
    Bond,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub contract: Vec<usize>,
    pub delete: Vec<usize>,
}

impl BinaryMatroid {
    /// Columns of `m` are the elements. Labels default to `0..n`.
    pub fn from_matrix(m: &Gf2Matrix) -> Result<Self> {
        if m.rows() > 64 {
            return Err(Error::Dimension(format!(
                "{} rows; at most 64 supported",
                m.rows()
            )));
        }
        let labels = match m.col_labels() {
            Some(ls) => ls.to_vec(),
            None => (0..m.cols()).map(|j| j.to_string()).collect(),
        };
        Self::from_columns(m.rows(), &m.column_masks(), labels)
    }

    pub fn from_columns(rows: usize, cols: &[u64], labels: Vec<String>) -> Result<Self> {
        if cols.len() > MAX_ELEMENTS {
            return Err(Error::Dimension(format!(
                "{} elements; at most {MAX_ELEMENTS}",
                cols.len()
            )));
        }
        if labels.len() != cols.len() {
            return Err(Error::Dimension(format!(
                "{} labels for {} elements",
                labels.len(),
                cols.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        require(sorted.len() == labels.len(), || {
            "duplicate element labels".into()
        })?;
        let (rank, cols) = normalize(rows, cols);
        Ok(BinaryMatroid { rank, cols, labels })
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Unknown(format!("element {label}")))
    }

    /// Normalized column of `e`, a vector in `GF(2)^rank`.
    pub fn column(&self, e: usize) -> u64 {
        self.cols[e]
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    pub fn representation(&self) -> Gf2Matrix {
        Gf2Matrix::from_column_masks(self.rank, &self.cols)
            .with_col_labels(self.labels.clone())
            .expect("labels are distinct")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let m = Self::from_columns(self.rank, &self.cols, labels)?;
        self.labels = m.labels;
        Ok(self)
    }

    pub fn rank_of(&self, set: &[usize]) -> usize {
        crate::algebra::rank_of_masks(set.iter().map(|&e| self.cols[e]))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.rank_of(set) == set.len()
    }

    pub fn is_circuit(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && !self.is_independent(set)
            && (0..set.len()).all(|i| {
                let rest: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .collect();
                self.is_independent(&rest)
            })
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.cols[e] == 0).collect()
    }

    /// Circuits of size at most `k`, sorted by size then lexicographically.
    pub fn circuits_up_to(&self, k: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        let budget: f64 = (0..k.min(n + 1)).map(|i| binomial(n, i)).sum();
        guard(budget <= 5e7, || {
            format!("enumerating circuits of size <= {k} on {n} elements is beyond the guard")
        })?;
        let mut out = Vec::new();
        let mut set = Vec::new();
        self.circuit_dfs(0, k, &TrackedBasis::new(), &mut set, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn circuits(&self) -> Result<Vec<Vec<usize>>> {
        self.circuits_up_to(self.rank + 1)
    }

    fn circuit_dfs(
        &self,
        start: usize,
        k: usize,
        basis: &TrackedBasis,
        set: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if set.len() >= k {
            return;
        }
        for e in start..self.len() {
            let (res, combo) = basis.reduce(self.cols[e], 1u64 << e);
            if res == 0 {
                // combo is the unique circuit in set + e; keep it if it uses all of set
                if combo.count_ones() as usize == set.len() + 1 {
                    let mut c = set.clone();
                    c.push(e);
                    out.push(c);
                }
            } else if set.len() + 1 < k {
                let mut next = basis.clone();
                next.push_reduced(res, combo);
                set.push(e);
                self.circuit_dfs(e + 1, k, &next, set, out);
                set.pop();
            }
        }
    }

    /// Cocircuits are the circuits of the dual.
    pub fn dual(&self) -> BinaryMatroid {
        let n = self.len();
        // in reduced form the pivot of row i is the first column with exactly bit i
        let mut pivot_of_row = vec![usize::MAX; self.rank];
        for e in 0..n {
            let c = self.cols[e];
            if c.count_ones() == 1 {
                let i = c.trailing_zeros() as usize;
                if pivot_of_row[i] == usize::MAX {
                    pivot_of_row[i] = e;
                }
            }
        }
        let is_basis: Vec<bool> = (0..n).map(|e| pivot_of_row.contains(&e)).collect();
        let non_basis: Vec<usize> = (0..n).filter(|&e| !is_basis[e]).collect();
        assert!(non_basis.len() <= 64, "dual rank exceeds 64");
        let mut cols = vec![0u64; n];
        for (j, &e) in non_basis.iter().enumerate() {
            cols[e] = 1u64 << j;
        }
        for (i, &b) in pivot_of_row.iter().enumerate() {
            cols[b] = non_basis
                .iter()
                .enumerate()
                .filter(|&(_, &e)| self.cols[e] >> i & 1 == 1)
                .fold(0u64, |acc, (j, _)| acc | 1 << j);
        }
        BinaryMatroid::from_columns(non_basis.len(), &cols, self.labels.clone())
            .expect("valid dual")
    }

    /// `(M / contract) \ delete`, labels preserved.
    pub fn minor(&self, contract: &[usize], delete: &[usize]) -> Result<BinaryMatroid> {
        for &e in contract.iter().chain(delete) {
            if e >= self.len() {
                return Err(Error::Unknown(format!("element {e}")));
            }
        }
        require(!contract.iter().any(|e| delete.contains(e)), || {
            "contract and delete sets overlap".into()
        })?;
        let mut basis = TrackedBasis::new();
        for &e in contract {
            let (res, combo) = basis.reduce(self.cols[e], 0);
            if res != 0 {
                basis.push_reduced(res, combo);
            }
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|e| !contract.contains(e) && !delete.contains(e))
            .collect();
        let cols: Vec<u64> = keep
            .iter()
            .map(|&e| basis.reduce(self.cols[e], 0).0)
            .collect();
        let labels = keep.iter().map(|&e| self.labels[e].clone()).collect();
        BinaryMatroid::from_columns(self.rank, &cols, labels)
    }

    pub fn restrict(&self, keep: &[usize]) -> BinaryMatroid {
        let cols: Vec<u64> = keep.iter().map(|&e| self.cols[e]).collect();
        let labels = keep.iter().map(|&e| self.labels[e].clone()).collect();
        BinaryMatroid::from_columns(self.rank, &cols, labels)
            .expect("restriction of a valid matroid")
    }

    /// Per element: loop flag, parallel class size, and counts of circuits
    /// of sizes 3, 4 and 5 through it.
    fn element_invariants(&self) -> Vec<[u32; 5]> {
        let mut inv: Vec<[u32; 5]> = (0..self.len())
            .map(|e| {
                let c = self.cols[e];
                [
                    (c == 0) as u32,
                    self.cols.iter().filter(|&&x| x == c).count() as u32,
                    0,
                    0,
                    0,
                ]
            })
            .collect();
        if let Ok(circs) = self.circuits_up_to(5) {
            for c in circs {
                if c.len() >= 3 {
                    for &e in &c {
                        inv[e][c.len() - 1] += 1;
                    }
                }
            }
        }
        inv
    }

    /// An isomorphism `self -> other` as an element map.
    pub fn is_isomorphic(&self, other: &BinaryMatroid) -> Result<Option<Vec<usize>>> {
        guard(self.len().max(other.len()) <= MAX_ISO_ELEMENTS, || {
            format!("isomorphism search is limited to {MAX_ISO_ELEMENTS} elements")
        })?;
        if self.len() != other.len() || self.rank != other.rank {
            return Ok(None);
        }
        let (a, b) = (self.element_invariants(), other.element_invariants());
        let (mut sa, mut sb) = (a.clone(), b.clone());
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
        let mut search = LinearSearch::new(self, other, &a, &b, true);
        search.stop_at_first = true;
        search.run();
        Ok(search
            .first
            .clone()
            .map(|images| search.complete_bijection(&images)))
    }

    /// Number of circuit-preserving permutations of the elements.
    pub fn automorphism_count(&self) -> Result<u128> {
        guard(self.len() <= MAX_ISO_ELEMENTS, || {
            format!("automorphism search is limited to {MAX_ISO_ELEMENTS} elements")
        })?;
        let inv = self.element_invariants();
        let mut search = LinearSearch::new(self, self, &inv, &inv, true);
        search.run();
        Ok(search.leaves as u128 * search.extension_count())
    }

    /// Whether `target` is isomorphic to a minor; the witness contracts an
    /// independent set and deletes a coindependent one.
    pub fn has_minor(&self, target: &BinaryMatroid) -> Result<Option<MinorWitness>> {
        guard(self.len() <= MAX_MINOR_ELEMENTS, || {
            format!("minor search is limited to {MAX_MINOR_ELEMENTS} elements")
        })?;
        if target.rank > self.rank || target.len() > self.len() {
            return Ok(None);
        }
        let k = self.rank - target.rank;
        if target.len() + k > self.len() {
            return Ok(None);
        }
        let mut found = None;
        self.independent_sets(k, &mut |c, basis| {
            let rest: Vec<usize> = (0..self.len()).filter(|e| !c.contains(e)).collect();
            let cols: Vec<u64> = rest
                .iter()
                .map(|&e| basis.reduce(self.cols[e], 0).0)
                .collect();
            let labels = rest.iter().map(|&e| self.labels[e].clone()).collect();
            let quotient =
                BinaryMatroid::from_columns(self.rank, &cols, labels).expect("valid contraction");
            if quotient.rank != target.rank {
                return false;
            }
            if let Some(kept) = embed(target, &quotient) {
                let delete = (0..rest.len())
                    .filter(|i| !kept.contains(i))
                    .map(|i| rest[i])
                    .collect();
                found = Some(MinorWitness {
                    contract: c.to_vec(),
                    delete,
                });
                return true;
            }
            false
        });
        Ok(found)
    }

    /// Calls `f` on every independent set of size `k` (with its reduction
    /// basis) until it returns true.
    fn independent_sets(
        &self,
        k: usize,
        f: &mut dyn FnMut(&[usize], &TrackedBasis) -> bool,
    ) -> bool {
        fn rec(
            m: &BinaryMatroid,
            start: usize,
            k: usize,
            set: &mut Vec<usize>,
            basis: &TrackedBasis,
            f: &mut dyn FnMut(&[usize], &TrackedBasis) -> bool,
        ) -> bool {
            if set.len() == k {
                return f(set, basis);
            }
            for e in start..m.len() {
                if m.len() - e < k - set.len() {
                    break;
                }
                let (res, combo) = basis.reduce(m.cols[e], 0);
                if res == 0 {
                    continue;
                }
                let mut next = basis.clone();
                next.push_reduced(res, combo);
                set.push(e);
                if rec(m, e + 1, k, set, &next, f) {
                    return true;
                }
                set.pop();
            }
            false
        }
        rec(self, 0, k, &mut Vec::new(), &TrackedBasis::new(), f)
    }

    /// Rank-3 quotients with seven distinct points.
    fn has_fano_minor(&self) -> bool {
        if self.rank < 3 {
            return false;
        }
        let k = self.rank - 3;
        self.independent_sets(k, &mut |c, basis| {
            let mut pts: Vec<u64> = (0..self.len())
                .filter(|e| !c.contains(e))
                .map(|e| basis.reduce(self.cols[e], 0).0)
                .filter(|&x| x != 0)
                .collect();
            pts.sort_unstable();
            pts.dedup();
            pts.len() == 7
        })
    }

    pub fn class_test(&self, cls: MatroidClass) -> Result<bool> {
        guard(self.len() <= MAX_CLASS_ELEMENTS, || {
            format!("class tests are limited to {MAX_CLASS_ELEMENTS} elements")
        })?;
        let regular = || !self.has_fano_minor() && !self.dual().has_fano_minor();
        let avoids = |targets: [BinaryMatroid; 2]| -> Result<bool> {
            for t in &targets {
                if self.has_minor(t)?.is_some() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        Ok(match cls {
            MatroidClass::Regular => regular(),
            MatroidClass::Graphic => regular() && avoids([mk5().dual(), mk33().dual()])?,
            MatroidClass::Cographic => regular() && avoids([mk5(), mk33()])?,
            MatroidClass::Planar => {
                regular() && avoids([mk5().dual(), mk33().dual()])? && avoids([mk5(), mk33()])?
            }
        })
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Searches linear maps sending a basis of `src` onto independent columns of
/// `dst`. With `exact`, every vector of the source space must have as many
/// elements as its image (isomorphism); otherwise at most as many (embedding
/// into a restriction).
struct LinearSearch<'a> {
    src: &'a BinaryMatroid,
    dst: &'a BinaryMatroid,
    src_inv: &'a [[u32; 5]],
    dst_inv: &'a [[u32; 5]],
    exact: bool,
    basis: Vec<usize>,
    src_count: HashMap<u64, usize>,
    dst_count: HashMap<u64, usize>,
    stop_at_first: bool,
    first: Option<Vec<usize>>,
    leaves: u64,
}

impl<'a> LinearSearch<'a> {
    fn new(
        src: &'a BinaryMatroid,
        dst: &'a BinaryMatroid,
        src_inv: &'a [[u32; 5]],
        dst_inv: &'a [[u32; 5]],
        exact: bool,
    ) -> Self {
        let count = |m: &BinaryMatroid| {
            let mut c: HashMap<u64, usize> = HashMap::new();
            for &x in &m.cols {
                *c.entry(x).or_default() += 1;
            }
            c
        };
        // greedy basis, rarest invariant classes first, for early pruning
        let mut order: Vec<usize> = (0..src.len()).collect();
        let freq = |e: usize| src_inv.iter().filter(|&&x| x == src_inv[e]).count();
        order.sort_by_key(|&e| (freq(e), std::cmp::Reverse(src_inv[e]), e));
        let mut basis = Vec::new();
        let mut tb = TrackedBasis::new();
        for e in order {
            let (res, combo) = tb.reduce(src.cols[e], 0);
            if res != 0 {
                tb.push_reduced(res, combo);
                basis.push(e);
            }
        }
        LinearSearch {
            src,
            dst,
            src_inv,
            dst_inv,
            exact,
            basis,
            src_count: count(src),
            dst_count: count(dst),
            stop_at_first: false,
            first: None,
            leaves: 0,
        }
    }

    fn counts_ok(&self, x: u64, y: u64) -> bool {
        let a = self.src_count.get(&x).copied().unwrap_or(0);
        let b = self.dst_count.get(&y).copied().unwrap_or(0);
        if self.exact {
            a == b
        } else {
            a <= b
        }
    }

    fn run(&mut self) {
        if !self.counts_ok(0, 0) {
            return;
        }
        let mut images = Vec::new();
        let mut sums = vec![(0u64, 0u64)];
        self.extend(&mut images, &mut sums);
    }

    fn extend(&mut self, images: &mut Vec<usize>, sums: &mut Vec<(u64, u64)>) -> bool {
        let k = images.len();
        if k == self.basis.len() {
            self.leaves += 1;
            if self.first.is_none() {
                self.first = Some(images.clone());
            }
            return self.stop_at_first;
        }
        let b = self.basis[k];
        let x = self.src.cols[b];
        let mut tried: Vec<u64> = Vec::new();
        for f in 0..self.dst.len() {
            if self.exact && self.dst_inv[f] != self.src_inv[b] {
                continue;
            }
            let y = self.dst.cols[f];
            if images.contains(&f) || y == 0 {
                continue;
            }
            // for embeddings, elements with equal columns are interchangeable
            if !self.exact {
                if tried.contains(&y) {
                    continue;
                }
                tried.push(y);
            }
            let base = sums.len();
            let mut ok = true;
            for i in 0..base {
                let (sx, sy) = sums[i];
                let (nx, ny) = (sx ^ x, sy ^ y);
                if ny == 0 || !self.counts_ok(nx, ny) {
                    ok = false;
                    break;
                }
                sums.push((nx, ny));
            }
            if ok {
                images.push(f);
                if self.extend(images, sums) {
                    return true;
                }
                images.pop();
            }
            sums.truncate(base);
        }
        false
    }

    /// Product of factorials of the freely permutable classes.
    fn extension_count(&self) -> u128 {
        let basis_cols: Vec<u64> = self.basis.iter().map(|&b| self.src.cols[b]).collect();
        self.src_count
            .iter()
            .map(|(&x, &c)| factorial(c - basis_cols.iter().filter(|&&y| y == x).count()))
            .product()
    }

    /// Extends basis images to a full element map by matching coordinates.
    fn complete_bijection(&self, images: &[usize]) -> Vec<usize> {
        let mut tb = TrackedBasis::new();
        for (i, &b) in self.basis.iter().enumerate() {
            let (res, combo) = tb.reduce(self.src.cols[b], 1u64 << i);
            tb.push_reduced(res, combo);
        }
        let mut map = vec![usize::MAX; self.src.len()];
        let mut used = vec![false; self.dst.len()];
        for (i, &b) in self.basis.iter().enumerate() {
            map[b] = images[i];
            used[images[i]] = true;
        }
        for e in 0..self.src.len() {
            if map[e] != usize::MAX {
                continue;
            }
            let (_, combo) = tb.reduce(self.src.cols[e], 0);
            let y = bits(combo).fold(0u64, |acc, i| acc ^ self.dst.cols[images[i]]);
            let f = (0..self.dst.len())
                .find(|&f| !used[f] && self.dst.cols[f] == y)
                .expect("counts matched");
            used[f] = true;
            map[e] = f;
        }
        map
    }
}

/// Elements of `host` forming a restriction isomorphic to `target`, when
/// both have the same rank.
fn embed(target: &BinaryMatroid, host: &BinaryMatroid) -> Option<Vec<usize>> {
    let zeros_t = vec![[0u32; 5]; target.len()];
    let zeros_h = vec![[0u32; 5]; host.len()];
    let mut search = LinearSearch::new(target, host, &zeros_t, &zeros_h, false);
    search.stop_at_first = true;
    search.run();
    let images = search.first?;
    // assign target elements to host elements with matching columns
    let mut tb = TrackedBasis::new();
    for (i, &b) in search.basis.iter().enumerate() {
        let (res, combo) = tb.reduce(target.cols[b], 1u64 << i);
        tb.push_reduced(res, combo);
    }
    let mut used = vec![false; host.len()];
    let mut kept = Vec::with_capacity(target.len());
    for e in 0..target.len() {
        let (_, combo) = tb.reduce(target.cols[e], 0);
        let y = bits(combo).fold(0u64, |acc, i| acc ^ host.cols[images[i]]);
        let f = (0..host.len()).find(|&f| !used[f] && host.cols[f] == y)?;
        used[f] = true;
        kept.push(f);
    }
    Some(kept)
}

/// Cycle matroid from the vertex-edge incidence matrix; the bond matroid is its dual.
pub fn graph_matroid(g: &Multigraph, kind: GraphMatroidKind) -> Result<BinaryMatroid> {
    require(g.n() <= 64, || {
        "graph matroids need at most 64 vertices".into()
    })?;
    let cols: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(a, b)| if a == b { 0 } else { (1u64 << a) | (1u64 << b) })
        .collect();
    let labels = (0..cols.len()).map(|e| e.to_string()).collect();
    let m = BinaryMatroid::from_columns(g.n(), &cols, labels)?;
    Ok(match kind {
        GraphMatroidKind::Cycle => m,
        GraphMatroidKind::Bond => m.dual(),
    })
}

fn labeled(rows: usize, cols: &[u64], prefix: &str) -> BinaryMatroid {
    let labels = (0..cols.len()).map(|i| format!("{prefix}{i}")).collect();
    BinaryMatroid::from_columns(rows, cols, labels).expect("fixture")
}

/// `(I_3 | columns of weight >= 2)`.
pub fn fano() -> BinaryMatroid {
    labeled(3, &[0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111], "f")
}

pub fn fano_dual() -> BinaryMatroid {
    fano().dual()
}

fn complete_graph(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Multigraph::new(n, edges).expect("in range")
}

pub fn mk5() -> BinaryMatroid {
    graph_matroid(&complete_graph(5), GraphMatroidKind::Cycle).expect("fixture")
}

pub fn mk4() -> BinaryMatroid {
    graph_matroid(&complete_graph(4), GraphMatroidKind::Cycle).expect("fixture")
}

pub fn mk33() -> BinaryMatroid {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    graph_matroid(
        &Multigraph::new(6, edges).expect("in range"),
        GraphMatroidKind::Cycle,
    )
    .expect("fixture")
}

/// Three points on a line: the largest binary uniform matroid of rank 2.
pub fn u23() -> BinaryMatroid {
    labeled(2, &[0b01, 0b10, 0b11], "u")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuits_of_small_fixtures() {
        let u = u23();
        assert_eq!(u.circuits_up_to(3).unwrap(), vec![vec![0, 1, 2]]);
        let f = fano();
        let c = f.circuits().unwrap();
        assert_eq!(c.iter().filter(|c| c.len() == 3).count(), 7);
        assert_eq!(c.iter().filter(|c| c.len() == 4).count(), 7);
        assert_eq!(c.len(), 14);
        for c in &c {
            assert!(f.is_circuit(c));
        }
    }

    #[test]
    fn dual_basics() {
        let f = fano();
        let d = f.dual();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.dual(), f);
        assert!(f.is_isomorphic(&f).unwrap().is_some());
        assert!(f.is_isomorphic(&d).unwrap().is_none());
        let k5 = mk5();
        assert_eq!(k5.rank() + k5.dual().rank(), 10);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(fano().automorphism_count().unwrap(), 168);
        assert_eq!(mk4().automorphism_count().unwrap(), 24);
        assert_eq!(mk5().automorphism_count().unwrap(), 120);
        assert_eq!(mk33().automorphism_count().unwrap(), 72);
        assert_eq!(u23().automorphism_count().unwrap(), 6);
    }

    #[test]
    fn minors() {
        let k5 = mk5();
        assert!(k5.has_minor(&mk4()).unwrap().is_some());
        assert!(mk4().has_minor(&fano()).unwrap().is_none());
        let w = k5.has_minor(&mk4()).unwrap().unwrap();
        let m = k5.minor(&w.contract, &w.delete).unwrap();
        assert!(m.is_isomorphic(&mk4()).unwrap().is_some());
        assert_eq!(k5.minor(&[], &[]).unwrap(), k5);
        assert!(matches!(k5.minor(&[0], &[0]), Err(Error::Precondition(_))));
    }

    #[test]
    fn class_tests() {
        let f = fano();
        assert!(!f.class_test(MatroidClass::Regular).unwrap());
        assert!(!f.class_test(MatroidClass::Cographic).unwrap());
        assert!(!f.class_test(MatroidClass::Graphic).unwrap());
        let k5 = mk5();
        assert!(k5.class_test(MatroidClass::Regular).unwrap());
        assert!(k5.class_test(MatroidClass::Graphic).unwrap());
        assert!(!k5.class_test(MatroidClass::Cographic).unwrap());
        assert!(!k5.class_test(MatroidClass::Planar).unwrap());
        let k33 = mk33();
        assert!(k33.class_test(MatroidClass::Graphic).unwrap());
        assert!(!k33.class_test(MatroidClass::Cographic).unwrap());
        assert!(mk4().class_test(MatroidClass::Planar).unwrap());
    }

    #[test]
    fn graph_matroid_edge_cases() {
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        let m = graph_matroid(&lp, GraphMatroidKind::Cycle).unwrap();
        assert_eq!(m.loops(), vec![0]);
        let tree = Multigraph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let m = graph_matroid(&tree, GraphMatroidKind::Cycle).unwrap();
        assert_eq!(m.rank(), 3);
        assert!(m.circuits().unwrap().is_empty());
    }
}
