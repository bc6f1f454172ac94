//! Isotropic matroids: the column matroid of `(I | A | I + A)`.
//!
//! Element `letter * n + v` is `φ(v)`, `χ(v)` or `ψ(v)` for letters 0, 1, 2.
//! Transversals travel as strings over `p`, `c`, `s` (and `-` for a vertex
//! left out), one character per vertex in index order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::{Gf2Matrix, TrackedBasis};
use crate::deltamatroid::SetSystem;
use crate::error::{require, Error, Result};
use crate::graphs::LoopedGraph;
use crate::matroid::BinaryMatroid;

pub const LETTERS: [char; 3] = ['p', 'c', 's'];
pub const MAX_VERTICES: usize = 21;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transversal(pub Vec<Option<u8>>);

impl Transversal {
    pub fn total(letters: Vec<u8>) -> Self {
        Transversal(letters.into_iter().map(Some).collect())
    }

    pub fn uniform(n: usize, letter: u8) -> Self {
        Transversal(vec![Some(letter); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn size(&self) -> usize {
        self.0.iter().filter(|x| x.is_some()).count()
    }

    pub fn elements(&self) -> Vec<usize> {
        let n = self.n();
        self.0
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| l as usize * n + v))
            .collect()
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut t = vec![None; n];
        for &e in elements {
            let v = e % n;
            require(t[v].is_none(), || format!("two elements at vertex {v}"))?;
            t[v] = Some((e / n) as u8);
        }
        Ok(Transversal(t))
    }

    pub fn is_disjoint(&self, other: &Transversal) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.is_none() || b.is_none() || a != b)
    }

    /// All `3^n` transversals, `p < c < s`, first vertex varying slowest.
    pub fn all(n: usize) -> impl Iterator<Item = Transversal> {
        let total = 3usize.pow(n as u32);
        (0..total).map(move |mut k| {
            let mut t = vec![0u8; n];
            for v in (0..n).rev() {
                t[v] = (k % 3) as u8;
                k /= 3;
            }
            Transversal::total(t)
        })
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.map_or('-', |l| LETTERS[l as usize]))?;
        }
        Ok(())
    }
}

impl FromStr for Transversal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'p' => Ok(Some(0)),
                'c' => Ok(Some(1)),
                's' => Ok(Some(2)),
                '-' => Ok(None),
                _ => Err(Error::Parse(format!("transversal letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Transversal)
    }
}

impl Serialize for Transversal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct IsotropicPresentation {
    graph: LoopedGraph,
    cols: Vec<u64>,
    matroid: BinaryMatroid,
}

pub fn element_label(g: &LoopedGraph, e: usize) -> String {
    let n = g.n();
    format!("{}{}", LETTERS[e / n], g.name(e % n))
}

pub fn ias_matroid(g: &LoopedGraph) -> Result<IsotropicPresentation> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Dimension(format!(
            "{n} vertices; 3n elements must fit in 64"
        )));
    }
    let mut cols = Vec::with_capacity(3 * n);
    for v in 0..n {
        cols.push(1u64 << v);
    }
    for v in 0..n {
        cols.push(g.row(v));
    }
    for v in 0..n {
        cols.push(g.row(v) ^ (1u64 << v));
    }
    let labels = (0..3 * n).map(|e| element_label(g, e)).collect();
    let matroid = BinaryMatroid::from_columns(n, &cols, labels)?;
    Ok(IsotropicPresentation {
        graph: g.clone(),
        cols,
        matroid,
    })
}

impl IsotropicPresentation {
    pub fn graph(&self) -> &LoopedGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn matroid(&self) -> &BinaryMatroid {
        &self.matroid
    }

    /// Raw `IAS` column of element `e` (row `v` is bit `v`).
    pub fn column(&self, e: usize) -> u64 {
        self.cols[e]
    }

    pub fn ias(&self) -> Gf2Matrix {
        Gf2Matrix::from_column_masks(self.n(), &self.cols)
            .with_col_labels(self.matroid.labels().to_vec())
            .expect("labels are distinct")
    }

    pub fn triple(&self, v: usize) -> [usize; 3] {
        let n = self.n();
        [v, n + v, 2 * n + v]
    }

    pub fn rank_of(&self, elements: &[usize]) -> usize {
        crate::algebra::rank_of_masks(elements.iter().map(|&e| self.cols[e]))
    }

    pub fn transverse_matroid(&self, t: &Transversal) -> Result<BinaryMatroid> {
        require(t.n() == self.n() && t.is_total(), || {
            format!("transversal {t} is not total for {} vertices", self.n())
        })?;
        Ok(self.matroid.restrict(&t.elements()))
    }

    /// Circuits of the isotropic matroid meeting each triple at most once,
    /// of size at most `max_size`, sorted by size then string.
    pub fn transverse_circuits(&self, max_size: usize) -> Vec<Transversal> {
        let n = self.n();
        let mut out = Vec::new();
        let mut cur = vec![None; n];
        self.circuit_dfs(0, max_size, 0, &TrackedBasis::new(), &mut cur, &mut out);
        out.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| a.to_string().cmp(&b.to_string()))
        });
        out
    }

    fn circuit_dfs(
        &self,
        start: usize,
        max_size: usize,
        size: usize,
        basis: &TrackedBasis,
        cur: &mut Vec<Option<u8>>,
        out: &mut Vec<Transversal>,
    ) {
        let n = self.n();
        if size >= max_size {
            return;
        }
        for v in start..n {
            for l in 0..3u8 {
                let e = l as usize * n + v;
                // tag bits are vertices: one element per vertex
                let (res, combo) = basis.reduce(self.cols[e], 1u64 << v);
                cur[v] = Some(l);
                if res == 0 {
                    if combo.count_ones() as usize == size + 1 {
                        out.push(Transversal(cur.clone()));
                    }
                } else if size + 1 < max_size {
                    let mut next = basis.clone();
                    next.push_reduced(res, combo);
                    self.circuit_dfs(v + 1, max_size, size + 1, &next, cur, out);
                }
                cur[v] = None;
            }
        }
    }

    /// `(M / S) - S'` where `S'` holds the other elements of the triples met by `s`.
    pub fn isotropic_minor(&self, s: &Transversal) -> Result<BinaryMatroid> {
        require(s.n() == self.n(), || {
            "subtransversal length differs from vertex count".into()
        })?;
        let contract = s.elements();
        let mut delete = Vec::new();
        for (v, l) in s.0.iter().enumerate() {
            if let Some(l) = l {
                for k in 0..3u8 {
                    if k != *l {
                        delete.push(k as usize * self.n() + v);
                    }
                }
            }
        }
        self.matroid.minor(&contract, &delete)
    }

    pub fn section(&self, t: &Transversal) -> Result<Section> {
        require(t.n() == self.n() && t.is_total(), || {
            format!("transversal {t} is not total for {} vertices", self.n())
        })?;
        let n = self.n();
        let mut pairs = Vec::with_capacity(n);
        for v in 0..n {
            let gone = t.0[v].unwrap();
            let keep: Vec<u8> = (0..3u8).filter(|&l| l != gone).collect();
            pairs.push([keep[0], keep[1]]);
        }
        Ok(Section {
            presentation: self.clone(),
            deleted: t.clone(),
            pairs,
        })
    }
}

/// `M[IAS(G)] - T` with the skew pairs left at each vertex.
#[derive(Clone, Debug)]
pub struct Section {
    presentation: IsotropicPresentation,
    deleted: Transversal,
    /// Remaining letters per vertex in `p < c < s` order; the first is the
    /// reference side used for the delta-matroid.
    pairs: Vec<[u8; 2]>,
}

impl Section {
    pub fn presentation(&self) -> &IsotropicPresentation {
        &self.presentation
    }

    pub fn deleted(&self) -> &Transversal {
        &self.deleted
    }

    pub fn pairs(&self) -> &[[u8; 2]] {
        &self.pairs
    }

    pub fn matroid(&self) -> BinaryMatroid {
        let n = self.presentation.n();
        let keep: Vec<usize> = (0..3 * n)
            .filter(|&e| self.deleted.0[e % n] != Some((e / n) as u8))
            .collect();
        self.presentation.matroid.restrict(&keep)
    }

    /// Transversal of the section taking the second letter on `x`.
    pub fn transversal(&self, x: u32) -> Transversal {
        Transversal::total(
            self.pairs
                .iter()
                .enumerate()
                .map(|(v, p)| p[(x >> v & 1) as usize])
                .collect(),
        )
    }

    /// `X` is feasible iff the transversal with second letters on `X` is a basis.
    pub fn delta_matroid(&self) -> SetSystem {
        let n = self.presentation.n();
        let sets = (0..(1u32 << n))
            .filter(|&x| self.presentation.rank_of(&self.transversal(x).elements()) == n);
        SetSystem::new(n, sets).expect("ground set within limits")
    }

    /// Every independent `(n-1)`-subtransversal extends within its missing pair to a dependent one.
    pub fn is_tight(&self) -> bool {
        let n = self.presentation.n();
        for v in 0..n {
            for x in 0..(1u32 << n) {
                if x >> v & 1 == 1 {
                    continue;
                }
                let mut s = self.transversal(x).elements();
                s.retain(|&e| e % n != v);
                if self.presentation.rank_of(&s) != n - 1 {
                    continue;
                }
                let dependent = self.pairs[v].iter().any(|&l| {
                    let mut t = s.clone();
                    t.push(l as usize * n + v);
                    self.presentation.rank_of(&t) < n
                });
                if !dependent {
                    return false;
                }
            }
        }
        true
    }

    /// The same property read literally: any `x` outside the deleted
    /// transversal may be added, provided the result is a subtransversal.
    pub fn is_tight_literal(&self) -> bool {
        let n = self.presentation.n();
        let outside: Vec<usize> = (0..3 * n)
            .filter(|&e| self.deleted.0[e % n] != Some((e / n) as u8))
            .collect();
        for missing in 0..n {
            for x in 0..(1u32 << n) {
                if x >> missing & 1 == 1 {
                    continue;
                }
                let s: Vec<usize> = self
                    .transversal(x)
                    .elements()
                    .into_iter()
                    .filter(|&e| e % n != missing)
                    .collect();
                if self.presentation.rank_of(&s) != s.len() {
                    continue;
                }
                let ok = outside.iter().any(|&e| {
                    if s.contains(&e) || s.iter().any(|&f| f % n == e % n) {
                        return false;
                    }
                    let mut t = s.clone();
                    t.push(e);
                    self.presentation.rank_of(&t) < t.len()
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}
