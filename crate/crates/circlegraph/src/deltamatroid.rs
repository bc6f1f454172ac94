//! Set systems given by their feasible sets, encoded as bitmasks over a
//! ground set of at most 20 elements.

use std::fmt;

use crate::algebra::{rank_of_masks, Gf2Matrix};
use crate::error::{guard, require, Error, Result};
use crate::graphs::LoopedGraph;
use crate::pu::{regular_witness, SignedSkewMatrix};
use crate::recognize::is_circle_graph;

pub const MAX_GROUND: usize = 20;
pub const MAX_AXIOM_GROUND: usize = 16;
pub const MAX_DECISION_GROUND: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    member: Vec<bool>,
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.feasible().map(|x| format!("{x:b}")).collect();
        write!(f, "SetSystem(n={}, {{{}}})", self.n, sets.join(", "))
    }
}

impl SetSystem {
    pub fn new(n: usize, sets: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Dimension(format!(
                "ground set of {n} exceeds {MAX_GROUND}"
            )));
        }
        let mut member = vec![false; 1 << n];
        for x in sets {
            if (x as u64) >> n != 0 {
                return Err(Error::Dimension(format!(
                    "set {x:b} outside a ground set of {n}"
                )));
            }
            member[x as usize] = true;
        }
        Ok(SetSystem { n, member })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member[x as usize]
    }

    /// Feasible sets in increasing bitmask order.
    pub fn feasible(&self) -> impl Iterator<Item = u32> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(x, _)| x as u32)
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_even(&self) -> bool {
        let mut parity = None;
        self.feasible().all(|x| {
            let p = x.count_ones() % 2;
            *parity.get_or_insert(p) == p
        })
    }

    /// Symmetric exchange axiom, checked exhaustively.
    pub fn is_delta_matroid(&self) -> Result<bool> {
        guard(self.n <= MAX_AXIOM_GROUND, || {
            format!("axiom check limited to {MAX_AXIOM_GROUND} elements")
        })?;
        if self.is_empty() {
            return Ok(false);
        }
        let sets: Vec<u32> = self.feasible().collect();
        for &x in &sets {
            for &y in &sets {
                let d = x ^ y;
                let mut rest = d;
                while rest != 0 {
                    let a = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let mut ok = false;
                    let mut cand = d;
                    while cand != 0 {
                        let b = cand & cand.wrapping_neg();
                        cand &= cand - 1;
                        let z = if a == b { x ^ a } else { x ^ a ^ b };
                        if self.contains(z) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn twist(&self, x: u32) -> SetSystem {
        let x = x & self.full();
        SetSystem::new(self.n, self.feasible().map(|y| y ^ x)).expect("same ground set")
    }

    /// `Y` is feasible iff an odd number of feasible `Z` satisfy `Y - X ⊆ Z ⊆ Y`.
    pub fn loop_complement(&self, x: u32) -> SetSystem {
        let x = x & self.full();
        let mut member = vec![false; self.member.len()];
        for y in 0..=self.full() {
            let base = y & !x;
            let free = y & x;
            let mut odd = false;
            // walk the subsets of `free`
            let mut w = free;
            loop {
                odd ^= self.contains(base | w);
                if w == 0 {
                    break;
                }
                w = (w - 1) & free;
            }
            member[y as usize] = odd;
        }
        SetSystem { n: self.n, member }
    }

    /// First feasible set in bitmask order.
    pub fn first_feasible(&self) -> Option<u32> {
        self.feasible().next()
    }

    /// Binary representation `A` with `self * x = D_A`, where `x` is the
    /// first feasible set, if `self` is binary.
    pub fn binary_normal_form(&self) -> Result<Option<(u32, Gf2Matrix)>> {
        let Some(x) = self.first_feasible() else {
            return Ok(None);
        };
        match reconstruct_matrix(&self.twist(x)) {
            Ok(a) => Ok(Some((x, a))),
            Err(Error::Precondition(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn is_binary(&self) -> Result<bool> {
        Ok(self.binary_normal_form()?.is_some())
    }

    /// Twist of `D_{A(G)}` for a circle graph `G`.
    pub fn is_eulerian(&self) -> Result<bool> {
        guard(self.n <= MAX_DECISION_GROUND, || {
            format!("Eulerian test limited to {MAX_DECISION_GROUND} elements")
        })?;
        if self.is_empty() || !self.is_even() {
            return Ok(false);
        }
        let (_, a) = self
            .binary_normal_form()?
            .ok_or_else(|| Error::Precondition("set system is not binary".into()))?;
        is_circle_graph(&LoopedGraph::from_adjacency(&a)?)
    }

    /// Representable by a principally unimodular skew-symmetric matrix;
    /// decided for even binary delta-matroids only.
    pub fn is_regular(&self) -> Result<Option<SignedSkewMatrix>> {
        guard(self.n <= MAX_DECISION_GROUND, || {
            format!("regularity test limited to {MAX_DECISION_GROUND} elements")
        })?;
        regular_witness(self)
    }

    /// Bases of a matroid viewed as a delta-matroid.
    pub fn from_bases(n: usize, bases: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(n, bases)
    }
}

/// Subsets with nonsingular principal submatrix; `∅` is always feasible.
pub fn dm_from_matrix(a: &Gf2Matrix) -> Result<SetSystem> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Dimension(format!("matrix is {}x{}", n, a.cols())));
    }
    if n > MAX_GROUND {
        return Err(Error::Dimension(format!("{n} exceeds {MAX_GROUND}")));
    }
    require(a.is_symmetric(), || "matrix is not symmetric".into())?;
    let rows = a.column_masks();
    let mut member = vec![false; 1 << n];
    for x in 0..(1u32 << n) {
        let k = x.count_ones() as usize;
        let r = rank_of_masks(crate::graphs::bits(x as u64).map(|v| rows[v] & x as u64));
        member[x as usize] = r == k;
    }
    Ok(SetSystem { n, member })
}

pub fn dm_from_graph(g: &LoopedGraph) -> SetSystem {
    dm_from_matrix(&g.adjacency()).expect("adjacency is symmetric")
}

/// Inverts `dm_from_matrix`. The diagonal comes from singletons and each
/// off-diagonal entry from the pair and its two singletons; the result is
/// checked by recomputing `D_A`.
pub fn reconstruct_matrix(d: &SetSystem) -> Result<Gf2Matrix> {
    require(d.contains(0), || "the empty set is not feasible".into())?;
    let n = d.n;
    let mut a = Gf2Matrix::zeros(n, n);
    for v in 0..n {
        a.set(v, v, d.contains(1 << v));
    }
    for v in 0..n {
        for w in v + 1..n {
            let pair = d.contains((1 << v) | (1 << w));
            let sv = d.contains(1 << v);
            let sw = d.contains(1 << w);
            let entry = (pair && (!sv || !sw)) || (!pair && sv && sw);
            a.set(v, w, entry);
            a.set(w, v, entry);
        }
    }
    require(&dm_from_matrix(&a)? == d, || {
        "set system is not binary".into()
    })?;
    Ok(a)
}
