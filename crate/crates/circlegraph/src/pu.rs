//! Principal unimodularity of real skew-symmetric matrices, signing of
//! GF(2) supports, and t-regularity of isotropic sections.

use std::collections::HashMap;

use crate::algebra::{det_i128, Gf2Matrix, IntMatrix};
use crate::deltamatroid::{reconstruct_matrix, SetSystem};
use crate::error::{guard, require, Error, Result};
use crate::graphs::{bits, LoopedGraph};
use crate::isotropic::{ias_matroid, IsotropicPresentation, Section, Transversal};

pub const MAX_PU_ORDER: usize = 14;
pub const MAX_SIGN_ORDER: usize = 10;
pub const MAX_T_REGULAR_ORDER: usize = 9;

/// Skew-symmetric matrix with entries in `{-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSkewMatrix(IntMatrix);

impl SignedSkewMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        require(m.is_skew_symmetric(), || {
            "matrix is not skew-symmetric".into()
        })?;
        let n = m.rows();
        require(
            (0..n).all(|i| (0..n).all(|j| m.get(i, j).abs() <= 1)),
            || "entries must lie in {-1,0,1}".into(),
        )?;
        Ok(SignedSkewMatrix(m))
    }

    /// Entries above the diagonal are `+1` where `support` is set.
    pub fn upper_positive(support: &Gf2Matrix) -> Result<Self> {
        let n = support.rows();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                if support.get(i, j) {
                    m.set(i, j, 1);
                    m.set(j, i, -1);
                }
            }
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn into_inner(self) -> IntMatrix {
        self.0
    }
}

fn principal_det(a: &IntMatrix, x: u64) -> Option<i128> {
    let idx: Vec<usize> = bits(x).collect();
    det_i128(&a.principal(&idx))
}

/// First principal subset (in bitmask order) whose determinant is outside
/// `{0, 1, -1}`, or `None` when `a` is principally unimodular.
pub fn pu_violation(a: &IntMatrix) -> Result<Option<Vec<usize>>> {
    require(a.rows() == a.cols(), || "matrix is not square".into())?;
    let n = a.rows();
    guard(n <= MAX_PU_ORDER, || {
        format!("principal minor check limited to {MAX_PU_ORDER}")
    })?;
    let skew = a.is_skew_symmetric();
    for x in 1u64..(1 << n) {
        // odd principal minors of a skew-symmetric matrix vanish
        if skew && x.count_ones() % 2 == 1 {
            continue;
        }
        let ok = principal_det(a, x).is_some_and(|d| d.abs() <= 1);
        if !ok {
            return Ok(Some(bits(x).collect()));
        }
    }
    Ok(None)
}

pub fn is_pu(a: &IntMatrix) -> Result<bool> {
    Ok(pu_violation(a)?.is_none())
}

/// Every `n x n` column selection of `(I A)` taking one of `e_v`, `A e_v`
/// per `v` has determinant in `{0, 1, -1}`.
pub fn transversal_determinants_unimodular(a: &IntMatrix) -> Result<bool> {
    let n = a.rows();
    guard(n <= MAX_PU_ORDER, || {
        format!("transversal check limited to {MAX_PU_ORDER}")
    })?;
    for x in 0u64..(1 << n) {
        let mut b = IntMatrix::zeros(n, n);
        for v in 0..n {
            for r in 0..n {
                let e = if x >> v & 1 == 1 {
                    a.get(r, v)
                } else {
                    i64::from(r == v)
                };
                b.set(r, v, e);
            }
        }
        if !det_i128(&b).is_some_and(|d| d.abs() <= 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A PU signing of a symmetric zero-diagonal GF(2) support, or `None`.
///
/// Signs on a spanning forest are fixed to `+1`; conjugating by a `±1`
/// diagonal reaches every other signing class. The remaining signs are
/// searched exhaustively, each assignment checking the principal minors it
/// completes.
pub fn pu_sign(support: &Gf2Matrix) -> Result<Option<SignedSkewMatrix>> {
    let n = support.rows();
    require(support.cols() == n && support.is_symmetric(), || {
        "support is not symmetric".into()
    })?;
    require((0..n).all(|v| !support.get(v, v)), || {
        "support has a nonzero diagonal".into()
    })?;
    guard(n <= MAX_SIGN_ORDER, || {
        format!("signing search limited to {MAX_SIGN_ORDER}")
    })?;
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if support.get(i, j) {
                edges.push((i, j));
            }
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let fixed: Vec<bool> = edges
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                true
            } else {
                false
            }
        })
        .collect();
    let mut m = IntMatrix::zeros(n, n);
    Ok(sign_dfs(&edges, &fixed, 0, &mut m).then_some(SignedSkewMatrix(m)))
}

fn sign_dfs(edges: &[(usize, usize)], fixed: &[bool], k: usize, m: &mut IntMatrix) -> bool {
    let Some(&(i, j)) = edges.get(k) else {
        return true;
    };
    let choices: &[i64] = if fixed[k] { &[1] } else { &[1, -1] };
    for &s in choices {
        m.set(i, j, s);
        m.set(j, i, -s);
        if completed_minors_ok(m, i, j) && sign_dfs(edges, fixed, k + 1, m) {
            return true;
        }
    }
    m.set(i, j, 0);
    m.set(j, i, 0);
    false
}

/// Even subsets of `{0..=i} ∪ {j}` through `i` and `j`: exactly the
/// principal submatrices whose entries are all assigned once `(i, j)` is.
fn completed_minors_ok(m: &IntMatrix, i: usize, j: usize) -> bool {
    let below = (1u64 << i) - 1;
    let mut y = below;
    loop {
        if y.count_ones().is_multiple_of(2) {
            let x = y | 1 << i | 1 << j;
            if !principal_det(m, x).is_some_and(|d| d.abs() <= 1) {
                return false;
            }
        }
        if y == 0 {
            break;
        }
        y = (y - 1) & below;
    }
    true
}

/// Every sign pattern on the support, no normalization; for cross-checks.
pub fn pu_sign_unrestricted(support: &Gf2Matrix) -> Result<Option<SignedSkewMatrix>> {
    let n = support.rows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if support.get(i, j) {
                edges.push((i, j));
            }
        }
    }
    guard(edges.len() <= 20, || {
        "unrestricted signing limited to 20 edges".into()
    })?;
    for signs in 0u64..(1 << edges.len()) {
        let mut m = IntMatrix::zeros(n, n);
        for (k, &(i, j)) in edges.iter().enumerate() {
            let s = if signs >> k & 1 == 1 { -1 } else { 1 };
            m.set(i, j, s);
            m.set(j, i, -s);
        }
        if is_pu(&m)? {
            return Ok(Some(SignedSkewMatrix(m)));
        }
    }
    Ok(None)
}

/// Regularity of an even binary delta-matroid, with a PU representation of
/// its twist by the first feasible set.
pub fn regular_witness(d: &SetSystem) -> Result<Option<SignedSkewMatrix>> {
    require(d.is_even(), || {
        "regularity is decided for even delta-matroids only".into()
    })?;
    let Some(x) = d.first_feasible() else {
        return Err(Error::Precondition("no feasible set".into()));
    };
    let a = reconstruct_matrix(&d.twist(x))
        .map_err(|_| Error::Precondition("delta-matroid is not binary".into()))?;
    pu_sign(&a)
}

pub fn is_t_regular_section(section: &Section) -> Result<bool> {
    require(section.is_tight(), || {
        format!("section deleting {} is not tight", section.deleted())
    })?;
    Ok(regular_witness(&section.delta_matroid())?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRegularity {
    pub regular: bool,
    pub tight_sections: usize,
    /// Least failing transversal in `pcs` order.
    pub witness: Option<Transversal>,
}

pub fn is_t_regular_isotropic(p: &IsotropicPresentation) -> Result<TRegularity> {
    let n = p.n();
    guard(n <= MAX_T_REGULAR_ORDER, || {
        format!("t-regularity sweep limited to {MAX_T_REGULAR_ORDER} vertices")
    })?;
    let mut cache: HashMap<Vec<Vec<u8>>, bool> = HashMap::new();
    let mut tight_sections = 0;
    for t in Transversal::all(n) {
        let section = p.section(&t)?;
        let d = section.delta_matroid();
        if !d.is_even() {
            continue;
        }
        tight_sections += 1;
        let x = d.first_feasible().expect("sections have a basis");
        let a = reconstruct_matrix(&d.twist(x))?;
        let key = a.to_rows();
        let ok = match cache.get(&key) {
            Some(&ok) => ok,
            None => {
                let ok = pu_sign(&a)?.is_some();
                cache.insert(key, ok);
                ok
            }
        };
        if !ok {
            return Ok(TRegularity {
                regular: false,
                tight_sections,
                witness: Some(t),
            });
        }
    }
    Ok(TRegularity {
        regular: true,
        tight_sections,
        witness: None,
    })
}

pub fn is_t_regular_graph(g: &LoopedGraph) -> Result<TRegularity> {
    is_t_regular_isotropic(&ias_matroid(g)?)
}

/// The skew block printed with the non-regular t-regular example.
pub fn example_block() -> IntMatrix {
    IntMatrix::from_rows(&[[0, 1, 1, 1], [-1, 0, 1, 1], [-1, -1, 0, 1], [-1, -1, -1, 0]])
        .expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(is_pu(&IntMatrix::zeros(3, 3)).unwrap());
        let bad = IntMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        assert_eq!(pu_violation(&bad).unwrap(), Some(vec![0, 1]));
        assert!(is_pu(&example_block()).unwrap());
        assert!(transversal_determinants_unimodular(&example_block()).unwrap());
        let edge = LoopedGraph::complete(2).adjacency();
        assert_eq!(
            pu_sign(&edge).unwrap().unwrap().matrix().to_rows(),
            [vec![0, 1], vec![-1, 0]]
        );
        let k4 = pu_sign(&LoopedGraph::complete(4).adjacency())
            .unwrap()
            .unwrap();
        assert!(is_pu(k4.matrix()).unwrap());
    }

    #[test]
    fn k5_is_signable() {
        // K5 is a circle graph, so D_A(K5) is regular
        assert!(pu_sign(&LoopedGraph::complete(5).adjacency())
            .unwrap()
            .is_some());
        assert!(pu_sign_unrestricted(&LoopedGraph::complete(5).adjacency())
            .unwrap()
            .is_some());
    }

    #[test]
    fn wheel_sweep() {
        let r = is_t_regular_graph(&LoopedGraph::wheel(5)).unwrap();
        assert!(!r.regular);
        assert!(r.witness.is_some());
        let r = is_t_regular_graph(&LoopedGraph::wheel(4)).unwrap();
        assert!(r.regular);
        assert!(is_t_regular_graph(&LoopedGraph::cycle(4)).unwrap().regular);
    }
}
