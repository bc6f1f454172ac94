//! Canonical labeling of small weighted symmetric matrices.
//!
//! Individualize-and-refine: the partition is refined until equitable, the
//! first non-singleton cell is split on each of its vertices in turn, and the
//! lexicographically least relabeled matrix over all leaves wins. Automorphisms
//! found at equal leaves prune branches that lie in the same orbit.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    /// `n` followed by the upper triangle (diagonal included) of the relabeled matrix.
    pub key: Vec<u8>,
    /// `labeling[pos]` is the original vertex placed at position `pos`.
    pub labeling: Vec<usize>,
}

/// `w` is an `n x n` symmetric weight matrix in row-major order.
pub fn canonical_form(n: usize, w: &[u8]) -> CanonicalForm {
    assert_eq!(w.len(), n * n);
    assert!(n < 256, "canonical form keys store n in one byte");
    let max_w = w.iter().copied().max().unwrap_or(0) as u32;
    let base = n as u64 + 1;
    let pow: Vec<u64> = (0..=max_w).map(|k| base.pow(k)).collect();
    let mut s = Search {
        n,
        w,
        pow,
        best: None,
        autos: Vec::new(),
        path: Vec::new(),
    };
    let start = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    s.go(start);
    let (tri, labeling) = s.best.unwrap_or_default();
    let mut key = Vec::with_capacity(tri.len() + 1);
    key.push(n as u8);
    key.extend(tri);
    CanonicalForm { key, labeling }
}

struct Search<'a> {
    n: usize,
    w: &'a [u8],
    pow: Vec<u64>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let n = self.n;
        let mut cell_of = vec![0usize; n];
        loop {
            let k = cells.len();
            if k == n {
                return;
            }
            for (ci, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(n);
            for c in cells.iter() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<u64>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u64; k];
                        let row = &self.w[v * n..(v + 1) * n];
                        for (u, &x) in row.iter().enumerate() {
                            sig[cell_of[u]] += self.pow[x as usize];
                        }
                        (sig, v)
                    })
                    .collect();
                sigs.sort_unstable();
                let mut start = 0;
                for i in 1..=sigs.len() {
                    if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                        let mut cell: Vec<usize> = sigs[start..i].iter().map(|p| p.1).collect();
                        cell.sort_unstable();
                        next.push(cell);
                        start = i;
                    }
                }
            }
            let split = next.len() != k;
            *cells = next;
            if !split {
                return;
            }
        }
    }

    fn go(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        if cells.len() == self.n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let t = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition");
        let target = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried) {
                continue;
            }
            let mut next = cells.clone();
            next[t] = vec![v];
            next.insert(t + 1, target.iter().copied().filter(|&u| u != v).collect());
            self.path.push(v);
            self.go(next);
            self.path.pop();
            tried.push(v);
        }
    }

    fn in_tried_orbit(&self, v: usize, tried: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if self.path.iter().any(|&p| g[p] != p) {
                continue;
            }
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let n = self.n;
        let mut key = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                key.push(self.w[order[i] * n + order[j]]);
            }
        }
        match &self.best {
            None => self.best = Some((key, order)),
            Some((bk, bo)) => match key.cmp(bk) {
                std::cmp::Ordering::Less => self.best = Some((key, order)),
                std::cmp::Ordering::Equal => {
                    let mut g = vec![0usize; n];
                    for i in 0..n {
                        g[bo[i]] = order[i];
                    }
                    if g.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(g);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}
