//! Exact linear algebra over GF(2) and over the integers.
//!
//! GF(2) rows are packed into `u64` words so elimination is word-parallel XOR.
//! Integer determinants use fraction-free Bareiss elimination, first in `i128`
//! with checked arithmetic and then in arbitrary precision if that overflows.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries; any nonzero entry counts as 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose column `j` is the bitmask `cols[j]` (bit `i` = row `i`).
    pub fn from_column_masks(rows: usize, cols: &[u64]) -> Self {
        assert!(rows <= 64, "column masks hold at most 64 rows");
        let mut m = Self::zeros(rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for i in 0..rows {
                if c >> i & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// Column `c` as a bitmask over rows. Requires at most 64 rows.
    pub fn column_mask(&self, c: usize) -> u64 {
        assert!(self.rows <= 64, "column_mask needs at most 64 rows");
        let mut m = 0u64;
        for r in 0..self.rows {
            if self.get(r, c) {
                m |= 1 << r;
            }
        }
        m
    }

    pub fn column_masks(&self) -> Vec<u64> {
        (0..self.cols).map(|c| self.column_mask(c)).collect()
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.rows, "row")?;
        self.row_labels = Some(labels);
        Ok(self)
    }

    pub fn with_col_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.cols, "column")?;
        self.col_labels = Some(labels);
        Ok(self)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    s.set(i, j, true);
                }
            }
        }
        s
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[bool]) -> Result<Vec<bool>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let x = pack(v);
        Ok((0..self.rows)
            .map(|r| {
                self.row_words(r)
                    .iter()
                    .zip(&x)
                    .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                    & 1
                    == 1
            })
            .collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as u8).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            if row == self.rows {
                break;
            }
            let (w, b) = (c / 64, c % 64);
            let Some(p) = (row..self.rows).find(|&r| m.data[r * m.stride + w] >> b & 1 == 1) else {
                continue;
            };
            if p != row {
                for k in 0..m.stride {
                    m.data.swap(p * m.stride + k, row * m.stride + k);
                }
            }
            for r in 0..self.rows {
                if r != row && m.data[r * m.stride + w] >> b & 1 == 1 {
                    for k in 0..m.stride {
                        let x = m.data[row * m.stride + k];
                        m.data[r * m.stride + k] ^= x;
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }
}

fn check_labels(labels: &[String], n: usize, what: &str) -> Result<()> {
    if labels.len() != n {
        return Err(Error::Dimension(format!(
            "{} {what} labels for {n} {what}s",
            labels.len()
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::Precondition(format!("duplicate {what} label {l}")));
        }
    }
    Ok(())
}

fn pack(v: &[bool]) -> Vec<u64> {
    let mut x = vec![0u64; v.len().div_ceil(64)];
    for (i, &b) in v.iter().enumerate() {
        if b {
            x[i / 64] |= 1 << (i % 64);
        }
    }
    x
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub rank: usize,
    pub basis: Vec<Vec<bool>>,
}

/// Rank and null space of `m`.
///
/// One basis vector per pivot-free column `f`: it has a 1 at `f`, zeros at the
/// other free columns, and the pivot coordinates forced by the reduced form.
pub fn gf2_kernel(m: &Gf2Matrix) -> Kernel {
    let (r, pivots) = m.rref();
    let mut pivot_row = vec![None; m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        pivot_row[p] = Some(i);
    }
    let mut basis = Vec::new();
    for f in 0..m.cols {
        if pivot_row[f].is_some() {
            continue;
        }
        let mut v = vec![false; m.cols];
        v[f] = true;
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, f) {
                v[p] = true;
            }
        }
        basis.push(v);
    }
    Kernel {
        rank: pivots.len(),
        basis,
    }
}

/// Reduced echelon basis of the span of `vectors`; equal spans give equal output.
pub fn span_basis(vectors: &[Vec<bool>], dim: usize) -> Vec<Vec<bool>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<u8>> = vectors
        .iter()
        .map(|v| {
            assert_eq!(v.len(), dim);
            v.iter().map(|&b| b as u8).collect()
        })
        .collect();
    let m = Gf2Matrix::from_rows(&rows).expect("rows share a length");
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| (0..dim).map(|c| r.get(i, c)).collect())
        .collect()
}

/// Every element of the span of `basis`, zero vector excluded, sorted.
pub fn span_elements(basis: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let k = basis.len();
    assert!(k < 24, "span too large to list");
    let dim = basis.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<bool>> = (1u32..1 << k)
        .map(|mask| {
            let mut v = vec![false; dim];
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= *y;
                    }
                }
            }
            v
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Rank of a family of GF(2) vectors given as `u64` bitmasks.
#[inline]
pub fn rank_of_masks<I: IntoIterator<Item = u64>>(vectors: I) -> usize {
    let mut basis = [0u64; 64];
    let mut r = 0;
    for mut v in vectors {
        while v != 0 {
            let p = 63 - v.leading_zeros() as usize;
            if basis[p] == 0 {
                basis[p] = v;
                r += 1;
                break;
            }
            v ^= basis[p];
        }
    }
    r
}

/// Incremental GF(2) basis over `u64` vectors that remembers, for every stored
/// vector, which inserted items it is a combination of.
#[derive(Clone, Debug, Default)]
pub struct TrackedBasis {
    vecs: Vec<(u64, u64)>,
}

impl TrackedBasis {
    pub fn new() -> Self {
        TrackedBasis { vecs: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    /// Reduces `v` against the basis. Returns the residue and the set of stored
    /// items (as a mask of their `tag` bits) used in the reduction.
    #[inline]
    pub fn reduce(&self, mut v: u64, tag: u64) -> (u64, u64) {
        let mut combo = tag;
        for &(b, c) in &self.vecs {
            let p = 63 - b.leading_zeros();
            if v >> p & 1 == 1 {
                v ^= b;
                combo ^= c;
            }
        }
        (v, combo)
    }

    /// Inserts a reduced nonzero residue.
    #[inline]
    pub fn push_reduced(&mut self, v: u64, combo: u64) {
        debug_assert!(v != 0);
        let p = 63 - v.leading_zeros();
        for entry in &mut self.vecs {
            if entry.0 >> p & 1 == 1 {
                entry.0 ^= v;
                entry.1 ^= combo;
            }
        }
        // the basis stays fully reduced, so one pass of `reduce` suffices
        self.vecs.push((v, combo));
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                s.set(i, j, self.get(r, c));
            }
        }
        s
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        self.submatrix(idx, idx)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..=i).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// Entrywise reduction mod 2.
    pub fn mod2(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) % 2 != 0 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[i64]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant; the 0x0 determinant is 1.
pub fn int_det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    Ok(match det_i128(m) {
        Some(d) => BigInt::from(d),
        None => det_big(m),
    })
}

/// Bareiss elimination in checked `i128`; `None` on overflow.
pub fn det_i128(m: &IntMatrix) -> Option<i128> {
    let n = m.rows;
    assert_eq!(n, m.cols);
    let mut a: Vec<i128> = m.data.iter().map(|&x| x as i128).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(a[i * n + k].checked_mul(a[k * n + j])?)?;
                a[i * n + j] = x / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    Some(if n == 0 { 1 } else { sign * a[n * n - 1] })
}

fn det_big(m: &IntMatrix) -> BigInt {
    let n = m.rows;
    let mut a: Vec<BigInt> = m.data.iter().map(|&x| BigInt::from(x)).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(k * n + j, p * n + j);
                    }
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = x / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = if n == 0 {
        BigInt::one()
    } else {
        a[n * n - 1].clone()
    };
    if negate {
        -d
    } else {
        d
    }
}
