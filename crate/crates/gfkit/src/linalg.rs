//! Minimal dense linear algebra over Z_p: just enough for Frobenius
//! matrices, their kernels, and subspace comparisons.

use crate::arith::ext_gcd;

fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1, "inverting a non-unit mod {p}");
    x.rem_euclid(p as i128) as u64
}

/// A rows-by-cols matrix over Z_p, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ZpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&c| c % p).collect();
        Self {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed characteristics");
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let p = self.p as u128;
        let mut out = Self::zero(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j) as u128;
                    out.set(i, j, ((cur + a as u128 * rhs.get(k, j) as u128) % p) as u64);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let p = self.p as u128;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u128;
                for (j, &vj) in v.iter().enumerate() {
                    acc = (acc + self.get(i, j) as u128 * vj as u128) % p;
                }
                acc as u64
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols, "pow of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed characteristics");
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch"
        );
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&rhs.data) {
            *a = (*a + self.p - b) % self.p;
        }
        out
    }

    /// Reduced row echelon form plus the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            let Some(pivot_row) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(pivot_row, j));
                m.set(r, j, b);
                m.set(pivot_row, j, a);
            }
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                m.set(r, j, (m.get(r, j) as u128 * inv as u128 % p as u128) as u64);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c) == 0 {
                    continue;
                }
                let factor = m.get(i, c);
                for j in 0..m.cols {
                    let sub = factor as u128 * m.get(r, j) as u128 % p as u128;
                    let cur = m.get(i, j) as u128;
                    m.set(i, j, ((cur + p as u128 - sub) % p as u128) as u64);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel: one vector per free column, with
    /// a 1 in the free position, listed by ascending free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let (m, pivots) = self.rref();
        let p = self.p;
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m.get(row, free)) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zero(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Self::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Some(out)
    }
}

/// The row space of a set of vectors, held in canonical reduced form so that
/// membership and equality tests are cheap and deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSpace {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(p: u64, cols: usize, vectors: &[Vec<u64>]) -> Self {
        if vectors.is_empty() {
            return Self {
                p,
                cols,
                rows: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let (m, pivots) = ZpMatrix::from_rows(p, vectors).rref();
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Self {
            p,
            cols,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored echelon rows; membership leaves zero.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u128;
        let mut v: Vec<u64> = v.iter().map(|&c| c % self.p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = v[pc];
            if factor == 0 {
                continue;
            }
            for j in 0..self.cols {
                let sub = factor as u128 * row[j] as u128 % p;
                v[j] = ((v[j] as u128 + p - sub) % p) as u64;
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Two spaces are equal exactly when their canonical forms agree.
    pub fn same_space(&self, other: &Self) -> bool {
        self.p == other.p && self.cols == other.cols && self.rows == other.rows
    }
}

/// Basis of `span(basis) ∩ ker(m)`: solve `m * (t . basis) = 0` in the
/// coefficient space of the basis, then map back to ambient coordinates.
pub fn span_kernel_intersection(m: &ZpMatrix, basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let p = m.p();
    let n = basis[0].len();
    // Columns are the images of the basis vectors under m.
    let mut c = ZpMatrix::zero(p, m.rows(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        let img = m.mul_vec(b);
        for (i, &val) in img.iter().enumerate() {
            c.set(i, j, val);
        }
    }
    c.kernel_basis()
        .into_iter()
        .map(|t| {
            let mut v = vec![0u64; n];
            for (tj, b) in t.iter().zip(basis) {
                for i in 0..n {
                    v[i] = ((v[i] as u128 + *tj as u128 * b[i] as u128) % p as u128) as u64;
                }
            }
            v
        })
        .collect()
}
