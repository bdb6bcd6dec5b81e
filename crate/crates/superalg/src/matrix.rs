//! Dense matrices over F_p and exact Gaussian elimination.
//!
//! Pivoting is deterministic: leftmost pivot column first, smallest row index
//! among candidate rows. Every routine here is used as an exact oracle, so
//! there is no scaling or tolerance anywhere.

use crate::field::Fp;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Fp,
    data: Vec<u64>,
}

/// Wire shape `{rows, cols, entries}`; the field comes from context.
#[derive(Serialize, Deserialize)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u64>,
}

/// Outcome of solving `A X = B`.
#[derive(Debug, Clone)]
pub enum SolveResult {
    /// A particular solution together with a basis of `ker A`.
    Solution {
        particular: Matrix,
        kernel: Vec<Vec<u64>>,
    },
    /// No solution; `witness_row` indexes a zero row of the reduced `A` whose
    /// reduced right-hand side is nonzero.
    Inconsistent { witness_row: usize },
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(field: Fp, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v % field.p();
            }
        }
        m
    }

    pub fn from_fn(field: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j) % field.p();
            }
        }
        m
    }

    pub fn diagonal(field: Fp, diag: &[u64]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = v % field.p();
        }
        m
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[u64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i] % self.field.p();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.add(self[(i, j)], other[(i, j)]))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.sub(self[(i, j)], other[(i, j)]))
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.mul(self[(i, j)], c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let p = self.field.p();
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for j in 0..other.cols {
                    dst[j] = (dst[j] + a * orow[j]) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + row[j] * v[j]) % p;
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        (0..self.rows).fold(0, |acc, i| f.add(acc, self[(i, i)]))
    }

    /// Row-reduce in place to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.data.swap_chunks(r, pr, self.cols);
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let k = self[(i, c)];
                    let p = f.p();
                    for j in c..self.cols {
                        let s = self.data[r * self.cols + j];
                        let d = &mut self.data[i * self.cols + j];
                        *d = (*d + (p - k) * s) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel `{v : Av = 0}` in deterministic order
    /// (one vector per free column, ascending).
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for c in 0..self.cols {
            if pivot_set[c].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[c] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, c)]);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A X = B` for `X`; see [`SolveResult`].
    pub fn solve(&self, b: &Matrix) -> SolveResult {
        assert_eq!(self.rows, b.rows, "A.rows must equal B.rows");
        let f = self.field;
        // Augment [A | B] and reduce.
        let mut aug = Matrix::zeros(f, self.rows, self.cols + b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            for j in 0..b.cols {
                aug[(i, self.cols + j)] = b[(i, j)];
            }
        }
        let pivots: Vec<usize> = {
            // Restrict pivoting to the A-block.
            let mut pivots = Vec::new();
            let mut r = 0;
            for c in 0..self.cols {
                if r == aug.rows {
                    break;
                }
                let Some(pr) = (r..aug.rows).find(|&i| aug[(i, c)] != 0) else {
                    continue;
                };
                aug.data.swap_chunks(r, pr, aug.cols);
                let inv = f.inv(aug[(r, c)]);
                for j in c..aug.cols {
                    aug[(r, j)] = f.mul(aug[(r, j)], inv);
                }
                for i in 0..aug.rows {
                    if i != r && aug[(i, c)] != 0 {
                        let k = aug[(i, c)];
                        let p = f.p();
                        for j in c..aug.cols {
                            let s = aug.data[r * aug.cols + j];
                            let d = &mut aug.data[i * aug.cols + j];
                            *d = (*d + (p - k) * s) % p;
                        }
                    }
                }
                pivots.push(c);
                r += 1;
            }
            pivots
        };
        // Inconsistency: a zero A-row with nonzero B-part.
        for i in pivots.len()..self.rows {
            if (0..b.cols).any(|j| aug[(i, self.cols + j)] != 0) {
                return SolveResult::Inconsistent { witness_row: i };
            }
        }
        let mut particular = Matrix::zeros(f, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular[(pc, j)] = aug[(r, self.cols + j)];
            }
        }
        SolveResult::Solution {
            particular,
            kernel: self.kernel_basis(),
        }
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        match self.solve(&Matrix::identity(self.field, self.rows)) {
            SolveResult::Solution { particular, kernel } if kernel.is_empty() => Some(particular),
            _ => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Horizontal stack of blocks.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(f, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    m[(i, off + j)] = b[(i, j)];
                }
            }
            off += b.cols;
        }
        m
    }

    /// Vertical stack of blocks.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(f, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for i in 0..b.rows {
                for j in 0..cols {
                    m[(off + i, j)] = b[(i, j)];
                }
            }
            off += b.rows;
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(f, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(ro + i, co + j)] = b[(i, j)];
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Columns spanning the same space, reduced to a canonical basis.
    /// Returns the reduced basis as columns of a matrix.
    pub fn column_space_basis(cols: &[Vec<u64>], field: Fp, dim: usize) -> Vec<Vec<u64>> {
        if cols.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_rows(field, &cols.to_vec()); // rows = given vectors
        let mut r = m.clone();
        let pivots = r.rref_in_place();
        let _ = dim;
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    pub fn to_data(&self) -> MatrixData {
        MatrixData {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.clone(),
        }
    }

    pub fn from_data(field: Fp, d: &MatrixData) -> Matrix {
        assert_eq!(d.entries.len(), d.rows * d.cols);
        Matrix {
            rows: d.rows,
            cols: d.cols,
            field,
            data: d.entries.iter().map(|&x| x % field.p()).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        for j in 0..len {
            self.swap(a * len + j, b * len + j);
        }
    }
}

/// Span utilities used throughout: row-space basis maintenance with
/// incremental insertion (deterministic, no pivoting surprises).
#[derive(Debug, Clone)]
pub struct Span {
    pub field: Fp,
    pub dim: usize,
    /// Echelonized rows; `pivots[k]` is the pivot column of row `k`.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: Fp, dim: usize) -> Self {
        Span {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let p = f.p();
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let k = v[pc];
                for j in 0..self.dim {
                    v[j] = (v[j] + (p - k) * row[j]) % p;
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let inv = f.inv(v[pc]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            // Back-eliminate earlier rows for a reduced form.
            for (row, &rpc) in self.rows.iter_mut().zip(&self.pivots) {
                let _ = rpc;
                if row[pc] != 0 {
                    let k = row[pc];
                    for j in 0..self.dim {
                        row[j] = (row[j] + (p - k) * v[j]) % p;
                    }
                }
            }
            let at = self.pivots.iter().position(|&q| q > pc).unwrap_or(self.pivots.len());
            self.rows.insert(at, v);
            self.pivots.insert(at, pc);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let f = self.field;
        let p = f.p();
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let k = v[pc];
                for j in 0..self.dim {
                    v[j] = (v[j] + (p - k) * row[j]) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, or None if outside the span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let f = self.field;
        let p = f.p();
        let mut v = v.to_vec();
        let mut coords = vec![0u64; self.rows.len()];
        for (k, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[pc] != 0 {
                let c = v[pc];
                coords[k] = c;
                for j in 0..self.dim {
                    v[j] = (v[j] + (p - c) * row[j]) % p;
                }
            }
        }
        if v.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5)
    }

    #[test]
    fn solve_identity() {
        // A = I2, B = I2 (p=5) -> X = I2, kernel empty.
        let a = Matrix::identity(f5(), 2);
        match a.solve(&Matrix::identity(f5(), 2)) {
            SolveResult::Solution { particular, kernel } => {
                assert_eq!(particular, Matrix::identity(f5(), 2));
                assert!(kernel.is_empty());
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn solve_zero_map() {
        // A = 0 (2x2), B = 0 -> kernel basis of size... for the vectorized
        // unknown X (2x2) the kernel of A has 2 free columns; per solution
        // column that is 2 dims, matching the stated 4 total over both columns.
        let a = Matrix::zeros(f5(), 2, 2);
        let b = Matrix::zeros(f5(), 2, 2);
        match a.solve(&b) {
            SolveResult::Solution { particular, kernel } => {
                assert!(particular.is_zero());
                assert_eq!(kernel.len(), 2);
                assert_eq!(kernel.len() * b.cols, 4);
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn solve_inconsistent() {
        // [[1,2],[2,4]] mod 5: second row is 2x the first, so the rhs must
        // satisfy b_2 = 2 b_1. With b = (3,1) that reads 1 = 2*3 = 6 = 1 mod 5
        // and the system is consistent; with b = (3,2) it is not.
        let a = Matrix::from_rows(f5(), &[vec![1, 2], vec![2, 4]]);
        let consistent = Matrix::from_rows(f5(), &[vec![3], vec![1]]);
        assert!(matches!(a.solve(&consistent), SolveResult::Solution { .. }));
        let b = Matrix::from_rows(f5(), &[vec![3], vec![2]]);
        match a.solve(&b) {
            SolveResult::Inconsistent { witness_row } => assert_eq!(witness_row, 1),
            _ => panic!("expected inconsistency"),
        }
    }

    #[test]
    fn kernel_and_rank() {
        let a = Matrix::from_rows(f5(), &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_rows(f5(), &[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(f5(), 2));
    }

    #[test]
    fn span_insert_and_coords() {
        let mut s = Span::new(f5(), 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 3, 1]));
        let c = s.coordinates(&[2, 4, 0]).unwrap();
        assert_eq!(c.len(), 2);
        assert!(s.coordinates(&[0, 0, 1]).is_none());
    }
}
