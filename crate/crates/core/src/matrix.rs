//! Dense row-major matrices over GF(q) and Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{Fq, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Symbol>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a
    /// 0 x `cols` matrix.
    pub fn from_rows(rows: &[Vec<Symbol>], cols: usize) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::RaggedMatrix);
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Symbol {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Symbol) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Symbol] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Symbol>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Symbol> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Drops column `c`.
    pub fn without_column(&self, c: usize) -> Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_columns(&keep)
    }

    pub fn without_row(&self, r: usize) -> Matrix {
        let rows: Vec<Vec<Symbol>> = (0..self.rows).filter(|&i| i != r).map(|i| self.row(i).to_vec()).collect();
        Matrix { rows: rows.len(), cols: self.cols, data: rows.concat() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] += c * row[source]`.
    fn add_row_multiple(&mut self, f: &Fq, target: usize, c: Symbol, source: usize) {
        if c == 0 || target == source {
            return;
        }
        let src = self.row(source).to_vec();
        f.axpy(self.row_mut(target), c, &src);
    }

    /// Eliminates every other entry of column `col` using the pivot at
    /// (`row`, `col`), after scaling that pivot to 1.
    pub fn pivot_on(&mut self, f: &Fq, row: usize, col: usize) {
        let inv = f.inv(self.get(row, col));
        f.scale(self.row_mut(row), inv);
        for r in 0..self.rows {
            let v = self.get(r, col);
            if r != row && v != 0 {
                self.add_row_multiple(f, r, f.neg(v), row);
            }
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns; rows
    /// past `pivots.len()` are zero afterwards.
    pub fn rref(&mut self, f: &Fq) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, found);
            self.pivot_on(f, row, col);
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn truncate_rows(&mut self, rows: usize) {
        self.rows = rows.min(self.rows);
        self.data.truncate(self.rows * self.cols);
    }

    pub fn rank(&self, f: &Fq) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis (as rows) of the right kernel {x : M x^T = 0}.
    pub fn kernel(&self, f: &Fq) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(m.get(r, fc)));
            }
        }
        out
    }

    /// Some x with M x = b, or `None` when the system is inconsistent.
    pub fn solve(&self, f: &Fq, b: &[Symbol]) -> Option<Vec<Symbol>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }

    /// u M for a row vector u of length `rows`.
    pub fn left_mul(&self, f: &Fq, u: &[Symbol]) -> Vec<Symbol> {
        let mut out = vec![0; self.cols];
        for (r, &c) in u.iter().enumerate() {
            f.axpy(&mut out, c, self.row(r));
        }
        out
    }

    /// A B^T, used to check that two generator matrices annihilate.
    pub fn mul_transpose(&self, f: &Fq, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, f.dot(self.row(i), other.row(j)));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}
