//! Dense linear algebra over `F_p`: row reduction, rank, kernels, solving.
//!
//! The matrices arising from graded pieces are small to moderate; elimination
//! of a pivot column is spread over rows when the matrix is large enough.

use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Cell count above which row elimination is spread over threads.
const PAR_CELLS: usize = 1 << 14;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for v in self.row_mut(r) {
                *v = f.mul(*v, inv);
            }
            self.eliminate(f, r, c);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Clear column `c` in every row but the (normalized) pivot row `r`.
    fn eliminate(&mut self, f: &PrimeField, r: usize, c: usize) {
        let cols = self.cols;
        let pivot_row: Vec<u32> = self.row(r)[c..].to_vec();
        let work = |i: usize, row: &mut [u32]| {
            if i == r {
                return;
            }
            let factor = row[c];
            if factor == 0 {
                return;
            }
            let neg = f.neg(factor);
            for (x, &p) in row[c..].iter_mut().zip(&pivot_row) {
                if p != 0 {
                    *x = f.add(*x, f.mul(neg, p));
                }
            }
        };
        #[cfg(feature = "parallel")]
        {
            if self.data.len() >= PAR_CELLS && crate::par::parallel_enabled() {
                use rayon::prelude::*;
                self.data.par_chunks_mut(cols).enumerate().for_each(|(i, row)| work(i, row));
                return;
            }
        }
        let _ = PAR_CELLS;
        for (i, row) in self.data.chunks_mut(cols).enumerate() {
            work(i, row);
        }
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(m.get(row, free));
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `A x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[u32], f: &PrimeField) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(row, self.cols);
        }
        Some(x)
    }

    pub fn mul_vec(&self, x: &[u32], f: &PrimeField) -> Vec<u32> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }
}
