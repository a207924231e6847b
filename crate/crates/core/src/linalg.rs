//! Dense matrices over GF(q) and Gaussian elimination.

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};

/// Row-major dense matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }

    /// Fraction of nonzero entries; 0 for an empty matrix.
    pub fn density(&self) -> f64 {
        if self.data.is_empty() {
            0.0
        } else {
            self.nonzero_count() as f64 / self.data.len() as f64
        }
    }

    /// Keeps only the rows whose index satisfies `keep`.
    pub fn retain_rows(&self, mut keep: impl FnMut(usize) -> bool) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for r in 0..self.rows {
            if keep(r) {
                data.extend_from_slice(self.row(r));
                rows += 1;
            }
        }
        Matrix {
            rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, f: &FieldCtx, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| f.sum(self.row(r).iter().zip(x).map(|(&a, &b)| f.mul(a, b))))
            .collect())
    }

    pub fn mul(&self, f: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduces to reduced row echelon form in place, scanning columns left to
    /// right and picking the first row with a nonzero entry as pivot. Returns
    /// the pivot column of each nonzero row, in order.
    pub fn rref(&mut self, f: &FieldCtx) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, sel);
            let inv = f.inv(self.get(pr, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(pr, j), inv);
                self.set(pr, j, v);
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(pr, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.clone().rref(f).len()
    }

    /// Deterministic nonzero kernel vector: after elimination the first free
    /// column is set to one, every later free column to zero, and pivot
    /// variables follow by back-substitution.
    pub fn kernel_vector(&self, f: &FieldCtx) -> Result<Vec<Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free = (0..self.cols)
            .find(|&c| !is_pivot[c])
            .ok_or(Error::NoSolution)?;
        let mut x = vec![Elem::ZERO; self.cols];
        x[free] = Elem::ONE;
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = f.neg(m.get(r, free));
        }
        Ok(x)
    }

    /// Solves `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, f: &FieldCtx, b: &[Elem]) -> Result<Vec<Elem>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, n + 1);
        for (r, &rhs) in b.iter().enumerate() {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n, rhs);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Internal("singular system".into()));
        }
        Ok((0..n).map(|r| aug.get(r, n)).collect())
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self, f: &FieldCtx) -> Result<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: self.cols,
            });
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Elem::ONE);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Internal("singular matrix".into()));
        }
        let mut out = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c));
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}
