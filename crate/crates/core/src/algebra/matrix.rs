//! Exact dense matrices over any [`Scalar`] ring.
//!
//! Determinants and ranks use fraction-free (Bareiss) elimination, so they
//! are available over rings such as nested polynomial rings; kernels and
//! inverses additionally need a coefficient field.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::traits::{FieldScalar, Scalar};
use crate::error::Error;

/// Row-major dense matrix; `proto` is the ring zero so empty matrices keep
/// their ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<R: Scalar> {
    rows: usize,
    cols: usize,
    proto: R,
    data: Vec<R>,
}

impl<R: Scalar> ExactMatrix<R> {
    pub fn zeros(rows: usize, cols: usize, exemplar: &R) -> Self {
        ExactMatrix {
            rows,
            cols,
            proto: exemplar.zero_like(),
            data: vec![exemplar.zero_like(); rows * cols],
        }
    }

    /// Builds from row vectors; rows must be equal length.
    pub fn from_rows(exemplar: &R, rows: Vec<Vec<R>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Assertion("ragged rows in matrix".into()));
        }
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            data.extend(row);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            proto: exemplar.zero_like(),
            data,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        exemplar: &R,
        mut entry: impl FnMut(usize, usize) -> R,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(entry(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            proto: exemplar.zero_like(),
            data,
        }
    }

    pub fn identity(n: usize, exemplar: &R) -> Self {
        let mut m = Self::zeros(n, n, exemplar);
        for i in 0..n {
            *m.get_mut(i, i) = exemplar.one_like();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<R>) -> Result<(), Error> {
        if self.rows == 0 && self.cols == 0 {
            self.cols = row.len();
        }
        if row.len() != self.cols {
            return Err(Error::Assertion("row length mismatch".into()));
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.proto, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::Assertion("matrix product shape mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, other.cols, &self.proto, |i, j| {
            let mut acc = self.proto.clone();
            for k in 0..self.cols {
                acc = acc.add_ref(&self.get(i, k).mul_ref(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, Error> {
        if v.len() != self.cols {
            return Err(Error::Assertion("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.proto.clone();
                for (k, x) in v.iter().enumerate() {
                    acc = acc.add_ref(&self.get(i, k).mul_ref(x));
                }
                acc
            })
            .collect())
    }

    /// Bareiss fraction-free determinant; every division is exact in the
    /// ring.  Non-square input is reported, never truncated.
    pub fn determinant(&self) -> Result<R, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.proto.one_like());
        }
        let mut a = self.data.clone();
        let cols = self.cols;
        let mut sign_flip = false;
        let mut prev = self.proto.one_like();
        for k in 0..n - 1 {
            // deterministic pivot: first row with nonzero entry in column k
            if a[k * cols + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * cols + k].is_zero()) else {
                    return Ok(self.proto.clone());
                };
                for j in 0..cols {
                    a.swap(k * cols + j, p * cols + j);
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k * cols + k]
                        .mul_ref(&a[i * cols + j])
                        .sub_ref(&a[i * cols + k].mul_ref(&a[k * cols + j]));
                    a[i * cols + j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i * cols + k] = self.proto.clone();
            }
            prev = a[k * cols + k].clone();
        }
        let det = a[(n - 1) * cols + (n - 1)].clone();
        Ok(if sign_flip { det.neg_ref() } else { det })
    }

    /// Rank by fraction-free elimination; works over any exact ring that
    /// embeds in a field (entries of an integral domain).
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = self.proto.one_like();
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            let Some(p) = (pivot_row..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != pivot_row {
                for j in 0..cols {
                    a.swap(pivot_row * cols + j, p * cols + j);
                }
            }
            for i in pivot_row + 1..rows {
                for j in col + 1..cols {
                    let num = a[pivot_row * cols + col]
                        .mul_ref(&a[i * cols + j])
                        .sub_ref(&a[i * cols + col].mul_ref(&a[pivot_row * cols + j]));
                    a[i * cols + j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i * cols + col] = self.proto.clone();
            }
            prev = a[pivot_row * cols + col].clone();
            pivot_row += 1;
            rank += 1;
        }
        rank
    }
}

impl<R: FieldScalar> ExactMatrix<R> {
    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&mut self) -> Result<Vec<usize>, Error> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r >= rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    let idx_a = p * cols + j;
                    let idx_b = r * cols + j;
                    self.data.swap(idx_a, idx_b);
                }
            }
            let inv = self.get(r, col).inv_ref()?;
            for j in col..cols {
                let v = self.get(r, j).mul_ref(&inv);
                self.set(r, j, v);
            }
            for i in 0..rows {
                if i != r && !self.get(i, col).is_zero() {
                    let factor = self.get(i, col).clone();
                    for j in col..cols {
                        let v = self.get(i, j).sub_ref(&factor.mul_ref(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        Ok(pivots)
    }

    /// Basis of the right kernel, one vector per free column, in ascending
    /// free-column order; each vector is scaled so its first nonzero entry
    /// is one.
    pub fn nullspace(&self) -> Result<Vec<Vec<R>>, Error> {
        let mut m = self.clone();
        let pivots = m.rref()?;
        let cols = self.cols;
        let mut basis = Vec::new();
        let mut pivot_iter: Vec<Option<usize>> = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_iter[c] = Some(r);
        }
        for free in 0..cols {
            if pivot_iter[free].is_some() {
                continue;
            }
            let mut v = vec![self.proto.clone(); cols];
            v[free] = self.proto.one_like();
            for (col, slot) in pivot_iter.iter().enumerate() {
                if let Some(r) = slot {
                    v[col] = m.get(*r, free).neg_ref();
                }
            }
            // normalize: first nonzero entry becomes one
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[first].inv_ref()?;
                for x in v.iter_mut() {
                    *x = x.mul_ref(&inv);
                }
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Inverse of a square matrix, or [`Error::SingularMatrix`].
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, &self.proto);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.proto.one_like());
        }
        let pivots = aug.rref()?;
        if pivots.len() < n || pivots.iter().enumerate().any(|(r, &c)| c != r) {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, &self.proto, |i, j| {
            aug.get(i, n + j).clone()
        }))
    }

    /// Solves `A x = b` when a solution exists; `None` for inconsistent
    /// systems (underdetermined systems give the solution with zero free
    /// variables).
    pub fn solve(&self, b: &[R]) -> Result<Option<Vec<R>>, Error> {
        if b.len() != self.rows {
            return Err(Error::Assertion("right-hand side length mismatch".into()));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, &self.proto);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref()?;
        if pivots.last() == Some(&self.cols) {
            return Ok(None); // a pivot in the constant column: inconsistent
        }
        let mut x = vec![self.proto.clone(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}
