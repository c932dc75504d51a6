use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense matrix over a [`Field`], stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_data(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Small-integer literal, mostly for tests and fixtures.
    pub fn from_ints<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.as_ref().len(), cols, "ragged literal");
                r.as_ref().iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix::from_data(field, rows.len(), cols, data)
    }

    /// A single column.
    pub fn column_vector(field: Field, v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix::from_data(field, n, 1, v)
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let e = &mut self.data[r * self.cols + c];
        *e += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector product");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix::from_data(self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix::from_data(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix::from_data(self.field, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix::from_data(self.field, self.rows, self.cols, data)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// `[self; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix::from_data(self.field, self.rows + rhs.rows, self.cols, data)
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, rhs);
        out
    }

    /// Overwrites the block starting at `(r0, c0)` with `m`.
    pub fn paste(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Columns selected by index, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product with row/column index `i * other + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let dec = super::rref(&aug);
        if dec.pivots.len() < n || dec.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(dec.echelon.submatrix(0..n, n..2 * n))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Matrix {
    /// For `self: d3 × (d1·d2)`, the `d3 × d2` matrix `v ↦ self(a ⊗ v)`.
    pub fn contract_left(&self, a: &[Scalar], d2: usize) -> Matrix {
        let d1 = a.len();
        assert_eq!(self.cols, d1 * d2, "contract_left");
        let mut out = Matrix::zeros(self.field, self.rows, d2);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                for j in 0..d2 {
                    let v = self.get(r, i * d2 + j);
                    if !v.is_zero() {
                        out.add_at(r, j, &(v * ai));
                    }
                }
            }
        }
        out
    }

    /// For `self: d3 × (d1·d2)`, the `d3 × d1` matrix `v ↦ self(v ⊗ b)`.
    pub fn contract_right(&self, d1: usize, b: &[Scalar]) -> Matrix {
        let d2 = b.len();
        assert_eq!(self.cols, d1 * d2, "contract_right");
        let mut out = Matrix::zeros(self.field, self.rows, d1);
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                for i in 0..d1 {
                    let v = self.get(r, i * d2 + j);
                    if !v.is_zero() {
                        out.add_at(r, i, &(v * bj));
                    }
                }
            }
        }
        out
    }

    /// `self(a ⊗ b)` for `self: d3 × (|a|·|b|)`.
    pub fn apply_pair(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.contract_left(a, b.len()).mul_vec(b)
    }

    /// Reorders columns from `(i, j)` with `i < d1, j < d2` to `(j, i)`:
    /// the result maps `b ⊗ a` to what `self` maps `a ⊗ b` to.
    pub fn swap_factors(&self, d1: usize, d2: usize) -> Matrix {
        assert_eq!(self.cols, d1 * d2, "swap_factors");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for i in 0..d1 {
                for j in 0..d2 {
                    out.set(r, j * d1 + i, self.get(r, i * d2 + j).clone());
                }
            }
        }
        out
    }

    /// Index of the first column where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        for c in 0..self.cols {
            for r in 0..self.rows {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }
}
