use super::{Matrix, SubspaceBasis};
use crate::scalar::{Field, Scalar};

/// A block of unknowns laid out row-major inside the variable vector.
#[derive(Clone, Copy, Debug)]
pub struct Block {
    pub offset: usize,
    pub rows: usize,
    pub cols: usize,
}

/// One summand `coeff · L · X · R` of a matrix equation; a missing factor
/// is the identity.
pub struct Term<'a> {
    pub coeff: Scalar,
    pub left: Option<&'a Matrix>,
    pub block: Block,
    pub right: Option<&'a Matrix>,
}

/// Homogeneous linear constraints on a vector of unknowns, assembled from
/// matrix equations `Σ coeff · L · X_b · R = 0`.
pub struct ConstraintSystem {
    field: Field,
    nvars: usize,
    rows: Vec<Vec<Scalar>>,
}

impl ConstraintSystem {
    pub fn new(field: Field, nvars: usize) -> Self {
        ConstraintSystem {
            field,
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        assert_eq!(row.len(), self.nvars);
        if row.iter().any(|x| !x.is_zero()) {
            self.rows.push(row);
        }
    }

    pub fn add(&mut self, terms: &[Term<'_>]) {
        let Some(first) = terms.first() else { return };
        let out_rows = first.left.map_or(first.block.rows, Matrix::rows);
        let out_cols = first.right.map_or(first.block.cols, Matrix::cols);
        for t in terms {
            debug_assert_eq!(t.left.map_or(t.block.rows, Matrix::rows), out_rows);
            debug_assert_eq!(t.right.map_or(t.block.cols, Matrix::cols), out_cols);
            debug_assert_eq!(t.left.map_or(t.block.rows, Matrix::cols), t.block.rows);
            debug_assert_eq!(t.right.map_or(t.block.cols, Matrix::rows), t.block.cols);
        }
        for r in 0..out_rows {
            for c in 0..out_cols {
                let mut row = vec![self.field.zero(); self.nvars];
                for t in terms {
                    let ks: Vec<(usize, Scalar)> = match t.left {
                        None => vec![(r, self.field.one())],
                        Some(l) => (0..l.cols())
                            .filter(|&k| !l.get(r, k).is_zero())
                            .map(|k| (k, l.get(r, k).clone()))
                            .collect(),
                    };
                    let ls: Vec<(usize, Scalar)> = match t.right {
                        None => vec![(c, self.field.one())],
                        Some(m) => (0..m.rows())
                            .filter(|&l| !m.get(l, c).is_zero())
                            .map(|l| (l, m.get(l, c).clone()))
                            .collect(),
                    };
                    for (k, a) in &ks {
                        let ca = &t.coeff * a;
                        for (l, b) in &ls {
                            row[t.block.offset + k * t.block.cols + l] += &(&ca * b);
                        }
                    }
                }
                self.push_row(row);
            }
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let data = self.rows.iter().flatten().cloned().collect();
        Matrix::from_data(self.field, self.rows.len(), self.nvars, data)
    }

    /// Basis of the solution space.
    pub fn solve(&self) -> SubspaceBasis {
        if self.rows.is_empty() {
            return SubspaceBasis::full(self.field, self.nvars);
        }
        super::rref(&self.to_matrix()).kernel
    }
}
