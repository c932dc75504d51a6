//! Exact dense linear algebra: row reduction, kernels, images, affine
//! solutions and quotient spaces.
//!
//! Pivots are always chosen in the first column that still has a nonzero
//! entry, using the topmost such row, so bases are reproducible.

mod constraints;
mod matrix;

pub use constraints::{Block, ConstraintSystem, Term};
pub use matrix::Matrix;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

/// `acc += s * v`.
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// A linearly independent family of row vectors in `field^ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    ambient: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            field,
            ambient,
            vectors: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            field,
            ambient,
            vectors: (0..ambient).map(|i| unit_vector(field, ambient, i)).collect(),
        }
    }

    /// Basis of the span of `vectors`, keeping the first independent ones.
    pub fn spanned_by(field: Field, ambient: usize, vectors: &[Vector]) -> Self {
        let mut basis = SubspaceBasis::zero(field, ambient);
        let mut reducer = Reducer::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector outside ambient space");
            if reducer.insert(v) {
                basis.vectors.push(v.clone());
            }
        }
        basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Rows are the basis vectors.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.vectors.clone()).expect("consistent rows")
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients expressing `v` in this basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.vectors.is_empty() {
            return is_zero_vector(v).then(Vec::new);
        }
        let m = self.to_matrix().transpose();
        solve_affine(&m, v).ok().flatten().map(|s| s.particular)
    }

    /// True when both bases span the same subspace.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && other.vectors.iter().all(|v| self.contains(v))
    }
}

/// Incremental row reducer used to test independence.
pub(crate) struct Reducer {
    ambient: usize,
    rows: Vec<(usize, Vector)>,
}

impl Reducer {
    pub(crate) fn new(ambient: usize) -> Self {
        Reducer {
            ambient,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let s = -&w[*p];
                axpy(&mut w, &s, row);
            }
        }
        w
    }

    /// Adds `v`; returns whether it was independent of earlier vectors.
    pub(crate) fn insert(&mut self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let w = self.reduce(v);
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = w[p].inv().expect("nonzero pivot");
                let w: Vector = w.iter().map(|x| x * &inv).collect();
                for (_, row) in self.rows.iter_mut() {
                    if !row[p].is_zero() {
                        let s = -&row[p];
                        axpy(row, &s, &w);
                    }
                }
                self.rows.push((p, w));
                true
            }
        }
    }
}

/// Result of full row reduction.
#[derive(Clone, Debug)]
pub struct RrefDecomposition {
    pub rank: usize,
    /// Reduced row echelon form, same shape as the input.
    pub echelon: Matrix,
    pub pivots: Vec<usize>,
    pub kernel: SubspaceBasis,
    /// Pivot columns of the input; they span its column space.
    pub image: SubspaceBasis,
}

pub fn rref(m: &Matrix) -> RrefDecomposition {
    let field = m.field();
    let (nrows, ncols) = m.shape();
    let mut rows: Vec<Vector> = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(i, r);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&k| !rows[r][k].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        for (j, row) in rows.iter_mut().enumerate() {
            if j == r || row[c].is_zero() {
                continue;
            }
            let s = row[c].clone();
            for &k in &support {
                let d = &s * &pivot_row[k];
                row[k] -= &d;
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let echelon = Matrix::from_rows(field, ncols, rows).expect("shape preserved");

    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel_vectors = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vector(field, ncols, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -echelon.get(row, f);
            }
            v
        })
        .collect();
    let kernel = SubspaceBasis {
        field,
        ambient: ncols,
        vectors: kernel_vectors,
    };
    let image = SubspaceBasis {
        field,
        ambient: nrows,
        vectors: pivots.iter().map(|&p| m.column(p)).collect(),
    };
    RrefDecomposition {
        rank,
        echelon,
        pivots,
        kernel,
        image,
    }
}

/// `rref` under the name used by the rest of the engine.
pub fn rref_decompose(m: &Matrix) -> RrefDecomposition {
    rref(m)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// One solution of `m x = rhs` together with the solution space of the
/// homogeneous system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vector,
    pub kernel: SubspaceBasis,
}

/// Solves `m x = rhs`. `Ok(None)` means infeasible.
pub fn solve_affine(m: &Matrix, rhs: &[Scalar]) -> Result<Option<AffineSolution>> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            rhs.len(),
            m.rows()
        )));
    }
    let field = m.field();
    let n = m.cols();
    let aug = m.hstack(&Matrix::column_vector(field, rhs.to_vec()));
    let dec = rref(&aug);
    if dec.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = zero_vector(field, n);
    for (row, &p) in dec.pivots.iter().enumerate() {
        particular[p] = dec.echelon.get(row, n).clone();
    }
    // the augmented column is never a pivot here, so the kernel of `m`
    // is the kernel of `aug` restricted to the first `n` coordinates
    let kernel = rref(m).kernel;
    Ok(Some(AffineSolution { particular, kernel }))
}

/// Presentation of `field^ambient / span(relations)`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub dim: usize,
    /// `dim x ambient`; kills every relation.
    pub projection: Matrix,
    /// `ambient x dim`; `projection * section = 1`.
    pub section: Matrix,
}

pub fn quotient_space(ambient: usize, relations: &SubspaceBasis) -> Result<Quotient> {
    if relations.ambient() != ambient {
        return Err(Error::DimensionMismatch(format!(
            "relations live in dimension {}, expected {ambient}",
            relations.ambient()
        )));
    }
    let field = relations.field();
    let dec = if relations.dim() == 0 {
        None
    } else {
        Some(rref(&relations.to_matrix()))
    };
    let mut is_pivot = vec![false; ambient];
    if let Some(d) = &dec {
        for &p in &d.pivots {
            is_pivot[p] = true;
        }
    }
    let free: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
    let dim = free.len();
    let mut projection = Matrix::zeros(field, dim, ambient);
    let mut section = Matrix::zeros(field, ambient, dim);
    for (q, &f) in free.iter().enumerate() {
        projection.set(q, f, field.one());
        section.set(f, q, field.one());
        if let Some(d) = &dec {
            for (row, &p) in d.pivots.iter().enumerate() {
                let e = d.echelon.get(row, f);
                if !e.is_zero() {
                    projection.set(q, p, -e);
                }
            }
        }
    }
    Ok(Quotient {
        dim,
        projection,
        section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let m = Matrix::from_ints(q(), &[[1, 2], [2, 4]]);
        let d = rref(&m);
        assert_eq!(d.rank, 1);
        assert_eq!(d.kernel.dim(), 1);
        for k in d.kernel.vectors() {
            assert!(is_zero_vector(&m.mul_vec(k)));
        }
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let d = rref(&Matrix::identity(q(), 3));
        assert_eq!((d.rank, d.kernel.dim()), (3, 0));
    }

    #[test]
    fn gf2_kernel_is_all_ones() {
        let f = Field::prime(2).unwrap();
        let d = rref(&Matrix::from_ints(f, &[[1, 1], [1, 1]]));
        assert_eq!(d.rank, 1);
        assert_eq!(d.kernel.vectors(), &[vec![f.one(), f.one()]]);
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let d = rref(&Matrix::zeros(q(), 0, 3));
        assert_eq!((d.rank, d.kernel.dim()), (0, 3));
        let d = rref(&Matrix::zeros(q(), 2, 0));
        assert_eq!((d.rank, d.kernel.dim(), d.image.dim()), (0, 0, 0));
    }

    #[test]
    fn affine_examples() {
        let s = solve_affine(&Matrix::from_ints(q(), &[[2]]), &[q().one()])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![q().ratio(1, 2).unwrap()]);
        assert!(solve_affine(&Matrix::from_ints(q(), &[[0]]), &[q().one()])
            .unwrap()
            .is_none());
        let s = solve_affine(&Matrix::from_ints(q(), &[[1, 1]]), &[q().zero()])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![q().zero(), q().zero()]);
        assert_eq!(s.kernel.dim(), 1);
        assert!(solve_affine(&Matrix::from_ints(q(), &[[1, 1]]), &[]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let rel = SubspaceBasis::spanned_by(q(), 2, &[vec![q().one(), q().from_i64(-1)]]);
        let quo = quotient_space(2, &rel).unwrap();
        assert_eq!(quo.dim, 1);
        assert!(quo.projection.mul(&quo.section).is_identity());
        assert!(is_zero_vector(&quo.projection.mul_vec(&rel.vectors()[0])));

        let quo = quotient_space(3, &SubspaceBasis::zero(q(), 3)).unwrap();
        assert!(quo.projection.is_identity());

        let quo = quotient_space(2, &SubspaceBasis::full(q(), 2)).unwrap();
        assert_eq!(quo.dim, 0);

        assert!(quotient_space(4, &SubspaceBasis::full(q(), 2)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(q(), &[[2, 1], [1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_ints(q(), &[[1, 2], [2, 4]]).inverse().is_none());
    }
}
