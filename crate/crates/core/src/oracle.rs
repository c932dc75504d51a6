//! Classical Hochschild cohomology of a finite-dimensional algebra, computed
//! from the textbook bar differential on `Hom(A^⊗n, M)`.
//!
//! Nothing here goes through categories, functors or multilinear families;
//! only the exact linear algebra is shared with the main pipeline, so the
//! two computations can be compared as independent witnesses.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::category::CategoryPresentation;
use crate::error::{Error, Result, Violation};
use crate::format::{scalars, AlgebraBimoduleFile, AlgebraFile, FieldSpec, ProductTable};
use crate::functor::LinearFunctorRep;
use crate::linalg::{rank, Matrix, Vector};
use crate::monoid::{BimoduleRep, MonoidRep};
use crate::scalar::{Field, Scalar};

/// Structure constants: `table[i][j]` is `eᵢ · eⱼ` (or `eᵢ · m_j`, …).
type Table = Vec<Vec<Vector>>;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraBimodule {
    pub dim: usize,
    /// `left[i][p] = eᵢ · m_p`.
    pub left: Table,
    /// `right[p][i] = m_p · eᵢ`.
    pub right: Table,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraRep {
    pub field: Field,
    pub dim: usize,
    pub structure: Table,
    pub unit: Vector,
    pub bimodule: Option<AlgebraBimodule>,
}

fn read_table(field: Field, t: &ProductTable, d1: usize, d2: usize, d3: usize, what: &str) -> Result<Table> {
    let bad = || Error::DimensionMismatch(format!("{what}: expected a {d1}x{d2}x{d3} table"));
    if t.len() != d1 || t.iter().any(|p| p.len() != d2 || p.iter().any(|v| v.len() != d3)) {
        return Err(bad());
    }
    t.iter()
        .map(|p| p.iter().map(|v| scalars(field, v)).collect())
        .collect()
}

fn write_table(t: &Table) -> ProductTable {
    t.iter()
        .map(|p| p.iter().map(|v| v.iter().map(Scalar::to_json).collect()).collect())
        .collect()
}

fn combine(field: Field, n: usize, terms: impl IntoIterator<Item = (Scalar, Vector)>) -> Vector {
    let mut out = vec![field.zero(); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(&v) {
            *o += &(&c * x);
        }
    }
    out
}

impl AlgebraRep {
    pub fn new(field: Field, structure: Table, unit: Vector) -> Result<Self> {
        let a = AlgebraRep {
            field,
            dim: unit.len(),
            structure,
            unit,
            bimodule: None,
        };
        a.check()
    }

    fn check(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Validation(v))
        }
    }

    pub fn with_bimodule(mut self, m: AlgebraBimodule) -> Result<Self> {
        self.bimodule = Some(m);
        self.check()
    }

    pub fn from_file(raw: &AlgebraFile) -> Result<Self> {
        let field = raw.field.to_field()?;
        let d = raw.dimension;
        let structure = read_table(field, &raw.structure, d, d, d, "structure")?;
        let unit = scalars(field, &raw.unit)?;
        if unit.len() != d {
            return Err(Error::DimensionMismatch("unit length".into()));
        }
        let bimodule = raw
            .bimodule
            .as_ref()
            .map(|b| -> Result<AlgebraBimodule> {
                Ok(AlgebraBimodule {
                    dim: b.dimension,
                    left: read_table(field, &b.left, d, b.dimension, b.dimension, "left")?,
                    right: read_table(field, &b.right, b.dimension, d, b.dimension, "right")?,
                })
            })
            .transpose()?;
        AlgebraRep { field, dim: d, structure, unit, bimodule }.check()
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            field: FieldSpec::from_field(self.field),
            dimension: self.dim,
            structure: write_table(&self.structure),
            unit: self.unit.iter().map(Scalar::to_json).collect(),
            bimodule: self.bimodule.as_ref().map(|b| AlgebraBimoduleFile {
                dimension: b.dim,
                left: write_table(&b.left),
                right: write_table(&b.right),
            }),
        }
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.dim;
        combine(
            self.field,
            d,
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| (&a[i] * &b[j], self.structure[i][j].clone())),
        )
    }

    /// The coefficient bimodule, `A` itself when none is attached.
    pub fn coefficients(&self) -> AlgebraBimodule {
        self.bimodule.clone().unwrap_or_else(|| AlgebraBimodule {
            dim: self.dim,
            left: self.structure.clone(),
            right: self.structure.clone(),
        })
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let d = self.dim;
        let e = |i| crate::linalg::unit_vector(self.field, d, i);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let l = self.mul(&self.mul(&e(i), &e(j)), &e(k));
                    let r = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                    if l != r {
                        out.push(Violation::new("associativity", format!("({i},{j},{k})")));
                    }
                }
            }
            if self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i) {
                out.push(Violation::new("unit", format!("{i}")));
            }
        }
        if let Some(m) = &self.bimodule {
            let act_l = |a: &[Scalar], v: &[Scalar]| {
                combine(self.field, m.dim, (0..d).flat_map(|i| (0..m.dim).map(move |p| (i, p))).map(|(i, p)| (&a[i] * &v[p], m.left[i][p].clone())))
            };
            let act_r = |v: &[Scalar], a: &[Scalar]| {
                combine(self.field, m.dim, (0..m.dim).flat_map(|p| (0..d).map(move |i| (p, i))).map(|(p, i)| (&v[p] * &a[i], m.right[p][i].clone())))
            };
            let f = |p| crate::linalg::unit_vector(self.field, m.dim, p);
            for p in 0..m.dim {
                if act_l(&self.unit, &f(p)) != f(p) || act_r(&f(p), &self.unit) != f(p) {
                    out.push(Violation::new("bimodule unit", format!("{p}")));
                }
                for i in 0..d {
                    for j in 0..d {
                        let ab = self.mul(&e(i), &e(j));
                        if act_l(&ab, &f(p)) != act_l(&e(i), &act_l(&e(j), &f(p))) {
                            out.push(Violation::new("left action", format!("({i},{j},{p})")));
                        }
                        if act_r(&f(p), &ab) != act_r(&act_r(&f(p), &e(i)), &e(j)) {
                            out.push(Violation::new("right action", format!("({p},{i},{j})")));
                        }
                        if act_r(&act_l(&e(i), &f(p)), &e(j)) != act_l(&e(i), &act_r(&f(p), &e(j))) {
                            out.push(Violation::new("actions commute", format!("({i},{p},{j})")));
                        }
                    }
                }
            }
        }
        out
    }

    /// `P⁻¹ μ(P ⊗ P)`: the same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let inv = p.inverse().ok_or_else(|| Error::Incompatible("basis change is not invertible".into()))?;
        let structure = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| inv.mul_vec(&self.mul(&p.column(i), &p.column(j)))).collect())
            .collect();
        AlgebraRep::new(self.field, structure, inv.mul_vec(&self.unit))
    }
}

fn tuples(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

/// `δ: Hom(A^⊗n, M) → Hom(A^⊗(n+1), M)` with cochains vectorised as
/// `tuple · dim M + coordinate`, tuples in mixed radix, first factor most
/// significant.
///
/// `(δf)(a₁,…,aₙ₊₁) = a₁f(a₂,…) + Σᵢ(−1)ⁱ f(…,aᵢaᵢ₊₁,…) + (−1)ⁿ⁺¹ f(a₁,…,aₙ)aₙ₊₁`.
pub fn classical_differential(alg: &AlgebraRep, m: &AlgebraBimodule, n: usize) -> Matrix {
    let field = alg.field;
    let d = alg.dim;
    let md = m.dim;
    let mut out = Matrix::zeros(field, tuples(d, n + 1) * md, tuples(d, n) * md);
    let sign = |k: usize| if k % 2 == 0 { field.one() } else { -field.one() };
    let mut idx = vec![0usize; n + 1];
    for t_out in 0..tuples(d, n + 1) {
        let mut r = t_out;
        for slot in (0..=n).rev() {
            idx[slot] = r % d;
            r /= d;
        }
        let encode = |xs: &[usize]| xs.iter().fold(0, |acc, &x| acc * d + x);
        let tail = encode(&idx[1..]);
        for q in 0..md {
            for p in 0..md {
                let c = &m.left[idx[0]][q][p];
                if !c.is_zero() {
                    out.add_at(t_out * md + p, tail * md + q, c);
                }
            }
        }
        for k in 1..=n {
            let mut merged: Vec<usize> = idx.clone();
            for rr in 0..d {
                let c = &alg.structure[idx[k - 1]][idx[k]][rr];
                if c.is_zero() {
                    continue;
                }
                merged.splice(k - 1..=k, [rr]);
                let t_in = encode(&merged);
                merged = idx.clone();
                let c = &sign(k) * c;
                for p in 0..md {
                    out.add_at(t_out * md + p, t_in * md + p, &c);
                }
            }
        }
        let head = encode(&idx[..n]);
        let s = sign(n + 1);
        for q in 0..md {
            for p in 0..md {
                let c = &m.right[q][idx[n]][p];
                if !c.is_zero() {
                    out.add_at(t_out * md + p, head * md + q, &(&s * c));
                }
            }
        }
    }
    out
}

/// `dim HHⁿ(A, M)` for `n = 0..=max_n`, from ranks of the bar differentials.
pub fn classical_hh(alg: &AlgebraRep, m: &AlgebraBimodule, max_n: usize) -> Result<Vec<usize>> {
    let diffs: Vec<Matrix> = (0..=max_n).map(|n| classical_differential(alg, m, n)).collect();
    for (n, w) in diffs.windows(2).enumerate() {
        if !w[1].mul(&w[0]).is_zero() {
            return Err(Error::BetaSquared { degree: n, object: "algebra".into() });
        }
    }
    let ranks: Vec<usize> = diffs.iter().map(rank).collect();
    Ok((0..=max_n)
        .map(|n| tuples(alg.dim, n) * m.dim - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect())
}

fn table_matrix(field: Field, t: &Table, d1: usize, d2: usize, d3: usize) -> Matrix {
    let mut out = Matrix::zeros(field, d3, d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d3 {
                out.set(k, i * d2 + j, t[i][j][k].clone());
            }
        }
    }
    out
}

fn one_object(field: Field) -> Arc<CategoryPresentation> {
    Arc::new(crate::fixtures::x1(field))
}

/// The algebra and its coefficients as a monoid and bimodule on the
/// one-object category.
pub fn lift_algebra(alg: &AlgebraRep) -> Result<(Arc<MonoidRep>, BimoduleRep)> {
    let field = alg.field;
    let cat = one_object(field);
    let d = alg.dim;
    let functor = LinearFunctorRep::new(cat.clone(), vec![d], vec![Matrix::identity(field, d)])?;
    let product = table_matrix(field, &alg.structure, d, d, d);
    let a = Arc::new(MonoidRep::new(functor, vec![vec![product]], alg.unit.clone())?);
    let m = alg.coefficients();
    let mf = LinearFunctorRep::new(cat, vec![m.dim], vec![Matrix::identity(field, m.dim)])?;
    let left = table_matrix(field, &m.left, d, m.dim, m.dim);
    let right = table_matrix(field, &m.right, m.dim, d, m.dim);
    let bm = BimoduleRep::new(a.clone(), mf, vec![vec![left]], vec![vec![right]])?;
    Ok((a, bm))
}

/// Reads the structure constants back off a monoid on a one-object category.
pub fn lower_monoid(a: &MonoidRep) -> Result<AlgebraRep> {
    let cat = a.category();
    if cat.num_objects() != 1 {
        return Err(Error::Incompatible("only one-object categories carry a plain algebra".into()));
    }
    let d = a.dim(0);
    let p = a.product(0, 0);
    let structure = (0..d).map(|i| (0..d).map(|j| p.column(i * d + j)).collect()).collect();
    AlgebraRep::new(a.field(), structure, a.unit_element().clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub classical: Vec<usize>,
    pub general: Vec<usize>,
    pub first_divergence: Option<usize>,
}

impl Crosscheck {
    pub fn passed(&self) -> bool {
        self.first_divergence.is_none()
    }
}

/// Compares the classical dimensions with the general engine on the lift.
pub fn crosscheck(alg: &AlgebraRep, max_n: usize) -> Result<Crosscheck> {
    let m = alg.coefficients();
    let classical = classical_hh(alg, &m, max_n)?;
    let (a, bm) = lift_algebra(alg)?;
    let h = crate::hochschild::Hochschild::new(&a, &bm)?;
    let c = h.at(0);
    for n in 0..=max_n {
        if c.dim(n) != tuples(alg.dim, n) * m.dim {
            return Err(Error::DimensionMismatch(format!(
                "degree {n} cochains on one object should be unconstrained"
            )));
        }
    }
    let report = crate::hochschild::hh_compute_with(&h, max_n, None)?;
    let general = report.dims_at(0);
    let first_divergence = classical.iter().zip(&general).position(|(a, b)| a != b);
    Ok(Crosscheck { classical, general, first_divergence })
}

/// Seed-determined associative algebras of dimension at most three, written
/// in a random basis.
pub fn random_algebra(field: Field, seed: u64) -> AlgebraRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = match rng.gen_range(0..5) {
        0 => {
            let n = rng.gen_range(1..=3);
            let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            truncated_polynomial(field, &coeffs)
        }
        1 => upper_triangular(field),
        2 => square_zero_plane(field),
        3 => {
            let c = rng.gen_range(-2..=2);
            product(&field_algebra(field), &truncated_polynomial(field, &[c, 0]))
        }
        _ => product(&field_algebra(field), &product(&field_algebra(field), &field_algebra(field))),
    };
    loop {
        let d = base.dim;
        let data = (0..d * d).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect();
        let p = Matrix::from_data(field, d, d, data);
        if p.inverse().is_some() {
            return base.change_basis(&p).expect("basis change of an algebra");
        }
    }
}

pub fn field_algebra(field: Field) -> AlgebraRep {
    AlgebraRep::new(field, vec![vec![vec![field.one()]]], vec![field.one()]).expect("the field is an algebra")
}

/// `k[x]/(xⁿ + cₙ₋₁xⁿ⁻¹ + … + c₀)` with `coeffs = [c₀, …, cₙ₋₁]`, basis `1, x, …`.
pub fn truncated_polynomial(field: Field, coeffs: &[i64]) -> AlgebraRep {
    let n = coeffs.len();
    // powers[k] = x^k reduced
    let mut powers: Vec<Vector> = (0..n).map(|k| crate::linalg::unit_vector(field, n, k)).collect();
    for k in n..2 * n.max(1) {
        let prev = &powers[k - 1];
        let mut next = vec![field.zero(); n];
        for i in 0..n {
            if i + 1 < n {
                next[i + 1] += &prev[i];
            }
        }
        let top = prev[n - 1].clone();
        for (i, c) in coeffs.iter().enumerate() {
            next[i] -= &(&top * &field.from_i64(*c));
        }
        powers.push(next);
    }
    let structure = (0..n).map(|i| (0..n).map(|j| powers[i + j].clone()).collect()).collect();
    AlgebraRep::new(field, structure, crate::linalg::unit_vector(field, n, 0)).expect("quotient of k[x]")
}

/// Upper triangular 2×2 matrices, basis `(e11, e12, e22)`.
pub fn upper_triangular(field: Field) -> AlgebraRep {
    let z = || vec![field.zero(); 3];
    let e = |k| crate::linalg::unit_vector(field, 3, k);
    let structure = vec![vec![e(0), e(1), z()], vec![z(), z(), e(1)], vec![z(), z(), e(2)]];
    let unit = vec![field.one(), field.zero(), field.one()];
    AlgebraRep::new(field, structure, unit).expect("matrix algebra")
}

/// `k[x, y]/(x, y)²`, basis `(1, x, y)`.
pub fn square_zero_plane(field: Field) -> AlgebraRep {
    let z = || vec![field.zero(); 3];
    let e = |k| crate::linalg::unit_vector(field, 3, k);
    let structure = vec![vec![e(0), e(1), e(2)], vec![e(1), z(), z()], vec![e(2), z(), z()]];
    AlgebraRep::new(field, structure, e(0)).expect("local algebra")
}

/// `A × B` with basis the basis of `A` followed by that of `B`.
pub fn product(a: &AlgebraRep, b: &AlgebraRep) -> AlgebraRep {
    let field = a.field;
    let d = a.dim + b.dim;
    let embed = |v: &Vector, offset: usize| {
        let mut out = vec![field.zero(); d];
        for (k, c) in v.iter().enumerate() {
            out[offset + k] = c.clone();
        }
        out
    };
    let structure = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| match (i < a.dim, j < a.dim) {
                    (true, true) => embed(&a.structure[i][j], 0),
                    (false, false) => embed(&b.structure[i - a.dim][j - a.dim], a.dim),
                    _ => vec![field.zero(); d],
                })
                .collect()
        })
        .collect();
    let mut unit = embed(&a.unit, 0);
    for (k, c) in b.unit.iter().enumerate() {
        unit[a.dim + k] = c.clone();
    }
    AlgebraRep::new(field, structure, unit).expect("product of algebras")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn classical_dims() {
        let q = Field::Rationals;
        let k = field_algebra(q);
        assert_eq!(classical_hh(&k, &k.coefficients(), 3).unwrap(), vec![1, 0, 0, 0]);
        let dual = truncated_polynomial(q, &[0, 0]);
        assert_eq!(classical_hh(&dual, &dual.coefficients(), 3).unwrap(), vec![2, 1, 1, 1]);
        let c2 = truncated_polynomial(q, &[-1, 0]);
        assert_eq!(classical_hh(&c2, &c2.coefficients(), 3).unwrap(), vec![2, 0, 0, 0]);
        let f2 = Field::prime(2).unwrap();
        let c2 = truncated_polynomial(f2, &[-1, 0]);
        assert_eq!(classical_hh(&c2, &c2.coefficients(), 3).unwrap(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn lift_round_trips() {
        let q = Field::Rationals;
        let dual = truncated_polynomial(q, &[0, 0]);
        let (a, m) = lift_algebra(&dual).unwrap();
        assert_eq!(a.to_file().product, fixtures::dual_numbers(q).to_file().product);
        assert_eq!(m, BimoduleRep::regular(&a));
        assert_eq!(lower_monoid(&a).unwrap(), dual);
        let m2 = lower_monoid(&fixtures::matrix_algebra(q)).unwrap();
        let (b, _) = lift_algebra(&m2).unwrap();
        assert_eq!(b.to_file().product, fixtures::matrix_algebra(q).to_file().product);
        let zero = AlgebraBimodule { dim: 0, left: vec![vec![]; 2], right: vec![] };
        let (_, z) = lift_algebra(&dual.clone().with_bimodule(zero).unwrap()).unwrap();
        assert_eq!(z.dim(0), 0);
    }

    #[test]
    fn random_algebras_are_deterministic_and_valid() {
        for seed in 0..20 {
            let a = random_algebra(Field::Rationals, seed);
            assert!(a.validate().is_empty());
            assert!(a.dim <= 3);
            assert_eq!(a, random_algebra(Field::Rationals, seed));
        }
    }

    #[test]
    fn file_round_trip() {
        let a = random_algebra(Field::Rationals, 3);
        assert_eq!(AlgebraRep::from_file(&a.to_file()).unwrap(), a);
    }

    #[test]
    fn crosscheck_small() {
        let dual = truncated_polynomial(Field::Rationals, &[0, 0]);
        let c = crosscheck(&dual, 3).unwrap();
        assert!(c.passed(), "{c:?}");
    }
}
