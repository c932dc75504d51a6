//! Bounded cochain complexes of finite-dimensional spaces, their cohomology
//! and the long exact sequence of a short exact sequence of complexes.

use crate::error::{Error, Result};
use crate::linalg::{rank, rref, solve_affine, Matrix, Reducer, SubspaceBasis, Vector};
use crate::scalar::Field;

/// `C⁰ → C¹ → … → Cᴺ`; degree `N` is treated as having zero outgoing
/// differential.
#[derive(Clone, Debug)]
pub struct CochainComplexRep {
    field: Field,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl CochainComplexRep {
    /// `diffs[n]` maps degree `n` to degree `n+1`.
    pub fn new(field: Field, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (n, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[n + 1], dims[n]) {
                return Err(Error::DimensionMismatch(format!("differential in degree {n}")));
            }
        }
        for n in 1..diffs.len() {
            if !diffs[n].mul(&diffs[n - 1]).is_zero() {
                return Err(Error::BetaSquared {
                    degree: n - 1,
                    object: "-".into(),
                });
            }
        }
        Ok(CochainComplexRep { field, dims, diffs })
    }

    pub fn zero(field: Field, top: usize) -> Self {
        CochainComplexRep {
            field,
            dims: vec![0; top + 1],
            diffs: (0..top).map(|_| Matrix::zeros(field, 0, 0)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dⁿ`, the zero map out of the top degree.
    pub fn differential(&self, n: usize) -> Matrix {
        match self.diffs.get(n) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.field, 0, self.dims[n]),
        }
    }

    fn incoming(&self, n: usize) -> Matrix {
        if n == 0 {
            Matrix::zeros(self.field, self.dims[0], 0)
        } else {
            self.diffs[n - 1].clone()
        }
    }

    /// Direct sum, own coordinates first.
    pub fn direct_sum(&self, other: &CochainComplexRep) -> CochainComplexRep {
        CochainComplexRep {
            field: self.field,
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            diffs: self.diffs.iter().zip(&other.diffs).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }
}

/// Cohomology in one degree.
#[derive(Clone, Debug)]
pub struct CohomologyDegree {
    pub dim: usize,
    /// Cocycles whose classes form a basis.
    pub representatives: Vec<Vector>,
    /// `dim × Cⁿ`; sends a cocycle to the coordinates of its class.
    pub coordinates: Matrix,
    pub cocycles: SubspaceBasis,
    pub coboundaries: SubspaceBasis,
}

impl CohomologyDegree {
    pub fn class_of(&self, cocycle: &[crate::scalar::Scalar]) -> Vector {
        self.coordinates.mul_vec(cocycle)
    }

    pub fn is_coboundary(&self, cocycle: &[crate::scalar::Scalar]) -> bool {
        self.coboundaries.contains(cocycle)
    }
}

pub fn cohomology_in_degree(c: &CochainComplexRep, n: usize) -> CohomologyDegree {
    let field = c.field;
    let ambient = c.dims[n];
    let cocycles = rref(&c.differential(n)).kernel;
    let incoming = c.incoming(n);
    let coboundaries = SubspaceBasis::spanned_by(field, ambient, &incoming.transpose().to_rows());
    let mut reducer = Reducer::new(ambient);
    for b in coboundaries.vectors() {
        reducer.insert(b);
    }
    let representatives: Vec<Vector> = cocycles
        .vectors()
        .iter()
        .filter(|z| reducer.insert(z))
        .cloned()
        .collect();
    // complete [B | R] to a basis [B | R | W] and read off the R rows of
    // the inverse
    let mut cols: Vec<Vector> = coboundaries.vectors().to_vec();
    cols.extend(representatives.iter().cloned());
    for i in 0..ambient {
        let e = crate::linalg::unit_vector(field, ambient, i);
        if reducer.insert(&e) {
            cols.push(e);
        }
    }
    let dim = representatives.len();
    let coordinates = if ambient == 0 {
        Matrix::zeros(field, 0, 0)
    } else {
        let basis = Matrix::from_rows(field, ambient, cols).expect("square").transpose();
        let inv = basis.inverse().expect("completed basis is invertible");
        let b = coboundaries.dim();
        inv.submatrix(b..b + dim, 0..ambient)
    };
    CohomologyDegree {
        dim,
        representatives,
        coordinates,
        cocycles,
        coboundaries,
    }
}

/// Cohomology in every degree of the complex.
pub fn cohomology_of_complex(c: &CochainComplexRep) -> Vec<CohomologyDegree> {
    (0..c.dims.len()).map(|n| cohomology_in_degree(c, n)).collect()
}

/// `0 → K → M → N → 0`, degreewise.
#[derive(Clone, Debug)]
pub struct ComplexSESRep {
    pub k: CochainComplexRep,
    pub m: CochainComplexRep,
    pub n: CochainComplexRep,
    pub injection: Vec<Matrix>,
    pub surjection: Vec<Matrix>,
}

impl ComplexSESRep {
    pub fn new(
        k: CochainComplexRep,
        m: CochainComplexRep,
        n: CochainComplexRep,
        injection: Vec<Matrix>,
        surjection: Vec<Matrix>,
    ) -> Result<Self> {
        let s = ComplexSESRep {
            k,
            m,
            n,
            injection,
            surjection,
        };
        s.check()?;
        Ok(s)
    }

    /// The split sequence `K → K ⊕ N → N`.
    pub fn split(k: &CochainComplexRep, n: &CochainComplexRep) -> Self {
        let field = k.field;
        let m = k.direct_sum(n);
        let injection = (0..k.dims.len())
            .map(|d| Matrix::identity(field, k.dims[d]).vstack(&Matrix::zeros(field, n.dims[d], k.dims[d])))
            .collect();
        let surjection = (0..k.dims.len())
            .map(|d| Matrix::zeros(field, n.dims[d], k.dims[d]).hstack(&Matrix::identity(field, n.dims[d])))
            .collect();
        ComplexSESRep {
            k: k.clone(),
            m,
            n: n.clone(),
            injection,
            surjection,
        }
    }

    fn check(&self) -> Result<()> {
        let top = self.k.top_degree();
        if self.m.top_degree() != top || self.n.top_degree() != top {
            return Err(Error::Incompatible("complexes of different lengths".into()));
        }
        if self.injection.len() != top + 1 || self.surjection.len() != top + 1 {
            return Err(Error::DimensionMismatch("one map per degree".into()));
        }
        for d in 0..=top {
            let (i, p) = (&self.injection[d], &self.surjection[d]);
            if i.shape() != (self.m.dims[d], self.k.dims[d]) || p.shape() != (self.n.dims[d], self.m.dims[d]) {
                return Err(Error::DimensionMismatch(format!("maps in degree {d}")));
            }
            let exact = p.mul(i).is_zero()
                && rank(i) == self.k.dims[d]
                && rank(p) == self.n.dims[d]
                && self.m.dims[d] == self.k.dims[d] + self.n.dims[d];
            if !exact {
                return Err(Error::single("degreewise exactness", format!("degree {d}")));
            }
            if d < top {
                let ci = self.m.diffs[d].mul(i) == self.injection[d + 1].mul(&self.k.diffs[d]);
                let cp = self.n.diffs[d].mul(p) == self.surjection[d + 1].mul(&self.m.diffs[d]);
                if !ci || !cp {
                    return Err(Error::single("chain map", format!("degree {d}")));
                }
            }
        }
        Ok(())
    }
}

/// Cohomology of the three complexes and the maps between them.
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub dims_k: Vec<usize>,
    pub dims_m: Vec<usize>,
    pub dims_n: Vec<usize>,
    /// `H(i): Hⁿ(K) → Hⁿ(M)`.
    pub induced_injection: Vec<Matrix>,
    /// `H(p): Hⁿ(M) → Hⁿ(N)`.
    pub induced_surjection: Vec<Matrix>,
    /// `δⁿ: Hⁿ(N) → Hⁿ⁺¹(K)` for `n < maxN`.
    pub connecting: Vec<Matrix>,
    /// One verdict per junction, in sequence order.
    pub junctions: Vec<Junction>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Junction {
    pub label: String,
    pub exact: bool,
}

impl LongExactSequence {
    pub fn is_exact(&self) -> bool {
        self.junctions.iter().all(|j| j.exact)
    }
}

fn induced(map: &Matrix, src: &CohomologyDegree, tgt: &CohomologyDegree, field: Field) -> Matrix {
    let mut out = Matrix::zeros(field, tgt.dim, src.dim);
    for (j, z) in src.representatives.iter().enumerate() {
        for (i, v) in tgt.class_of(&map.mul_vec(z)).into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

/// The long exact sequence through degree `max_n`; the complexes must reach
/// degree `max_n + 1`.
pub fn les_of_complex_ses(s: &ComplexSESRep, max_n: usize) -> Result<LongExactSequence> {
    s.check()?;
    if s.k.top_degree() < max_n + 1 {
        return Err(Error::Incompatible(format!(
            "complexes stop at degree {}, need {}",
            s.k.top_degree(),
            max_n + 1
        )));
    }
    let field = s.k.field;
    let hk = cohomology_of_complex(&s.k);
    let hm = cohomology_of_complex(&s.m);
    let hn = cohomology_of_complex(&s.n);
    let mut induced_injection = Vec::new();
    let mut induced_surjection = Vec::new();
    let mut connecting = Vec::new();
    for d in 0..=max_n {
        induced_injection.push(induced(&s.injection[d], &hk[d], &hm[d], field));
        induced_surjection.push(induced(&s.surjection[d], &hm[d], &hn[d], field));
        if d < max_n {
            let mut delta = Matrix::zeros(field, hk[d + 1].dim, hn[d].dim);
            for (j, z) in hn[d].representatives.iter().enumerate() {
                let lift = solve_affine(&s.surjection[d], z)?.expect("surjection").particular;
                let dy = s.m.diffs[d].mul_vec(&lift);
                let u = solve_affine(&s.injection[d + 1], &dy)?
                    .ok_or_else(|| Error::Incompatible("boundary of a lift is not in the kernel".into()))?
                    .particular;
                for (i, v) in hk[d + 1].class_of(&u).into_iter().enumerate() {
                    delta.set(i, j, v);
                }
            }
            connecting.push(delta);
        }
    }
    // H⁰K → H⁰M → H⁰N → H¹K → …; exact at V iff the composite through V
    // vanishes and rank(in) + rank(out) = dim V
    let check = |label: String, inc: Option<&Matrix>, out: Option<&Matrix>, dim: usize| {
        let ri = inc.map_or(0, rank);
        let ro = out.map_or(0, rank);
        let zero = match (inc, out) {
            (Some(a), Some(b)) => b.mul(a).is_zero(),
            _ => true,
        };
        Junction {
            label,
            exact: zero && ri + ro == dim,
        }
    };
    let mut junctions = Vec::new();
    for d in 0..=max_n {
        let prev_delta = if d == 0 { None } else { connecting.get(d - 1) };
        junctions.push(check(format!("H{d}(K)"), prev_delta, Some(&induced_injection[d]), hk[d].dim));
        junctions.push(check(
            format!("H{d}(M)"),
            Some(&induced_injection[d]),
            Some(&induced_surjection[d]),
            hm[d].dim,
        ));
        if d < max_n {
            junctions.push(check(
                format!("H{d}(N)"),
                Some(&induced_surjection[d]),
                Some(&connecting[d]),
                hn[d].dim,
            ));
        }
    }
    Ok(LongExactSequence {
        dims_k: hk[..=max_n].iter().map(|h| h.dim).collect(),
        dims_m: hm[..=max_n].iter().map(|h| h.dim).collect(),
        dims_n: hn[..=max_n].iter().map(|h| h.dim).collect(),
        induced_injection,
        induced_surjection,
        connecting,
        junctions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn two_term(d: i64) -> CochainComplexRep {
        CochainComplexRep::new(Q, vec![1, 1], vec![Matrix::from_ints(Q, &[[d]])]).unwrap()
    }

    #[test]
    fn small_examples() {
        let dims = |c: &CochainComplexRep| cohomology_of_complex(c).iter().map(|h| h.dim).collect::<Vec<_>>();
        assert_eq!(dims(&two_term(1)), vec![0, 0]);
        assert_eq!(dims(&two_term(0)), vec![1, 1]);
    }

    #[test]
    fn nonzero_square_is_rejected() {
        let d = Matrix::from_ints(Q, &[[1]]);
        let err = CochainComplexRep::new(Q, vec![1, 1, 1], vec![d.clone(), d]).unwrap_err();
        assert!(matches!(err, Error::BetaSquared { degree: 0, .. }));
    }

    #[test]
    fn representatives_and_coordinates() {
        // C⁰ = Q → C¹ = Q² → C² = Q, d⁰ = (1,1)ᵀ, d¹ = (1,−1)
        let c = CochainComplexRep::new(
            Q,
            vec![1, 2, 1],
            vec![Matrix::from_ints(Q, &[[1], [1]]), Matrix::from_ints(Q, &[[1, -1]])],
        )
        .unwrap();
        let h = cohomology_of_complex(&c);
        assert_eq!(h.iter().map(|h| h.dim).collect::<Vec<_>>(), vec![0, 0, 0]);
        let c = CochainComplexRep::new(
            Q,
            vec![1, 2, 1],
            vec![Matrix::from_ints(Q, &[[1], [1]]), Matrix::from_ints(Q, &[[0, 0]])],
        )
        .unwrap();
        let h1 = &cohomology_of_complex(&c)[1];
        assert_eq!(h1.dim, 1);
        let rep = &h1.representatives[0];
        assert_eq!(h1.class_of(rep), vec![Q.one()]);
        assert_eq!(h1.class_of(&[Q.one(), Q.one()]), vec![Q.zero()]);
    }

    #[test]
    fn split_les() {
        let zero = CochainComplexRep::zero(Q, 2);
        let les = les_of_complex_ses(&ComplexSESRep::split(&zero, &zero), 1).unwrap();
        assert!(les.is_exact());
        let a = CochainComplexRep::new(
            Q,
            vec![1, 2, 1],
            vec![Matrix::from_ints(Q, &[[1], [0]]), Matrix::from_ints(Q, &[[0, 1]])],
        )
        .unwrap();
        let b = CochainComplexRep::new(Q, vec![1, 1, 1], vec![Matrix::from_ints(Q, &[[0]]); 2]).unwrap();
        let les = les_of_complex_ses(&ComplexSESRep::split(&a, &b), 1).unwrap();
        assert!(les.is_exact());
        assert!(les.connecting.iter().all(Matrix::is_zero));
        for d in 0..=1 {
            assert_eq!(les.dims_m[d], les.dims_k[d] + les.dims_n[d]);
        }
    }

    #[test]
    fn nonsplit_connecting_map() {
        // K = (0 → Q → 0), M = (Q →id→ Q → 0), N = (Q → 0 → 0)
        let k = CochainComplexRep::new(Q, vec![0, 1, 0], vec![Matrix::zeros(Q, 1, 0), Matrix::zeros(Q, 0, 1)]).unwrap();
        let m = CochainComplexRep::new(Q, vec![1, 1, 0], vec![Matrix::identity(Q, 1), Matrix::zeros(Q, 0, 1)]).unwrap();
        let n = CochainComplexRep::new(Q, vec![1, 0, 0], vec![Matrix::zeros(Q, 0, 1), Matrix::zeros(Q, 0, 0)]).unwrap();
        let s = ComplexSESRep::new(
            k,
            m,
            n,
            vec![Matrix::zeros(Q, 1, 0), Matrix::identity(Q, 1), Matrix::zeros(Q, 0, 0)],
            vec![Matrix::identity(Q, 1), Matrix::zeros(Q, 0, 1), Matrix::zeros(Q, 0, 0)],
        )
        .unwrap();
        let les = les_of_complex_ses(&s, 1).unwrap();
        assert_eq!(les.connecting[0], Matrix::identity(Q, 1));
        assert!(les.is_exact());
    }
}
