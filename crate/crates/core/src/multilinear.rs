//! Natural multilinear families `M₁(x₁) ⊗ … ⊗ Mₙ(xₙ) → T(x₁⋄…⋄xₙ)`.
//!
//! Tuples of objects are enumerated lexicographically in object order. Each
//! tuple carries one matrix whose columns follow the lexicographic order of
//! tensor basis vectors, first slot most significant. A family is stored as
//! the concatenation of these matrices, row-major.

use std::sync::Arc;

use crate::category::{CategoryPresentation, ObjId};
use crate::error::{Error, Result};
use crate::functor::LinearFunctorRep;
use crate::linalg::{rref, Block, ConstraintSystem, Matrix, Term, Vector};
use crate::scalar::{Field, Scalar};

/// Shapes of all tuple blocks for fixed source and target functors.
#[derive(Clone, Debug)]
pub struct FamilyLayout {
    cat: Arc<CategoryPresentation>,
    source_dims: Vec<Vec<usize>>,
    target_dims: Vec<usize>,
    blocks: Vec<Block>,
    len: usize,
}

impl FamilyLayout {
    pub fn new(cat: Arc<CategoryPresentation>, source_dims: Vec<Vec<usize>>, target_dims: Vec<usize>) -> Self {
        let n = cat.num_objects();
        let arity = source_dims.len();
        let count = n.pow(arity as u32);
        let mut blocks = Vec::with_capacity(count);
        let mut offset = 0;
        let mut tuple = vec![0; arity];
        for k in 0..count {
            if k > 0 {
                advance(&mut tuple, n);
            }
            let rows = target_dims[cat.tensor_objs(&tuple)];
            let cols = tuple.iter().zip(&source_dims).map(|(&x, d)| d[x]).product();
            blocks.push(Block { offset, rows, cols });
            offset += rows * cols;
        }
        FamilyLayout {
            cat,
            source_dims,
            target_dims,
            blocks,
            len: offset,
        }
    }

    pub fn for_functors(sources: &[&LinearFunctorRep], target: &LinearFunctorRep) -> Self {
        FamilyLayout::new(
            target.category().clone(),
            sources.iter().map(|s| s.dims().to_vec()).collect(),
            target.dims().to_vec(),
        )
    }

    pub fn category(&self) -> &Arc<CategoryPresentation> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field()
    }

    pub fn arity(&self) -> usize {
        self.source_dims.len()
    }

    /// Number of scalar entries in a family.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn num_tuples(&self) -> usize {
        self.blocks.len()
    }

    pub fn source_dim(&self, slot: usize, x: ObjId) -> usize {
        self.source_dims[slot][x]
    }

    pub fn target_dim(&self, x: ObjId) -> usize {
        self.target_dims[x]
    }

    pub fn block(&self, k: usize) -> Block {
        self.blocks[k]
    }

    pub fn tuple(&self, mut k: usize) -> Vec<ObjId> {
        let n = self.cat.num_objects();
        let mut t = vec![0; self.arity()];
        for slot in t.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        t
    }

    pub fn tuple_index(&self, t: &[ObjId]) -> usize {
        let n = self.cat.num_objects();
        t.iter().fold(0, |acc, &x| acc * n + x)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<ObjId>> + '_ {
        (0..self.num_tuples()).map(|k| self.tuple(k))
    }

    pub fn zero(self: &Arc<Self>) -> MultilinearFamily {
        let field = self.field();
        MultilinearFamily {
            layout: self.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| Matrix::zeros(field, b.rows, b.cols))
                .collect(),
        }
    }
}

fn advance(t: &mut [ObjId], n: usize) {
    for slot in t.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return;
        }
        *slot = 0;
    }
}

/// One matrix per tuple of objects.
#[derive(Clone, Debug)]
pub struct MultilinearFamily {
    pub layout: Arc<FamilyLayout>,
    pub blocks: Vec<Matrix>,
}

impl PartialEq for MultilinearFamily {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl MultilinearFamily {
    pub fn from_vector(layout: &Arc<FamilyLayout>, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), layout.len(), "family length");
        let field = layout.field();
        MultilinearFamily {
            layout: layout.clone(),
            blocks: layout
                .blocks
                .iter()
                .map(|b| Matrix::from_data(field, b.rows, b.cols, v[b.offset..b.offset + b.rows * b.cols].to_vec()))
                .collect(),
        }
    }

    pub fn to_vector(&self) -> Vector {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    pub fn block_at(&self, t: &[ObjId]) -> &Matrix {
        &self.blocks[self.layout.tuple_index(t)]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        MultilinearFamily {
            layout: self.layout.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        MultilinearFamily {
            layout: self.layout.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        MultilinearFamily {
            layout: self.layout.clone(),
            blocks: self.blocks.iter().map(|a| a.scale(s)).collect(),
        }
    }
}

/// The space of natural families, presented by the reduced echelon form of
/// its naturality constraints. Coordinates are the values of the free
/// entries.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    layout: Arc<FamilyLayout>,
    free: Vec<usize>,
    /// For each pivot entry, its expression `−Σ c · free` as `(free slot, c)`.
    pivot_rows: Vec<(usize, Vec<(usize, Scalar)>)>,
}

impl CochainSpace {
    /// Space of all families of the layout, without constraints.
    pub fn unconstrained(layout: Arc<FamilyLayout>) -> Self {
        CochainSpace {
            free: (0..layout.len()).collect(),
            layout,
            pivot_rows: Vec::new(),
        }
    }

    pub fn from_constraints(layout: Arc<FamilyLayout>, sys: &ConstraintSystem) -> Self {
        let m = sys.to_matrix();
        if m.rows() == 0 {
            return Self::unconstrained(layout);
        }
        let dec = rref(&m);
        let mut is_pivot = vec![false; layout.len()];
        for &p in &dec.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..layout.len()).filter(|&c| !is_pivot[c]).collect();
        let pivot_rows = dec
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &p)| {
                let terms = free
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !dec.echelon.get(r, c).is_zero())
                    .map(|(j, &c)| (j, dec.echelon.get(r, c).clone()))
                    .collect();
                (p, terms)
            })
            .collect();
        CochainSpace {
            layout,
            free,
            pivot_rows,
        }
    }

    pub fn layout(&self) -> &Arc<FamilyLayout> {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn field(&self) -> Field {
        self.layout.field()
    }

    /// The full family with the given coordinates.
    pub fn decode_vector(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim(), "cochain coordinates");
        let field = self.field();
        let mut v = vec![field.zero(); self.layout.len()];
        for (c, &f) in coords.iter().zip(&self.free) {
            v[f] = c.clone();
        }
        for (p, terms) in &self.pivot_rows {
            let mut acc = field.zero();
            for (j, c) in terms {
                if !coords[*j].is_zero() {
                    acc -= &(c * &coords[*j]);
                }
            }
            v[*p] = acc;
        }
        v
    }

    pub fn decode(&self, coords: &[Scalar]) -> MultilinearFamily {
        MultilinearFamily::from_vector(&self.layout, &self.decode_vector(coords))
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.layout.len()
            && self.pivot_rows.iter().all(|(p, terms)| {
                let mut acc = v[*p].clone();
                for (j, c) in terms {
                    acc += &(c * &v[self.free[*j]]);
                }
                acc.is_zero()
            })
    }

    pub fn contains(&self, f: &MultilinearFamily) -> bool {
        self.contains_vector(&f.to_vector())
    }

    pub fn encode_vector(&self, v: &[Scalar]) -> Result<Vector> {
        if !self.contains_vector(v) {
            return Err(Error::Incompatible("family is not natural".into()));
        }
        Ok(self.free.iter().map(|&f| v[f].clone()).collect())
    }

    pub fn encode(&self, f: &MultilinearFamily) -> Result<Vector> {
        self.encode_vector(&f.to_vector())
    }

    pub fn basis_family(&self, k: usize) -> MultilinearFamily {
        let field = self.field();
        let mut c = vec![field.zero(); self.dim()];
        c[k] = field.one();
        self.decode(&c)
    }
}

/// Naturality constraints in every slot; `source_map(slot, g)` is the
/// matrix of the slot's functor on basis morphism `g`.
pub(crate) fn naturality_system(
    layout: &FamilyLayout,
    source_map: &dyn Fn(usize, usize) -> Matrix,
    target: &LinearFunctorRep,
) -> ConstraintSystem {
    let cat = layout.category();
    let field = layout.field();
    let mut sys = ConstraintSystem::new(field, layout.len());
    let arity = layout.arity();
    for k in 0..layout.num_tuples() {
        let t = layout.tuple(k);
        for slot in 0..arity {
            let outgoing = cat.objects().flat_map(|y| cat.hom_basis(t[slot], y).iter().copied());
            for g in outgoing {
                if cat.is_identity_basis(g) {
                    continue;
                }
                let b = cat.basis_morphism(g);
                let mut t2 = t.clone();
                t2[slot] = b.tgt;
                let left = cat.tensor_objs(&t[..slot]);
                let right = cat.tensor_objs(&t[slot + 1..]);
                let tmap = target.apply(&cat.whisker(left, &cat.basis_expr(g), right));
                let before: usize = (0..slot).map(|i| layout.source_dim(i, t[i])).product();
                let after: usize = (slot + 1..arity).map(|i| layout.source_dim(i, t[i])).product();
                let smap = Matrix::identity(field, before)
                    .kron(&source_map(slot, g))
                    .kron(&Matrix::identity(field, after));
                let k2 = layout.tuple_index(&t2);
                sys.add(&[
                    Term {
                        coeff: field.one(),
                        left: Some(&tmap),
                        block: layout.block(k),
                        right: None,
                    },
                    Term {
                        coeff: field.from_i64(-1),
                        left: None,
                        block: layout.block(k2),
                        right: Some(&smap),
                    },
                ]);
            }
        }
    }
    sys
}

/// Basis of all natural multilinear families from `sources` to `target`.
pub fn solve_multilinear_natural(sources: &[&LinearFunctorRep], target: &LinearFunctorRep) -> CochainSpace {
    let layout = Arc::new(FamilyLayout::for_functors(sources, target));
    let sys = naturality_system(&layout, &|slot, g| sources[slot].basis_map(g).clone(), target);
    CochainSpace::from_constraints(layout, &sys)
}

/// Applies `p` to the tensor factor spanning positions `[before, before+1)`
/// of the column index `(b, j, a)` with `b < before_dim`, `a < after_dim`:
/// the result has columns `(b, i, a)` where `p` maps index `i` to `j`.
pub(crate) fn precompose_factor(block: &Matrix, before: usize, p: &Matrix, after: usize) -> Matrix {
    let field = block.field();
    let (dout, din) = (p.rows(), p.cols());
    debug_assert_eq!(block.cols(), before * dout * after);
    let mut out = Matrix::zeros(field, block.rows(), before * din * after);
    let nz: Vec<(usize, usize, &Scalar)> = (0..dout)
        .flat_map(|j| (0..din).map(move |i| (j, i)))
        .filter_map(|(j, i)| {
            let v = p.get(j, i);
            (!v.is_zero()).then_some((j, i, v))
        })
        .collect();
    for r in 0..block.rows() {
        for b in 0..before {
            for &(j, i, v) in &nz {
                for a in 0..after {
                    let x = block.get(r, (b * dout + j) * after + a);
                    if !x.is_zero() {
                        out.add_at(r, (b * din + i) * after + a, &(x * v));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::yoneda_functor;
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn yoneda_in_multilinear_form() {
        let cat = Arc::new(fixtures::x1(Q));
        let i = yoneda_functor(&cat, 0).unwrap();
        let f = LinearFunctorRep::new(cat.clone(), vec![3], vec![Matrix::identity(Q, 3)]).unwrap();
        assert_eq!(solve_multilinear_natural(&[&i], &f).dim(), 3);
    }

    #[test]
    fn identity_only_categories_have_no_constraints() {
        let cat = Arc::new(fixtures::xc2(Q));
        let f = LinearFunctorRep::new(cat.clone(), vec![1, 1], vec![Matrix::identity(Q, 1); 2]).unwrap();
        let s = solve_multilinear_natural(&[&f, &f], &f);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.layout().tuples().collect::<Vec<_>>(), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn round_trip_and_naturality() {
        let cat = Arc::new(fixtures::x1_eps(Q));
        let y = yoneda_functor(&cat, 0).unwrap();
        let s = solve_multilinear_natural(&[&y, &y], &y);
        // a natural bilinear map I ⊗ I → I is determined by f(id, id) ∈ I(1)
        assert_eq!(s.dim(), 2);
        for k in 0..s.dim() {
            let f = s.basis_family(k);
            let c = s.encode(&f).unwrap();
            assert_eq!(s.decode(&c), f);
        }
        let mut bad = s.layout().zero();
        bad.blocks[0].set(0, 1, Q.one());
        assert!(s.encode(&bad).is_err());
    }

    #[test]
    fn factor_precomposition_matches_kron() {
        let block = Matrix::from_ints(Q, &[[1, 2, 3, 4, 5, 6, 7, 8], [0, 1, 0, 1, 0, 1, 0, 1]]);
        let p = Matrix::from_ints(Q, &[[1, 0, 2], [3, 1, 0]]);
        let expect = block.mul(&Matrix::identity(Q, 2).kron(&p).kron(&Matrix::identity(Q, 2)));
        assert_eq!(precompose_factor(&block, 2, &p, 2), expect);
    }
}
