//! Linear functors `X → Vect`, natural transformations between them and the
//! Yoneda–Dress shift `F_x = F(− ⋄ x)`.

use std::sync::Arc;

use crate::category::{CategoryPresentation, MorExpr, ObjId};
use crate::error::{Error, Result, Violation};
use crate::format::{matrix_from_json, matrix_to_json, FunctorBody};
use crate::linalg::{Block, ConstraintSystem, Matrix, SubspaceBasis, Term};
use crate::scalar::Field;

/// A linear functor given by its dimensions and one matrix per basis
/// morphism. Matrices map source coordinates to target coordinates.
#[derive(Clone, Debug)]
pub struct LinearFunctorRep {
    cat: Arc<CategoryPresentation>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for LinearFunctorRep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.cat, &other.cat) && self.dims == other.dims && self.maps == other.maps
    }
}

impl LinearFunctorRep {
    /// Builds a functor and checks identities and composition.
    pub fn new(cat: Arc<CategoryPresentation>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let f = Self::unchecked(cat, dims, maps)?;
        let v = f.validate();
        if v.is_empty() {
            Ok(f)
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Shape-checked but axiom-unchecked construction.
    pub fn unchecked(cat: Arc<CategoryPresentation>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != cat.num_objects() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} objects",
                dims.len(),
                cat.num_objects()
            )));
        }
        if maps.len() != cat.basis().len() {
            return Err(Error::DimensionMismatch("one matrix per basis morphism".into()));
        }
        for (b, m) in cat.basis().iter().zip(&maps) {
            if m.shape() != (dims[b.tgt], dims[b.src]) {
                return Err(Error::DimensionMismatch(format!(
                    "matrix of {} is {}x{}, expected {}x{}",
                    b.name,
                    m.rows(),
                    m.cols(),
                    dims[b.tgt],
                    dims[b.src]
                )));
            }
        }
        Ok(LinearFunctorRep { cat, dims, maps })
    }

    /// Reads a functor body; omitted identity morphisms act as identities
    /// and omitted maps between zero spaces are empty.
    pub fn from_body(cat: Arc<CategoryPresentation>, body: &FunctorBody) -> Result<Self> {
        let field = cat.field();
        let mut dims = vec![None; cat.num_objects()];
        for (name, &d) in &body.values {
            dims[cat.object(name)?] = Some(d);
        }
        let dims: Vec<usize> = dims
            .into_iter()
            .enumerate()
            .map(|(x, d)| {
                d.ok_or_else(|| Error::Parse(format!("no dimension for object {}", cat.object_name(x))))
            })
            .collect::<Result<_>>()?;
        for name in body.maps.keys() {
            cat.morphism(name)?;
        }
        let mut maps = Vec::with_capacity(cat.basis().len());
        for (g, b) in cat.basis().iter().enumerate() {
            let (r, c) = (dims[b.tgt], dims[b.src]);
            let m = match body.maps.get(&b.name) {
                Some(rows) => matrix_from_json(field, r, c, rows, &b.name)?,
                None if cat.is_identity_basis(g) => Matrix::identity(field, r),
                None if r == 0 || c == 0 => Matrix::zeros(field, r, c),
                None => return Err(Error::Parse(format!("no matrix for {}", b.name))),
            };
            maps.push(m);
        }
        Self::new(cat, dims, maps)
    }

    pub fn to_body(&self) -> FunctorBody {
        FunctorBody {
            category: None,
            values: self
                .cat
                .objects()
                .map(|x| (self.cat.object_name(x).to_string(), self.dims[x]))
                .collect(),
            maps: self
                .cat
                .basis()
                .iter()
                .enumerate()
                .filter(|(g, _)| !(self.cat.is_identity_basis(*g) && self.maps[*g].is_identity()))
                .filter(|(g, _)| !self.maps[*g].data().is_empty())
                .map(|(g, b)| (b.name.clone(), matrix_to_json(&self.maps[g])))
                .collect(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = &self.cat;
        let mut out = Vec::new();
        for x in cat.objects() {
            if !self.apply(&cat.identity(x)).is_identity() {
                out.push(Violation::new("functor identity", cat.object_name(x)));
            }
        }
        for (f, bf) in cat.basis().iter().enumerate() {
            for (g, bg) in cat.basis().iter().enumerate() {
                if bf.tgt != bg.src {
                    continue;
                }
                let gf = cat
                    .compose(&cat.basis_expr(g), &cat.basis_expr(f))
                    .expect("composable");
                if self.apply(&gf) != self.maps[g].mul(&self.maps[f]) {
                    out.push(Violation::new(
                        "functor composition",
                        format!("({},{})", bg.name, bf.name),
                    ));
                }
            }
        }
        out
    }

    pub fn zero(cat: Arc<CategoryPresentation>) -> Self {
        let field = cat.field();
        let maps = cat
            .basis()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        let dims = vec![0; cat.num_objects()];
        LinearFunctorRep { cat, dims, maps }
    }

    pub fn category(&self) -> &Arc<CategoryPresentation> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field()
    }

    pub fn dim(&self, x: ObjId) -> usize {
        self.dims[x]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn basis_map(&self, g: usize) -> &Matrix {
        &self.maps[g]
    }

    /// The matrix of an arbitrary morphism, extended linearly.
    pub fn apply(&self, m: &MorExpr) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dims[m.tgt], self.dims[m.src]);
        for (i, c) in m.coords.iter().enumerate() {
            if !c.is_zero() {
                let g = self.cat.hom_basis(m.src, m.tgt)[i];
                out = out.add(&self.maps[g].scale(c));
            }
        }
        out
    }

    /// `F_x`: `y ↦ F(y⋄x)`, `φ ↦ F(φ⋄id_x)`.
    pub fn shift(&self, x: ObjId) -> LinearFunctorRep {
        let cat = &self.cat;
        let dims = cat.objects().map(|y| self.dims[cat.tensor_obj(y, x)]).collect();
        let idx = cat.identity(x);
        let maps = (0..cat.basis().len())
            .map(|g| self.apply(&cat.tensor(&cat.basis_expr(g), &idx)))
            .collect();
        LinearFunctorRep {
            cat: cat.clone(),
            dims,
            maps,
        }
    }

    /// Objectwise direct sum, own coordinates first.
    pub fn direct_sum(&self, other: &LinearFunctorRep) -> LinearFunctorRep {
        assert!(Arc::ptr_eq(&self.cat, &other.cat), "functors over different categories");
        LinearFunctorRep {
            cat: self.cat.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        }
    }

    /// Variable layout for one matrix per object `F(x) → G(x)`.
    fn transformation_blocks(&self, other: &LinearFunctorRep) -> Vec<Block> {
        let mut offset = 0;
        self.cat
            .objects()
            .map(|x| {
                let b = Block {
                    offset,
                    rows: other.dims[x],
                    cols: self.dims[x],
                };
                offset += b.rows * b.cols;
                b
            })
            .collect()
    }
}

/// `X(x, −)`, acting by postcomposition.
pub fn yoneda_functor(cat: &Arc<CategoryPresentation>, x: ObjId) -> Result<LinearFunctorRep> {
    if x >= cat.num_objects() {
        return Err(Error::UnknownObject(format!("#{x}")));
    }
    let field = cat.field();
    let dims: Vec<usize> = cat.objects().map(|y| cat.hom_dim(x, y)).collect();
    let maps = cat
        .basis()
        .iter()
        .enumerate()
        .map(|(g, b)| {
            let mut m = Matrix::zeros(field, dims[b.tgt], dims[b.src]);
            let ge = cat.basis_expr(g);
            for (j, &h) in cat.hom_basis(x, b.src).iter().enumerate() {
                let c = cat.compose(&ge, &cat.basis_expr(h)).expect("composable");
                for (i, v) in c.coords.into_iter().enumerate() {
                    m.set(i, j, v);
                }
            }
            m
        })
        .collect();
    LinearFunctorRep::new(cat.clone(), dims, maps)
}

pub fn yoneda_dress_shift(f: &LinearFunctorRep, x: ObjId) -> Result<LinearFunctorRep> {
    if x >= f.cat.num_objects() {
        return Err(Error::UnknownObject(format!("#{x}")));
    }
    Ok(f.shift(x))
}

/// A natural transformation, one matrix per object.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctorMorphismRep {
    pub source: LinearFunctorRep,
    pub target: LinearFunctorRep,
    pub components: Vec<Matrix>,
}

impl FunctorMorphismRep {
    pub fn new(source: LinearFunctorRep, target: LinearFunctorRep, components: Vec<Matrix>) -> Result<Self> {
        let m = FunctorMorphismRep {
            source,
            target,
            components,
        };
        let v = m.validate();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(v))
        }
    }

    pub fn identity(f: &LinearFunctorRep) -> Self {
        FunctorMorphismRep {
            source: f.clone(),
            target: f.clone(),
            components: f.dims.iter().map(|&d| Matrix::identity(f.field(), d)).collect(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = &self.source.cat;
        let mut out = Vec::new();
        for x in cat.objects() {
            if self.components[x].shape() != (self.target.dims[x], self.source.dims[x]) {
                out.push(Violation::new("component shape", cat.object_name(x)));
                return out;
            }
        }
        for (g, b) in cat.basis().iter().enumerate() {
            let l = self.target.maps[g].mul(&self.components[b.src]);
            let r = self.components[b.tgt].mul(&self.source.maps[g]);
            if l != r {
                out.push(Violation::new("naturality", b.name.clone()));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FunctorMorphismRep) -> FunctorMorphismRep {
        FunctorMorphismRep {
            source: other.source.clone(),
            target: self.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(Matrix::is_identity)
    }
}

/// `F_x → F_y` induced by `φ: x → y`, with component `F(id_w ⋄ φ)` at `w`.
pub fn shift_along(f: &LinearFunctorRep, phi: &MorExpr) -> FunctorMorphismRep {
    let cat = &f.cat;
    FunctorMorphismRep {
        source: f.shift(phi.src),
        target: f.shift(phi.tgt),
        components: cat
            .objects()
            .map(|w| f.apply(&cat.tensor(&cat.identity(w), phi)))
            .collect(),
    }
}

/// `α_x : M_x → N_x`, with component `α_{w⋄x}` at `w`.
pub fn shift_morphism(alpha: &FunctorMorphismRep, x: ObjId) -> FunctorMorphismRep {
    let cat = &alpha.source.cat;
    FunctorMorphismRep {
        source: alpha.source.shift(x),
        target: alpha.target.shift(x),
        components: cat
            .objects()
            .map(|w| alpha.components[cat.tensor_obj(w, x)].clone())
            .collect(),
    }
}

/// All natural transformations `F → G`, as vectors concatenating the
/// row-major components in object order.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: LinearFunctorRep,
    pub target: LinearFunctorRep,
    pub basis: SubspaceBasis,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn decode(&self, v: &[crate::scalar::Scalar]) -> FunctorMorphismRep {
        let field = self.source.field();
        let components = self
            .source
            .transformation_blocks(&self.target)
            .iter()
            .map(|b| Matrix::from_data(field, b.rows, b.cols, v[b.offset..b.offset + b.rows * b.cols].to_vec()))
            .collect();
        FunctorMorphismRep {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn morphisms(&self) -> Vec<FunctorMorphismRep> {
        self.basis.vectors().iter().map(|v| self.decode(v)).collect()
    }
}

pub fn hom_functors(f: &LinearFunctorRep, g: &LinearFunctorRep) -> HomSpace {
    let cat = &f.cat;
    let field = f.field();
    let blocks = f.transformation_blocks(g);
    let nvars = blocks.last().map_or(0, |b| b.offset + b.rows * b.cols);
    let mut sys = ConstraintSystem::new(field, nvars);
    for (h, b) in cat.basis().iter().enumerate() {
        if cat.is_identity_basis(h) {
            continue;
        }
        // G(φ) X_src − X_tgt F(φ) = 0
        sys.add(&[
            Term {
                coeff: field.one(),
                left: Some(g.basis_map(h)),
                block: blocks[b.src],
                right: None,
            },
            Term {
                coeff: field.from_i64(-1),
                left: None,
                block: blocks[b.tgt],
                right: Some(f.basis_map(h)),
            },
        ]);
    }
    HomSpace {
        source: f.clone(),
        target: g.clone(),
        basis: sys.solve(),
    }
}

/// `H(M, N)(x) = Hom(M, N_x)`.
pub fn internal_hom_value(m: &LinearFunctorRep, n: &LinearFunctorRep, x: ObjId) -> HomSpace {
    hom_functors(m, &n.shift(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    fn xc2_functor(cat: &Arc<CategoryPresentation>, de: usize, dg: usize) -> LinearFunctorRep {
        let maps = vec![Matrix::identity(Q, de), Matrix::identity(Q, dg)];
        LinearFunctorRep::new(cat.clone(), vec![de, dg], maps).unwrap()
    }

    #[test]
    fn validation_catches_bad_identity() {
        let cat = Arc::new(fixtures::xc2(Q));
        let bad = LinearFunctorRep::new(
            cat.clone(),
            vec![1, 1],
            vec![Matrix::from_ints(Q, &[[2]]), Matrix::identity(Q, 1)],
        );
        assert_eq!(bad.unwrap_err().violations()[0].axiom, "functor identity");
        xc2_functor(&cat, 2, 1);
    }

    #[test]
    fn yoneda_values() {
        let x1 = Arc::new(fixtures::x1(Q));
        assert_eq!(yoneda_functor(&x1, 0).unwrap().dims(), &[1]);
        let xc2 = Arc::new(fixtures::xc2(Q));
        assert_eq!(yoneda_functor(&xc2, 0).unwrap().dims(), &[1, 0]);
        assert_eq!(yoneda_functor(&xc2, 1).unwrap().dims(), &[0, 1]);
        assert!(yoneda_functor(&xc2, 2).is_err());
        let eps = Arc::new(fixtures::x1_eps(Q));
        assert_eq!(yoneda_functor(&eps, 0).unwrap().dims(), &[2]);
    }

    #[test]
    fn shifts() {
        let cat = Arc::new(fixtures::xc2(Q));
        let f = xc2_functor(&cat, 2, 1);
        assert_eq!(f.shift(cat.unit()), f);
        assert_eq!(f.shift(1).dims(), &[1, 2]);
        assert!(shift_along(&f, &cat.identity(1)).is_identity());
        assert_eq!(f.shift(1).shift(1), f.shift(cat.tensor_obj(1, 1)));
    }

    #[test]
    fn hom_dimensions() {
        let cat = Arc::new(fixtures::xc2(Q));
        let f = xc2_functor(&cat, 1, 1);
        assert_eq!(hom_functors(&f, &f).dim(), 2);
        let zero = LinearFunctorRep::zero(cat.clone());
        assert_eq!(hom_functors(&f, &zero).dim(), 0);
        assert_eq!(internal_hom_value(&f, &zero, 1).dim(), 0);
        let y = yoneda_functor(&cat, 1).unwrap();
        let g = xc2_functor(&cat, 3, 2);
        assert_eq!(hom_functors(&y, &g).dim(), 2);
        assert_eq!(internal_hom_value(&y, &g, 1).dim(), 3);
    }

    #[test]
    fn yoneda_on_nontrivial_endomorphisms() {
        let cat = Arc::new(fixtures::x1_eps(Q));
        let y = yoneda_functor(&cat, 0).unwrap();
        // k[t]/t² acting on k² by a nilpotent Jordan block
        let t = cat.morphism("t").unwrap();
        let mut maps = vec![Matrix::identity(Q, 2); 2];
        maps[t] = Matrix::from_ints(Q, &[[0, 0], [1, 0]]);
        let f = LinearFunctorRep::new(cat.clone(), vec![2], maps).unwrap();
        assert_eq!(hom_functors(&y, &f).dim(), 2);
        assert_eq!(hom_functors(&f, &f).dim(), 2);
        for m in hom_functors(&y, &f).morphisms() {
            assert!(m.validate().is_empty());
        }
    }
}
