//! Values of the Day convolution `A ⊗ A` as explicit quotient spaces.
//!
//! `(A⊗A)(z)` is spanned by generators `[β, eᵢ, eⱼ]` with `β` a basis
//! morphism `x⋄y → z` and `eᵢ, eⱼ` basis vectors of `A(x)`, `A(y)`, modulo
//! `[β∘(φ⋄ψ), m, n] = [β, A(φ)m, A(ψ)n]`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::category::{CategoryPresentation, MorExpr, ObjId};
use crate::error::{Error, Result};
use crate::linalg::{quotient_space, solve_affine, unit_vector, Matrix, Quotient, SubspaceBasis, Vector};
use crate::monoid::{MonoidMorphism, MonoidRep};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub x: ObjId,
    pub y: ObjId,
    /// Basis morphism `x⋄y → z`.
    pub beta: usize,
    pub i: usize,
    pub j: usize,
}

/// `(A⊗A)(z)`.
#[derive(Clone, Debug)]
pub struct DayValue {
    category: Arc<CategoryPresentation>,
    pub object: ObjId,
    pub generators: Vec<Generator>,
    index: HashMap<Generator, usize>,
    pub relations: SubspaceBasis,
    pub quotient: Quotient,
}

impl DayValue {
    pub fn new(a: &MonoidRep, z: ObjId) -> Result<Self> {
        let cat = a.category();
        let field = a.field();
        let mut generators = Vec::new();
        for x in cat.objects() {
            for y in cat.objects() {
                for &beta in cat.hom_basis(cat.tensor_obj(x, y), z) {
                    for i in 0..a.dim(x) {
                        for j in 0..a.dim(y) {
                            generators.push(Generator { x, y, beta, i, j });
                        }
                    }
                }
            }
        }
        let index: HashMap<Generator, usize> = generators.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let n = generators.len();
        let mut relations = Vec::new();
        for (phi, bp) in cat.basis().iter().enumerate() {
            for (psi, bq) in cat.basis().iter().enumerate() {
                if cat.is_identity_basis(phi) && cat.is_identity_basis(psi) {
                    continue;
                }
                let tensor = cat.tensor(&cat.basis_expr(phi), &cat.basis_expr(psi));
                let (ap, aq) = (a.functor().basis_map(phi), a.functor().basis_map(psi));
                for &beta in cat.hom_basis(cat.tensor_obj(bp.tgt, bq.tgt), z) {
                    let composite = cat.compose(&cat.basis_expr(beta), &tensor)?;
                    for i in 0..a.dim(bp.src) {
                        for j in 0..a.dim(bq.src) {
                            let mut v = vec![field.zero(); n];
                            let globals = cat.hom_basis(composite.src, composite.tgt);
                            for (g, c) in composite.coords.iter().enumerate() {
                                if !c.is_zero() {
                                    let k = index[&Generator { x: bp.src, y: bq.src, beta: globals[g], i, j }];
                                    v[k] += c;
                                }
                            }
                            for i2 in 0..a.dim(bp.tgt) {
                                for j2 in 0..a.dim(bq.tgt) {
                                    let c = ap.get(i2, i) * aq.get(j2, j);
                                    if !c.is_zero() {
                                        let k = index[&Generator { x: bp.tgt, y: bq.tgt, beta, i: i2, j: j2 }];
                                        v[k] -= &c;
                                    }
                                }
                            }
                            relations.push(v);
                        }
                    }
                }
            }
        }
        let relations = SubspaceBasis::spanned_by(field, n, &relations);
        let quotient = quotient_space(n, &relations)?;
        Ok(DayValue {
            category: cat.clone(),
            object: z,
            generators,
            index,
            relations,
            quotient,
        })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn generator_index(&self, g: &Generator) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Class of `[β, m, n]` for `β: x⋄y → z` given in coordinates.
    pub fn class(&self, x: ObjId, y: ObjId, beta: &MorExpr, m: &[Scalar], n: &[Scalar]) -> Vector {
        let field = self.quotient.projection.field();
        let mut v = vec![field.zero(); self.generators.len()];
        let globals = self.category.hom_basis(beta.src, beta.tgt);
        for (g, c) in beta.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, mi) in m.iter().enumerate() {
                for (j, nj) in n.iter().enumerate() {
                    let s = &(c * mi) * nj;
                    if !s.is_zero() {
                        v[self.index[&Generator { x, y, beta: globals[g], i, j }]] += &s;
                    }
                }
            }
        }
        self.quotient.projection.mul_vec(&v)
    }

    /// Generator combination representing quotient coordinates.
    pub fn lift(&self, v: &[Scalar]) -> Vector {
        self.quotient.section.mul_vec(v)
    }
}

/// All Day values of one monoid, built on demand.
#[derive(Debug)]
pub struct DayConvolution {
    monoid: Arc<MonoidRep>,
    values: Vec<OnceLock<Arc<DayValue>>>,
}

/// Which side of `A ⊗ A` the monoid acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl DayConvolution {
    pub fn new(a: &Arc<MonoidRep>) -> Self {
        DayConvolution {
            monoid: a.clone(),
            values: (0..a.category().num_objects()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn monoid(&self) -> &Arc<MonoidRep> {
        &self.monoid
    }

    pub fn value(&self, z: ObjId) -> Arc<DayValue> {
        self.values[z]
            .get_or_init(|| Arc::new(DayValue::new(&self.monoid, z).expect("compositions of basis morphisms are defined")))
            .clone()
    }

    /// Applies a linear map on generators, given per generator as a class in
    /// `target`, to every quotient basis vector of `source`.
    fn induced(&self, source: &DayValue, rows: usize, image: impl Fn(&Generator) -> Vector) -> Matrix {
        let field = self.monoid.field();
        let images: Vec<Vector> = source.generators.iter().map(&image).collect();
        let mut out = Matrix::zeros(field, rows, source.dim());
        for q in 0..source.dim() {
            let lift = source.lift(&unit_vector(field, source.dim(), q));
            for (k, c) in lift.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, v) in images[k].iter().enumerate() {
                    if !v.is_zero() {
                        out.add_at(r, q, &(c * v));
                    }
                }
            }
        }
        out
    }

    /// Checks that a generator map kills every relation.
    fn well_defined(&self, source: &DayValue, image: impl Fn(&Generator) -> Vector, what: &str) -> Result<()> {
        let images: Vec<Vector> = source.generators.iter().map(&image).collect();
        for rel in source.relations.vectors() {
            let rows = images.first().map_or(0, Vec::len);
            let mut acc = vec![self.monoid.field().zero(); rows];
            for (k, c) in rel.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, v) in images[k].iter().enumerate() {
                    acc[r] += &(c * v);
                }
            }
            if acc.iter().any(|s| !s.is_zero()) {
                return Err(Error::single(format!("{what} is well defined"), self.monoid.category().object_name(source.object)));
            }
        }
        Ok(())
    }

    /// `[β, m, n] ↦ [γ∘β, m, n]`.
    pub fn day_map(&self, gamma: &MorExpr) -> Result<Matrix> {
        let cat = self.monoid.category();
        let (src, tgt) = (self.value(gamma.src), self.value(gamma.tgt));
        let field = self.monoid.field();
        let mut images = Vec::with_capacity(src.generators.len());
        for g in &src.generators {
            let composite = cat.compose(gamma, &cat.basis_expr(g.beta))?;
            let m = unit_vector(field, self.monoid.dim(g.x), g.i);
            let n = unit_vector(field, self.monoid.dim(g.y), g.j);
            images.push(tgt.class(g.x, g.y, &composite, &m, &n));
        }
        Ok(self.induced(&src, tgt.dim(), |g| images[src.generator_index(g).expect("own generator")].clone()))
    }

    /// `μ_z: [β, m, n] ↦ A(β)(m × n)`.
    pub fn day_mu(&self, z: ObjId) -> Result<Matrix> {
        let a = &self.monoid;
        let v = self.value(z);
        let image = |g: &Generator| {
            let col = g.i * a.dim(g.y) + g.j;
            a.functor().basis_map(g.beta).mul_vec(&a.product(g.x, g.y).column(col))
        };
        self.well_defined(&v, image, "multiplication")?;
        Ok(self.induced(&v, a.dim(z), image))
    }

    /// Left action `[β, m, n] ↦ [id_w ⋄ β, a × m, n]` into `(A⊗A)(w⋄z)`, or
    /// right action `[β, m, n] ↦ [β ⋄ id_w, m, n × a]` into `(A⊗A)(z⋄w)`.
    pub fn day_biaction(&self, side: Side, w: ObjId, elem: &[Scalar], z: ObjId) -> Result<Matrix> {
        let a = &self.monoid;
        let cat = a.category();
        let field = a.field();
        let src = self.value(z);
        let target_obj = match side {
            Side::Left => cat.tensor_obj(w, z),
            Side::Right => cat.tensor_obj(z, w),
        };
        let tgt = self.value(target_obj);
        let image = |g: &Generator| {
            let m = unit_vector(field, a.dim(g.x), g.i);
            let n = unit_vector(field, a.dim(g.y), g.j);
            match side {
                Side::Left => {
                    let beta = cat.whisker(w, &cat.basis_expr(g.beta), cat.unit());
                    tgt.class(cat.tensor_obj(w, g.x), g.y, &beta, &a.multiply(w, elem, g.x, &m), &n)
                }
                Side::Right => {
                    let beta = cat.whisker(cat.unit(), &cat.basis_expr(g.beta), w);
                    tgt.class(g.x, cat.tensor_obj(g.y, w), &beta, &m, &a.multiply(g.y, &n, w, elem))
                }
            }
        };
        self.well_defined(&src, image, "action")?;
        Ok(self.induced(&src, tgt.dim(), image))
    }

    /// `(left(a) − (A⊗A)(s_{1,w}) ∘ right(a)) ξ` must vanish for basis `a`.
    fn centrality_rows(&self) -> Result<Matrix> {
        let a = &self.monoid;
        let cat = a.category();
        let field = a.field();
        let one = cat.unit();
        let mut rows = Matrix::zeros(field, 0, self.value(one).dim());
        for w in cat.objects() {
            let twist = self.day_map(&cat.symmetry(one, w))?;
            for i in 0..a.dim(w) {
                let e = unit_vector(field, a.dim(w), i);
                let l = self.day_biaction(Side::Left, w, &e, one)?;
                let r = self.day_biaction(Side::Right, w, &e, one)?;
                rows = rows.vstack(&l.sub(&twist.mul(&r)));
            }
        }
        Ok(rows)
    }

    /// Checks centrality, `μ(ξ) = ε` and `μ ∘ t = id`, returning `t`.
    pub fn check_witness(&self, xi: &[Scalar]) -> Result<Vec<Matrix>> {
        let a = &self.monoid;
        let cat = a.category();
        let one = cat.unit();
        if xi.len() != self.value(one).dim() {
            return Err(Error::DimensionMismatch("witness length".into()));
        }
        if self.centrality_rows()?.mul_vec(xi).iter().any(|s| !s.is_zero()) {
            return Err(Error::single("witness centrality", cat.object_name(one)));
        }
        if self.day_mu(one)?.mul_vec(xi) != *a.unit_element() {
            return Err(Error::single("witness multiplies to the unit", cat.object_name(one)));
        }
        let t = self.section_from(xi)?;
        for x in cat.objects() {
            if !self.day_mu(x)?.mul(&t[x]).is_identity() {
                return Err(Error::single("multiplication splits", cat.object_name(x)));
            }
        }
        Ok(t)
    }

    /// `t_x(a) = a × ξ`, landing in `(A⊗A)(x⋄1) = (A⊗A)(x)`.
    fn section_from(&self, xi: &[Scalar]) -> Result<Vec<Matrix>> {
        let a = &self.monoid;
        let cat = a.category();
        let field = a.field();
        cat.objects()
            .map(|x| {
                let cols = (0..a.dim(x))
                    .map(|i| {
                        let e = unit_vector(field, a.dim(x), i);
                        Ok(self.day_biaction(Side::Left, x, &e, cat.unit())?.mul_vec(xi))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(crate::hochschild::from_columns(field, self.value(x).dim(), &cols))
            })
            .collect()
    }
}

/// `ξ ∈ (A⊗A)(1)` with its splitting `t: A → A⊗A` of the multiplication.
#[derive(Clone, Debug)]
pub struct SeparabilityWitness {
    pub xi: Vector,
    pub t: Vec<Matrix>,
}

/// Solves for a central `ξ` with `μ(ξ) = ε`; `None` means `A` is not
/// separable.
pub fn separability_witness(a: &Arc<MonoidRep>) -> Result<Option<SeparabilityWitness>> {
    let day = DayConvolution::new(a);
    let one = a.category().unit();
    let central = day.centrality_rows()?;
    let mu = day.day_mu(one)?;
    let system = central.vstack(&mu);
    let mut rhs = vec![a.field().zero(); central.rows()];
    rhs.extend(a.unit_element().iter().cloned());
    match solve_affine(&system, &rhs)? {
        None => Ok(None),
        Some(sol) => {
            let t = day.check_witness(&sol.particular)?;
            Ok(Some(SeparabilityWitness { xi: sol.particular, t }))
        }
    }
}

/// `(f ⊗ f)(ξ_B)` for a monoid morphism `f: B → A` onto at every object.
pub fn transport_separability(f: &MonoidMorphism, xi: &[Scalar]) -> Result<SeparabilityWitness> {
    if !f.validate().is_empty() {
        return Err(Error::Validation(f.validate()));
    }
    if !f.is_surjective() {
        return Err(Error::Incompatible("morphism is not onto at every object".into()));
    }
    let (db, da) = (DayConvolution::new(&f.source), DayConvolution::new(&f.target));
    db.check_witness(xi)?;
    let cat = f.source.category();
    let one = cat.unit();
    let (vb, va) = (db.value(one), da.value(one));
    let lift = vb.lift(xi);
    let field = f.source.field();
    let mut out = vec![field.zero(); va.dim()];
    for (k, c) in lift.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let g = &vb.generators[k];
        let m = f.components[g.x].column(g.i);
        let n = f.components[g.y].column(g.j);
        let class = va.class(g.x, g.y, &cat.basis_expr(g.beta), &m, &n);
        for (o, v) in out.iter_mut().zip(&class) {
            *o += &(c * v);
        }
    }
    let t = da.check_witness(&out)?;
    Ok(SeparabilityWitness { xi: out, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    #[test]
    fn dimensions_of_day_values() {
        let i = fixtures::unit_monoid(fixtures::x1(Field::Rationals));
        assert_eq!(DayConvolution::new(&i).value(0).dim(), 1);
        let i = fixtures::unit_monoid(fixtures::x1_eps(Field::Rationals));
        assert_eq!(DayConvolution::new(&i).value(0).dim(), 2);
        let a = fixtures::dual_numbers(Field::Rationals);
        assert_eq!(DayConvolution::new(&a).value(0).dim(), 4);
        let a = fixtures::graded_c2(Field::Rationals);
        assert_eq!(DayConvolution::new(&a).value(0).dim(), 2);
    }

    #[test]
    fn multiplication_is_onto() {
        let a = fixtures::dual_numbers(Field::Rationals);
        assert_eq!(crate::linalg::rank(&DayConvolution::new(&a).day_mu(0).unwrap()), 2);
        let a = fixtures::matrix_algebra(Field::Rationals);
        assert_eq!(crate::linalg::rank(&DayConvolution::new(&a).day_mu(0).unwrap()), 4);
        for a in fixtures::all_monoids(Field::Rationals) {
            let day = DayConvolution::new(&a);
            for z in a.category().objects() {
                assert_eq!(crate::linalg::rank(&day.day_mu(z).unwrap()), a.dim(z));
            }
        }
    }

    #[test]
    fn actions() {
        let a = fixtures::dual_numbers(Field::Rationals);
        let day = DayConvolution::new(&a);
        let eps = a.unit_element().clone();
        assert!(day.day_biaction(Side::Left, 0, &eps, 0).unwrap().is_identity());
        assert!(day.day_biaction(Side::Right, 0, &eps, 0).unwrap().is_identity());
        let x = unit_vector(Field::Rationals, 2, 1);
        let l = day.day_biaction(Side::Left, 0, &x, 0).unwrap();
        assert!(l.mul(&l).is_zero());
        let a = fixtures::graded_c2_super(Field::Rationals);
        let day = DayConvolution::new(&a);
        let g = a.category().object("g").unwrap();
        let l = day.day_biaction(Side::Left, g, &[Field::Rationals.one()], 0).unwrap();
        assert_eq!(l.shape(), (day.value(g).dim(), day.value(0).dim()));
        assert!(!l.is_zero());
    }

    #[test]
    fn separability_verdicts() {
        let m2 = fixtures::matrix_algebra(Field::Rationals);
        let w = separability_witness(&m2).unwrap().unwrap();
        assert_eq!(w.t.len(), 1);
        assert!(separability_witness(&fixtures::dual_numbers(Field::Rationals)).unwrap().is_none());
        let i = fixtures::unit_monoid(fixtures::xc2(Field::Rationals));
        assert!(separability_witness(&i).unwrap().is_some());
    }

    #[test]
    fn transport_along_augmentation() {
        let f = Field::Rationals;
        let b = fixtures::qc2(f);
        let a = fixtures::ground_field(f);
        let w = separability_witness(&b).unwrap().unwrap();
        let half = f.ratio(1, 2).unwrap();
        assert_eq!(w.xi.len(), 4);
        let day = DayConvolution::new(&b);
        let v = day.value(0);
        let e = |i| unit_vector(f, 2, i);
        let expected: Vector = v
            .class(0, 0, &b.category().identity(0), &e(0), &e(0))
            .iter()
            .zip(&v.class(0, 0, &b.category().identity(0), &e(1), &e(1)))
            .map(|(p, q)| &(p + q) * &half)
            .collect();
        assert_eq!(w.xi, expected);
        let aug = MonoidMorphism::new(b.clone(), a.clone(), vec![Matrix::from_ints(f, &[[1, 1]])]).unwrap();
        let moved = transport_separability(&aug, &w.xi).unwrap();
        let va = DayConvolution::new(&a).value(0);
        assert_eq!(moved.xi, va.class(0, 0, &a.category().identity(0), &[f.one()], &[f.one()]));
    }
}
