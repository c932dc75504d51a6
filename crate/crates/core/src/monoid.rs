//! Monoids for Day convolution, presented by bilinear product tables, and
//! their modules and bimodules.
//!
//! The product at `(x, y)` is a matrix `A(x⋄y) ← A(x) ⊗ A(y)` whose column
//! `i·dim A(y) + j` is `eᵢ × eⱼ`. Actions use the same layout.

use std::sync::Arc;

use crate::category::{CategoryPresentation, ObjId};
use crate::error::{Error, Result, Violation};
use crate::format::{parse_pair, scalars, table_from_json, table_to_json, tuple_key, vector_to_json, BimoduleFile, MonoidFile};
use crate::functor::{yoneda_functor, HomSpace, LinearFunctorRep};
use crate::linalg::{rank, unit_vector, Block, ConstraintSystem, Matrix, Term, Vector};
use crate::scalar::Field;

/// Splits a tensor column index into per-factor indices.
pub(crate) fn split_index(mut c: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = c % d;
        c /= d;
    }
    out
}

fn witness(cat: &CategoryPresentation, objs: &[ObjId], col: Option<(usize, &[usize])>) -> String {
    let names: Vec<&str> = objs.iter().map(|&x| cat.object_name(x)).collect();
    match col {
        None => tuple_key(&names),
        Some((c, dims)) => {
            let idx: Vec<String> = split_index(c, dims).iter().map(|i| format!("e{i}")).collect();
            format!("({};{})", names.join(","), idx.join(","))
        }
    }
}

/// Table reader shared by monoids and bimodules: keys `"(x,y)"`, each table
/// `d1 × d2 → d3`. Missing keys are allowed only when the table is empty.
fn read_tables(
    cat: &CategoryPresentation,
    tables: &std::collections::BTreeMap<String, crate::format::ProductTable>,
    dims: impl Fn(ObjId, ObjId) -> (usize, usize, usize),
    what: &str,
) -> Result<Vec<Vec<Matrix>>> {
    let field = cat.field();
    let n = cat.num_objects();
    let mut out: Vec<Vec<Option<Matrix>>> = vec![vec![None; n]; n];
    for (key, table) in tables {
        let (x, y) = parse_pair(key)?;
        let (x, y) = (cat.object(&x)?, cat.object(&y)?);
        let (d1, d2, d3) = dims(x, y);
        out[x][y] = Some(table_from_json(field, d1, d2, d3, table, &format!("{what} {key}"))?);
    }
    out.into_iter()
        .enumerate()
        .map(|(x, row)| {
            row.into_iter()
                .enumerate()
                .map(|(y, m)| match m {
                    Some(m) => Ok(m),
                    None => {
                        let (d1, d2, d3) = dims(x, y);
                        if d1 * d2 * d3 == 0 {
                            Ok(Matrix::zeros(field, d3, d1 * d2))
                        } else {
                            Err(Error::Parse(format!(
                                "{what} table missing for ({},{})",
                                cat.object_name(x),
                                cat.object_name(y)
                            )))
                        }
                    }
                })
                .collect()
        })
        .collect()
}

fn write_tables(
    cat: &CategoryPresentation,
    tables: &[Vec<Matrix>],
    dims: impl Fn(ObjId, ObjId) -> (usize, usize),
) -> std::collections::BTreeMap<String, crate::format::ProductTable> {
    let mut out = std::collections::BTreeMap::new();
    for x in cat.objects() {
        for y in cat.objects() {
            let m = &tables[x][y];
            if m.rows() * m.cols() == 0 {
                continue;
            }
            let (d1, d2) = dims(x, y);
            out.insert(
                tuple_key(&[cat.object_name(x), cat.object_name(y)]),
                table_to_json(m, d1, d2),
            );
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct MonoidRep {
    functor: LinearFunctorRep,
    product: Vec<Vec<Matrix>>,
    unit: Vector,
    commutative: bool,
}

impl PartialEq for MonoidRep {
    fn eq(&self, other: &Self) -> bool {
        self.functor == other.functor && self.product == other.product && self.unit == other.unit
    }
}

impl MonoidRep {
    pub fn new(functor: LinearFunctorRep, product: Vec<Vec<Matrix>>, unit: Vector) -> Result<Self> {
        let m = Self::unchecked(functor, product, unit)?;
        let v = m.validate();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Shape-checked construction without the monoid axioms.
    pub fn unchecked(functor: LinearFunctorRep, product: Vec<Vec<Matrix>>, unit: Vector) -> Result<Self> {
        let cat = functor.category().clone();
        let d = |x: ObjId| functor.dim(x);
        for x in cat.objects() {
            for y in cat.objects() {
                let want = (d(cat.tensor_obj(x, y)), d(x) * d(y));
                if product.get(x).and_then(|r| r.get(y)).map(Matrix::shape) != Some(want) {
                    return Err(Error::DimensionMismatch(format!(
                        "product table at {}",
                        witness(&cat, &[x, y], None)
                    )));
                }
            }
        }
        if unit.len() != d(cat.unit()) {
            return Err(Error::DimensionMismatch("unit element".into()));
        }
        let mut m = MonoidRep {
            functor,
            product,
            unit,
            commutative: false,
        };
        m.commutative = m.commutativity_failure().is_none();
        Ok(m)
    }

    pub fn from_file(cat: Arc<CategoryPresentation>, raw: &MonoidFile) -> Result<Self> {
        let functor = LinearFunctorRep::from_body(cat.clone(), &raw.functor)?;
        let product = read_tables(
            &cat,
            &raw.product,
            |x, y| (functor.dim(x), functor.dim(y), functor.dim(cat.tensor_obj(x, y))),
            "product",
        )?;
        let unit = scalars(cat.field(), &raw.unit_element)?;
        Self::new(functor, product, unit)
    }

    pub fn to_file(&self) -> MonoidFile {
        let cat = self.category();
        MonoidFile {
            functor: self.functor.to_body(),
            product: write_tables(cat, &self.product, |x, y| (self.dim(x), self.dim(y))),
            unit_element: vector_to_json(&self.unit),
        }
    }

    pub fn functor(&self) -> &LinearFunctorRep {
        &self.functor
    }

    pub fn category(&self) -> &Arc<CategoryPresentation> {
        self.functor.category()
    }

    pub fn field(&self) -> Field {
        self.functor.field()
    }

    pub fn dim(&self, x: ObjId) -> usize {
        self.functor.dim(x)
    }

    pub fn product(&self, x: ObjId, y: ObjId) -> &Matrix {
        &self.product[x][y]
    }

    pub fn products(&self) -> &[Vec<Matrix>] {
        &self.product
    }

    pub fn unit_element(&self) -> &Vector {
        &self.unit
    }

    /// `a × b` for `a ∈ A(x)`, `b ∈ A(y)`.
    pub fn multiply(&self, x: ObjId, a: &[crate::scalar::Scalar], y: ObjId, b: &[crate::scalar::Scalar]) -> Vector {
        self.product[x][y].apply_pair(a, b)
    }

    /// `b ↦ a × b` from `A(y)` to `A(w⋄y)`.
    pub fn left_multiplication(&self, w: ObjId, a: &[crate::scalar::Scalar], y: ObjId) -> Matrix {
        self.product[w][y].contract_left(a, self.dim(y))
    }

    /// `a ↦ a × b` from `A(y)` to `A(y⋄v)`.
    pub fn right_multiplication(&self, y: ObjId, v: ObjId, b: &[crate::scalar::Scalar]) -> Matrix {
        self.product[y][v].contract_right(self.dim(y), b)
    }

    /// True when `A(s_{y,x})(b × a) = a × b` throughout.
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    fn commutativity_failure(&self) -> Option<String> {
        let cat = self.category();
        for x in cat.objects() {
            for y in cat.objects() {
                let twisted = self.twisted_reverse(x, y);
                if let Some((_, c)) = twisted.first_difference(&self.product[x][y]) {
                    return Some(witness(cat, &[x, y], Some((c, &[self.dim(x), self.dim(y)]))));
                }
            }
        }
        None
    }

    /// `a ⊗ b ↦ A(s_{y,x})(b × a)` as a map `A(x) ⊗ A(y) → A(x⋄y)`.
    fn twisted_reverse(&self, x: ObjId, y: ObjId) -> Matrix {
        let cat = self.category();
        let s = self.functor.apply(&cat.symmetry(y, x));
        s.mul(&self.product[y][x]).swap_factors(self.dim(y), self.dim(x))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = self.category().clone();
        let field = self.field();
        let d = |x: ObjId| self.dim(x);
        let mut out = Vec::new();
        let one = cat.unit();
        for x in cat.objects() {
            let id = Matrix::identity(field, d(x));
            let left = self.left_multiplication(one, &self.unit, x);
            let right = self.right_multiplication(x, one, &self.unit);
            if let Some((_, c)) = left.first_difference(&id) {
                out.push(Violation::new("unit law", format!("(ε×a;{},e{c})", cat.object_name(x))));
            } else if let Some((_, c)) = right.first_difference(&id) {
                out.push(Violation::new("unit law", format!("(a×ε;{},e{c})", cat.object_name(x))));
            }
        }
        for x in cat.objects() {
            for y in cat.objects() {
                let xy = cat.tensor_obj(x, y);
                for z in cat.objects() {
                    let yz = cat.tensor_obj(y, z);
                    let l = self.product[xy][z].mul(&self.product[x][y].kron(&Matrix::identity(field, d(z))));
                    let r = self.product[x][yz].mul(&Matrix::identity(field, d(x)).kron(&self.product[y][z]));
                    if let Some((_, c)) = l.first_difference(&r) {
                        out.push(Violation::new(
                            "associativity",
                            witness(&cat, &[x, y, z], Some((c, &[d(x), d(y), d(z)]))),
                        ));
                    }
                }
            }
        }
        for (f, bf) in cat.basis().iter().enumerate() {
            for (g, bg) in cat.basis().iter().enumerate() {
                let fg = cat.tensor(&cat.basis_expr(f), &cat.basis_expr(g));
                let l = self.functor.apply(&fg).mul(&self.product[bf.src][bg.src]);
                let r = self.product[bf.tgt][bg.tgt]
                    .mul(&self.functor.basis_map(f).kron(self.functor.basis_map(g)));
                if l != r {
                    out.push(Violation::new("product naturality", format!("({},{})", bf.name, bg.name)));
                }
            }
        }
        out
    }

    /// `π^op_{x,y}(a, b) = A(s_{y,x})(π_{y,x}(b, a))`.
    pub fn opposite(&self) -> MonoidRep {
        let cat = self.category();
        let product = cat
            .objects()
            .map(|x| cat.objects().map(|y| self.twisted_reverse(x, y)).collect())
            .collect();
        MonoidRep {
            functor: self.functor.clone(),
            product,
            unit: self.unit.clone(),
            commutative: self.commutative,
        }
    }

    /// The unit for Day convolution, `I = X(1, −)` with `φ × ψ = φ ⋄ ψ`.
    pub fn unit_monoid(cat: &Arc<CategoryPresentation>) -> MonoidRep {
        let field = cat.field();
        let one = cat.unit();
        let functor = yoneda_functor(cat, one).expect("unit object");
        let product = cat
            .objects()
            .map(|x| {
                cat.objects()
                    .map(|y| {
                        let xy = cat.tensor_obj(x, y);
                        let (hx, hy) = (cat.hom_basis(one, x), cat.hom_basis(one, y));
                        let mut m = Matrix::zeros(field, cat.hom_dim(one, xy), hx.len() * hy.len());
                        for (i, &f) in hx.iter().enumerate() {
                            for (j, &g) in hy.iter().enumerate() {
                                let t = cat.tensor(&cat.basis_expr(f), &cat.basis_expr(g));
                                for (r, v) in t.coords.into_iter().enumerate() {
                                    m.set(r, i * hy.len() + j, v);
                                }
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let unit = cat.identity(one).coords;
        MonoidRep::new(functor, product, unit).expect("the unit monoid satisfies the axioms")
    }

    /// `A` as a left module over itself.
    pub fn regular_left(self: &Arc<Self>) -> LeftModule {
        LeftModule {
            monoid: self.clone(),
            functor: self.functor.clone(),
            left: self.product.clone(),
        }
    }
}

/// A left module: a functor with a natural action `A(w) ⊗ M(y) → M(w⋄y)`.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub monoid: Arc<MonoidRep>,
    pub functor: LinearFunctorRep,
    /// `[w][y]`.
    pub left: Vec<Vec<Matrix>>,
}

impl LeftModule {
    /// `M_x` with action `l_{w, y⋄x}`.
    pub fn shift(&self, x: ObjId) -> LeftModule {
        let cat = self.functor.category();
        LeftModule {
            monoid: self.monoid.clone(),
            functor: self.functor.shift(x),
            left: cat
                .objects()
                .map(|w| cat.objects().map(|y| self.left[w][cat.tensor_obj(y, x)].clone()).collect())
                .collect(),
        }
    }

    pub fn action(&self, w: ObjId, a: &[crate::scalar::Scalar], y: ObjId) -> Matrix {
        self.left[w][y].contract_left(a, self.functor.dim(y))
    }
}

/// Module morphisms `M → N_x`, solved jointly for naturality and
/// equivariance; vectors use the layout of [`HomSpace`].
pub fn hom_over_monoid(m: &LeftModule, n: &LeftModule, x: ObjId) -> HomSpace {
    let a = &m.monoid;
    let cat = a.category();
    let field = a.field();
    let nx = n.shift(x);
    let (src, tgt) = (&m.functor, &nx.functor);
    let mut offset = 0;
    let blocks: Vec<Block> = cat
        .objects()
        .map(|y| {
            let b = Block {
                offset,
                rows: tgt.dim(y),
                cols: src.dim(y),
            };
            offset += b.rows * b.cols;
            b
        })
        .collect();
    let mut sys = ConstraintSystem::new(field, offset);
    let minus = field.from_i64(-1);
    for (h, b) in cat.basis().iter().enumerate() {
        if cat.is_identity_basis(h) {
            continue;
        }
        sys.add(&[
            Term { coeff: field.one(), left: Some(tgt.basis_map(h)), block: blocks[b.src], right: None },
            Term { coeff: minus.clone(), left: None, block: blocks[b.tgt], right: Some(src.basis_map(h)) },
        ]);
    }
    for w in cat.objects() {
        for k in 0..a.dim(w) {
            let e = unit_vector(field, a.dim(w), k);
            for y in cat.objects() {
                let ln = nx.action(w, &e, y);
                let lm = m.action(w, &e, y);
                sys.add(&[
                    Term { coeff: field.one(), left: Some(&ln), block: blocks[y], right: None },
                    Term {
                        coeff: minus.clone(),
                        left: None,
                        block: blocks[cat.tensor_obj(w, y)],
                        right: Some(&lm),
                    },
                ]);
            }
        }
    }
    HomSpace {
        source: src.clone(),
        target: tgt.clone(),
        basis: sys.solve(),
    }
}

/// A natural family of linear maps between two monoids.
#[derive(Clone, Debug)]
pub struct MonoidMorphism {
    pub source: Arc<MonoidRep>,
    pub target: Arc<MonoidRep>,
    pub components: Vec<Matrix>,
}

impl MonoidMorphism {
    pub fn new(source: Arc<MonoidRep>, target: Arc<MonoidRep>, components: Vec<Matrix>) -> Result<Self> {
        let f = MonoidMorphism { source, target, components };
        let v = f.validate();
        if v.is_empty() {
            Ok(f)
        } else {
            Err(Error::Validation(v))
        }
    }

    pub fn identity(a: &Arc<MonoidRep>) -> Self {
        MonoidMorphism {
            source: a.clone(),
            target: a.clone(),
            components: a.category().objects().map(|x| Matrix::identity(a.field(), a.dim(x))).collect(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = self.source.category().clone();
        let (s, t) = (&self.source, &self.target);
        let mut out = Vec::new();
        for x in cat.objects() {
            if self.components.get(x).map(Matrix::shape) != Some((t.dim(x), s.dim(x))) {
                out.push(Violation::new("component shape", cat.object_name(x)));
                return out;
            }
        }
        for (g, b) in cat.basis().iter().enumerate() {
            let l = t.functor.basis_map(g).mul(&self.components[b.src]);
            let r = self.components[b.tgt].mul(s.functor.basis_map(g));
            if l != r {
                out.push(Violation::new("naturality", b.name.clone()));
            }
        }
        for x in cat.objects() {
            for y in cat.objects() {
                let xy = cat.tensor_obj(x, y);
                let l = self.components[xy].mul(s.product(x, y));
                let r = t.product(x, y).mul(&self.components[x].kron(&self.components[y]));
                if l != r {
                    out.push(Violation::new("multiplicativity", witness(&cat, &[x, y], None)));
                }
            }
        }
        if self.components[cat.unit()].mul_vec(s.unit_element()) != *t.unit_element() {
            out.push(Violation::new("unit preservation", cat.object_name(cat.unit())));
        }
        out
    }

    pub fn is_surjective(&self) -> bool {
        self.source
            .category()
            .objects()
            .all(|x| rank(&self.components[x]) == self.target.dim(x))
    }
}

#[derive(Clone, Debug)]
pub struct BimoduleRep {
    monoid: Arc<MonoidRep>,
    functor: LinearFunctorRep,
    /// `[x][y]`: `A(x) ⊗ M(y) → M(x⋄y)`.
    left: Vec<Vec<Matrix>>,
    /// `[y][x]`: `M(y) ⊗ A(x) → M(y⋄x)`.
    right: Vec<Vec<Matrix>>,
}

impl PartialEq for BimoduleRep {
    fn eq(&self, other: &Self) -> bool {
        self.functor == other.functor && self.left == other.left && self.right == other.right
    }
}

impl BimoduleRep {
    pub fn new(
        monoid: Arc<MonoidRep>,
        functor: LinearFunctorRep,
        left: Vec<Vec<Matrix>>,
        right: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let m = Self::unchecked(monoid, functor, left, right)?;
        let v = m.validate();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(v))
        }
    }

    pub fn unchecked(
        monoid: Arc<MonoidRep>,
        functor: LinearFunctorRep,
        left: Vec<Vec<Matrix>>,
        right: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let cat = monoid.category().clone();
        if !Arc::ptr_eq(&cat, functor.category()) {
            return Err(Error::Incompatible("bimodule and monoid over different categories".into()));
        }
        for x in cat.objects() {
            for y in cat.objects() {
                let xy = cat.tensor_obj(x, y);
                let okl = left.get(x).and_then(|r| r.get(y)).map(Matrix::shape)
                    == Some((functor.dim(xy), monoid.dim(x) * functor.dim(y)));
                let okr = right.get(y).and_then(|r| r.get(x)).map(Matrix::shape)
                    == Some((functor.dim(cat.tensor_obj(y, x)), functor.dim(y) * monoid.dim(x)));
                if !okl || !okr {
                    return Err(Error::DimensionMismatch(format!(
                        "action tables at {}",
                        witness(&cat, &[x, y], None)
                    )));
                }
            }
        }
        Ok(BimoduleRep { monoid, functor, left, right })
    }

    pub fn from_file(monoid: Arc<MonoidRep>, raw: &BimoduleFile) -> Result<Self> {
        let cat = monoid.category().clone();
        let functor = LinearFunctorRep::from_body(cat.clone(), &raw.functor)?;
        let left = read_tables(
            &cat,
            &raw.left,
            |x, y| (monoid.dim(x), functor.dim(y), functor.dim(cat.tensor_obj(x, y))),
            "left action",
        )?;
        let right = read_tables(
            &cat,
            &raw.right,
            |y, x| (functor.dim(y), monoid.dim(x), functor.dim(cat.tensor_obj(y, x))),
            "right action",
        )?;
        Self::new(monoid, functor, left, right)
    }

    pub fn to_file(&self) -> BimoduleFile {
        let cat = self.category();
        BimoduleFile {
            functor: self.functor.to_body(),
            left: write_tables(cat, &self.left, |x, y| (self.monoid.dim(x), self.dim(y))),
            right: write_tables(cat, &self.right, |y, x| (self.dim(y), self.monoid.dim(x))),
        }
    }

    /// `A` over itself.
    pub fn regular(a: &Arc<MonoidRep>) -> Self {
        BimoduleRep {
            monoid: a.clone(),
            functor: a.functor.clone(),
            left: a.product.clone(),
            right: a.product.clone(),
        }
    }

    pub fn zero(a: &Arc<MonoidRep>) -> Self {
        let cat = a.category();
        let field = a.field();
        let functor = LinearFunctorRep::zero(cat.clone());
        let empty: Vec<Vec<Matrix>> = cat
            .objects()
            .map(|_| cat.objects().map(|_| Matrix::zeros(field, 0, 0)).collect())
            .collect();
        BimoduleRep {
            monoid: a.clone(),
            functor,
            left: empty.clone(),
            right: empty,
        }
    }

    /// A linear functor `F` as a bimodule over the unit monoid, acting by
    /// `F(φ ⋄ id)` on the left and `F(id ⋄ ψ)` on the right.
    pub fn over_unit_monoid(i: &Arc<MonoidRep>, f: &LinearFunctorRep) -> Result<Self> {
        let cat = i.category().clone();
        let field = cat.field();
        let one = cat.unit();
        let mut left = Vec::new();
        let mut right = vec![vec![Matrix::zeros(field, 0, 0); cat.num_objects()]; cat.num_objects()];
        for x in cat.objects() {
            let mut row = Vec::new();
            for y in cat.objects() {
                let hx = cat.hom_basis(one, x);
                let (dy, dxy, dyx) = (f.dim(y), f.dim(cat.tensor_obj(x, y)), f.dim(cat.tensor_obj(y, x)));
                let mut l = Matrix::zeros(field, dxy, hx.len() * dy);
                let mut r = Matrix::zeros(field, dyx, dy * hx.len());
                for (i_, &phi) in hx.iter().enumerate() {
                    let lm = f.apply(&cat.tensor(&cat.basis_expr(phi), &cat.identity(y)));
                    let rm = f.apply(&cat.tensor(&cat.identity(y), &cat.basis_expr(phi)));
                    for j in 0..dy {
                        for k in 0..dxy {
                            l.set(k, i_ * dy + j, lm.get(k, j).clone());
                        }
                        for k in 0..dyx {
                            r.set(k, j * hx.len() + i_, rm.get(k, j).clone());
                        }
                    }
                }
                row.push(l);
                right[y][x] = r;
            }
            left.push(row);
        }
        Self::new(i.clone(), f.clone(), left, right)
    }

    pub fn monoid(&self) -> &Arc<MonoidRep> {
        &self.monoid
    }

    pub fn functor(&self) -> &LinearFunctorRep {
        &self.functor
    }

    pub fn category(&self) -> &Arc<CategoryPresentation> {
        self.functor.category()
    }

    pub fn field(&self) -> Field {
        self.functor.field()
    }

    pub fn dim(&self, x: ObjId) -> usize {
        self.functor.dim(x)
    }

    pub fn left(&self, x: ObjId, y: ObjId) -> &Matrix {
        &self.left[x][y]
    }

    pub fn right(&self, y: ObjId, x: ObjId) -> &Matrix {
        &self.right[y][x]
    }

    /// `m ↦ a × m` from `M(y)` to `M(w⋄y)`.
    pub fn left_action(&self, w: ObjId, a: &[crate::scalar::Scalar], y: ObjId) -> Matrix {
        self.left[w][y].contract_left(a, self.dim(y))
    }

    /// `m ↦ m × b` from `M(y)` to `M(y⋄v)`.
    pub fn right_action(&self, y: ObjId, v: ObjId, b: &[crate::scalar::Scalar]) -> Matrix {
        self.right[y][v].contract_right(self.dim(y), b)
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            monoid: self.monoid.clone(),
            functor: self.functor.clone(),
            left: self.left.clone(),
        }
    }

    /// `M_x`: left action `l_{w, y⋄x}`, right action
    /// `M(id_y ⋄ s_{x,w}) ∘ r_{y⋄x, w}`.
    pub fn shift(&self, x: ObjId) -> BimoduleRep {
        let cat = self.category();
        let left = cat
            .objects()
            .map(|w| cat.objects().map(|y| self.left[w][cat.tensor_obj(y, x)].clone()).collect())
            .collect();
        let right = cat
            .objects()
            .map(|y| {
                cat.objects()
                    .map(|w| {
                        let twist = self.functor.apply(&cat.tensor(&cat.identity(y), &cat.symmetry(x, w)));
                        twist.mul(&self.right[cat.tensor_obj(y, x)][w])
                    })
                    .collect()
            })
            .collect();
        BimoduleRep {
            monoid: self.monoid.clone(),
            functor: self.functor.shift(x),
            left,
            right,
        }
    }

    /// Componentwise direct sum, own coordinates first.
    pub fn direct_sum(&self, other: &BimoduleRep) -> BimoduleRep {
        let cat = self.category();
        let field = self.field();
        let sum = |a: &Matrix, b: &Matrix, da: usize, db: usize, left_slot: bool, k: usize| -> Matrix {
            // columns: (monoid index, module index) or (module index, monoid index)
            let mut out = Matrix::zeros(field, a.rows() + b.rows(), k * (da + db));
            for i in 0..k {
                for j in 0..da + db {
                    let col = if left_slot { i * (da + db) + j } else { j * k + i };
                    let (src, row0, jj, dd) = if j < da { (a, 0, j, da) } else { (b, a.rows(), j - da, db) };
                    let src_col = if left_slot { i * dd + jj } else { jj * k + i };
                    for r in 0..src.rows() {
                        out.set(row0 + r, col, src.get(r, src_col).clone());
                    }
                }
            }
            out
        };
        let left = cat
            .objects()
            .map(|x| {
                cat.objects()
                    .map(|y| sum(&self.left[x][y], &other.left[x][y], self.dim(y), other.dim(y), true, self.monoid.dim(x)))
                    .collect()
            })
            .collect();
        let right = cat
            .objects()
            .map(|y| {
                cat.objects()
                    .map(|x| sum(&self.right[y][x], &other.right[y][x], self.dim(y), other.dim(y), false, self.monoid.dim(x)))
                    .collect()
            })
            .collect();
        BimoduleRep {
            monoid: self.monoid.clone(),
            functor: self.functor.direct_sum(&other.functor),
            left,
            right,
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = self.category().clone();
        let a = &self.monoid;
        let field = self.field();
        let (da, dm) = (|x: ObjId| a.dim(x), |x: ObjId| self.dim(x));
        let id = |n: usize| Matrix::identity(field, n);
        let mut out = Vec::new();
        let one = cat.unit();
        for x in cat.objects() {
            if !self.left_action(one, a.unit_element(), x).is_identity() {
                out.push(Violation::new("left unit", cat.object_name(x)));
            }
            if !self.right_action(x, one, a.unit_element()).is_identity() {
                out.push(Violation::new("right unit", cat.object_name(x)));
            }
        }
        for x in cat.objects() {
            for y in cat.objects() {
                for z in cat.objects() {
                    let (xy, yz) = (cat.tensor_obj(x, y), cat.tensor_obj(y, z));
                    // (a b) m = a (b m)
                    let l = self.left[xy][z].mul(&a.product(x, y).kron(&id(dm(z))));
                    let r = self.left[x][yz].mul(&id(da(x)).kron(&self.left[y][z]));
                    if let Some((_, c)) = l.first_difference(&r) {
                        out.push(Violation::new(
                            "left associativity",
                            witness(&cat, &[x, y, z], Some((c, &[da(x), da(y), dm(z)]))),
                        ));
                    }
                    // (m a) b = m (a b)
                    let l = self.right[xy][z].mul(&self.right[x][y].kron(&id(da(z))));
                    let r = self.right[x][yz].mul(&id(dm(x)).kron(a.product(y, z)));
                    if let Some((_, c)) = l.first_difference(&r) {
                        out.push(Violation::new(
                            "right associativity",
                            witness(&cat, &[x, y, z], Some((c, &[dm(x), da(y), da(z)]))),
                        ));
                    }
                    // (a m) b = a (m b)
                    let l = self.right[xy][z].mul(&self.left[x][y].kron(&id(da(z))));
                    let r = self.left[x][yz].mul(&id(da(x)).kron(&self.right[y][z]));
                    if let Some((_, c)) = l.first_difference(&r) {
                        out.push(Violation::new(
                            "bimodule compatibility",
                            witness(&cat, &[x, y, z], Some((c, &[da(x), dm(y), da(z)]))),
                        ));
                    }
                }
            }
        }
        for (f, bf) in cat.basis().iter().enumerate() {
            for (g, bg) in cat.basis().iter().enumerate() {
                let fg = cat.tensor(&cat.basis_expr(f), &cat.basis_expr(g));
                let mfg = self.functor.apply(&fg);
                let l = mfg.mul(&self.left[bf.src][bg.src]);
                let r = self.left[bf.tgt][bg.tgt].mul(&a.functor().basis_map(f).kron(self.functor.basis_map(g)));
                if l != r {
                    out.push(Violation::new("left action naturality", format!("({},{})", bf.name, bg.name)));
                }
                let l = mfg.mul(&self.right[bf.src][bg.src]);
                let r = self.right[bf.tgt][bg.tgt].mul(&self.functor.basis_map(f).kron(a.functor().basis_map(g)));
                if l != r {
                    out.push(Violation::new("right action naturality", format!("({},{})", bf.name, bg.name)));
                }
            }
        }
        out
    }
}

/// A natural family `M → N` commuting with both actions.
#[derive(Clone, Debug)]
pub struct BimoduleMorphism {
    pub source: Arc<BimoduleRep>,
    pub target: Arc<BimoduleRep>,
    pub components: Vec<Matrix>,
}

impl BimoduleMorphism {
    pub fn new(source: Arc<BimoduleRep>, target: Arc<BimoduleRep>, components: Vec<Matrix>) -> Result<Self> {
        let f = BimoduleMorphism { source, target, components };
        let v = f.validate();
        if v.is_empty() {
            Ok(f)
        } else {
            Err(Error::Validation(v))
        }
    }

    /// The split sequence `K → K ⊕ N → N`.
    pub fn split_pair(k: &Arc<BimoduleRep>, n: &Arc<BimoduleRep>) -> Result<(Self, Self)> {
        let sum = Arc::new(k.direct_sum(n));
        let field = k.field();
        let cat = k.category();
        let inj = cat
            .objects()
            .map(|x| Matrix::identity(field, k.dim(x)).vstack(&Matrix::zeros(field, n.dim(x), k.dim(x))))
            .collect();
        let surj = cat
            .objects()
            .map(|x| Matrix::zeros(field, n.dim(x), k.dim(x)).hstack(&Matrix::identity(field, n.dim(x))))
            .collect();
        Ok((
            Self::new(k.clone(), sum.clone(), inj)?,
            Self::new(sum, n.clone(), surj)?,
        ))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let cat = self.source.category().clone();
        let (s, t) = (&self.source, &self.target);
        let a = s.monoid();
        let mut out = Vec::new();
        for x in cat.objects() {
            if self.components.get(x).map(Matrix::shape) != Some((t.dim(x), s.dim(x))) {
                out.push(Violation::new("component shape", cat.object_name(x)));
                return out;
            }
        }
        for (g, b) in cat.basis().iter().enumerate() {
            if t.functor.basis_map(g).mul(&self.components[b.src]) != self.components[b.tgt].mul(s.functor.basis_map(g)) {
                out.push(Violation::new("naturality", b.name.clone()));
            }
        }
        let field = a.field();
        for x in cat.objects() {
            for y in cat.objects() {
                let xy = cat.tensor_obj(x, y);
                let yx = cat.tensor_obj(y, x);
                let ia = Matrix::identity(field, a.dim(x));
                if self.components[xy].mul(s.left(x, y)) != t.left(x, y).mul(&ia.kron(&self.components[y])) {
                    out.push(Violation::new("left equivariance", witness(&cat, &[x, y], None)));
                }
                if self.components[yx].mul(s.right(y, x)) != t.right(y, x).mul(&self.components[y].kron(&ia)) {
                    out.push(Violation::new("right equivariance", witness(&cat, &[y, x], None)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::hom_functors;
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn fixture_monoids() {
        let dual = fixtures::dual_numbers(Q);
        assert!(dual.is_commutative());
        let m2 = fixtures::matrix_algebra(Q);
        assert!(!m2.is_commutative());
        assert!(fixtures::graded_c2(Q).is_commutative());
        assert!(!fixtures::graded_c2_super(Q).is_commutative());
    }

    #[test]
    fn broken_unit_is_reported() {
        let dual = fixtures::dual_numbers(Q);
        let bad = MonoidRep::unchecked(dual.functor().clone(), dual.products().to_vec(), vec![Q.one(), Q.one()]).unwrap();
        let v = bad.validate();
        assert_eq!(v[0].axiom, "unit law");
    }

    #[test]
    fn opposites() {
        let dual = fixtures::dual_numbers(Q);
        assert_eq!(dual.opposite(), *dual);
        let m2 = fixtures::matrix_algebra(Q);
        let op = m2.opposite();
        assert!(op.validate().is_empty());
        // e12 ×op e21 = e21 e12 = e22
        let e = |i| unit_vector(Q, 4, i);
        assert_eq!(op.multiply(0, &e(1), 0, &e(2)), e(3));
        assert_eq!(op.opposite(), *m2);
        let sup = fixtures::graded_c2_super(Q);
        let op = sup.opposite();
        assert_eq!(op.product(1, 1), &Matrix::from_ints(Q, &[[-1]]));
        assert!(op.validate().is_empty());
        assert_eq!(op.opposite(), *sup);
    }

    #[test]
    fn bimodules() {
        for a in [fixtures::dual_numbers(Q), fixtures::graded_c2_super(Q), fixtures::matrix_algebra(Q)] {
            let m = BimoduleRep::regular(&a);
            assert!(m.validate().is_empty());
            assert!(BimoduleRep::zero(&a).validate().is_empty());
            let s = m.direct_sum(&m);
            assert!(s.validate().is_empty(), "{:?}", s.validate());
            for x in a.category().objects() {
                assert!(m.shift(x).validate().is_empty());
                assert!(s.shift(x).validate().is_empty());
            }
        }
    }

    #[test]
    fn unit_monoid_and_its_bimodules() {
        for cat in [fixtures::xc2(Q), fixtures::xc2super(Q), fixtures::x1_eps(Q)] {
            let cat = Arc::new(cat);
            let i = Arc::new(MonoidRep::unit_monoid(&cat));
            let f = i.functor().clone();
            let m = BimoduleRep::over_unit_monoid(&i, &f).unwrap();
            for x in cat.objects() {
                assert!(m.shift(x).validate().is_empty());
                let h = hom_over_monoid(&m.left_module(), &m.left_module(), x);
                let plain = hom_functors(&f, &f.shift(x));
                assert_eq!(h.dim(), plain.dim());
            }
        }
    }

    #[test]
    fn yoneda_over_monoids() {
        for a in fixtures::all_monoids(Q) {
            let m = BimoduleRep::regular(&a);
            let reg = a.regular_left();
            for x in a.category().objects() {
                assert_eq!(hom_over_monoid(&reg, &m.left_module(), x).dim(), m.dim(x));
            }
        }
    }

    #[test]
    fn morphisms() {
        let a = fixtures::qc2(Q);
        assert!(MonoidMorphism::identity(&a).validate().is_empty());
        let q = fixtures::ground_field(Q);
        let aug = MonoidMorphism::new(a.clone(), q, vec![Matrix::from_ints(Q, &[[1, 1]])]).unwrap();
        assert!(aug.is_surjective());
    }
}
