//! Hochschild cochains of a monoid `A` with coefficients in a bimodule `M`.
//!
//! At an object `x`, an `n`-cochain is a natural family
//! `A(x₁) ⊗ … ⊗ A(xₙ) → M(x₁⋄…⋄xₙ⋄x)`, that is a multilinear family with
//! target the shifted bimodule `M_x`. Degree zero is `M(x)` itself, stored as
//! the single block of the empty tuple. Bar objects are never built.

mod extension;
mod products;

pub use extension::{baer_sum, extension_cocycle, extension_equivalence, extension_from_cocycle, semidirect_product, Equivalence, ExtensionRep};
pub use products::{bracket_class_is_well_defined, ca_action, cup_product, lie_bracket_deg1};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::category::{MorExpr, ObjId};
use crate::complex::{cohomology_in_degree, les_of_complex_ses, CochainComplexRep, CohomologyDegree, ComplexSESRep, LongExactSequence};
use crate::error::{Error, Result};
use crate::format::{matrix_from_json, matrix_to_json, parse_tuple, tuple_key, CocycleFile};
use crate::linalg::{rref, unit_vector, Matrix, SubspaceBasis, Vector};
use crate::monoid::{split_index, BimoduleMorphism, BimoduleRep, MonoidRep};
use crate::multilinear::{naturality_system, CochainSpace, FamilyLayout, MultilinearFamily};
use crate::scalar::{Field, Scalar};

/// Mixed-radix index of `idx` with digit bounds `dims`, first most significant.
pub(crate) fn radix(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn per_basis(field: Field, dim: usize, f: impl Fn(&[Scalar]) -> Matrix) -> Vec<Matrix> {
    (0..dim).map(|i| f(&unit_vector(field, dim, i))).collect()
}

/// Assembles a matrix from its columns.
pub(crate) fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            if !v.is_zero() {
                m.set(r, c, v.clone());
            }
        }
    }
    m
}

/// A cochain together with the object it lives at.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainRep {
    pub at: ObjId,
    pub family: MultilinearFamily,
}

impl CochainRep {
    pub fn new(at: ObjId, family: MultilinearFamily) -> Self {
        CochainRep { at, family }
    }

    pub fn degree(&self) -> usize {
        self.family.layout.arity()
    }
}

/// The cochain complex `C*(A, M)(x)` at one object.
#[derive(Debug)]
pub struct HochschildComplex {
    a: Arc<MonoidRep>,
    m: Arc<BimoduleRep>,
    x: ObjId,
    shifted: BimoduleRep,
    /// `left[w][y][i]`: `M(y) → M(w⋄y)`, `m ↦ eᵢ × m`.
    left: Vec<Vec<Vec<Matrix>>>,
    /// `right[y][v][j]`: `M(y) → M(y⋄v)`, `m ↦ m × eⱼ`.
    right: Vec<Vec<Vec<Matrix>>>,
    /// `twist[p][z] = M(id_p ⋄ s_{x,z})`.
    twist: Vec<Vec<Matrix>>,
    shifted_left: Vec<Vec<Vec<Matrix>>>,
    shifted_right: Vec<Vec<Vec<Matrix>>>,
    layouts: Mutex<BTreeMap<usize, Arc<FamilyLayout>>>,
    spaces: Mutex<BTreeMap<usize, Arc<CochainSpace>>>,
    diffs: Mutex<BTreeMap<usize, Arc<Matrix>>>,
}

impl HochschildComplex {
    pub fn new(m: &Arc<BimoduleRep>, x: ObjId) -> Self {
        let a = m.monoid().clone();
        let cat = m.category().clone();
        let field = m.field();
        let shifted = m.shift(x);
        let left = cat
            .objects()
            .map(|w| cat.objects().map(|y| per_basis(field, a.dim(w), |e| m.left_action(w, e, y))).collect())
            .collect();
        let right = cat
            .objects()
            .map(|y| cat.objects().map(|v| per_basis(field, a.dim(v), |e| m.right_action(y, v, e))).collect())
            .collect();
        let twist = cat
            .objects()
            .map(|p| {
                cat.objects()
                    .map(|z| m.functor().apply(&cat.whisker(p, &cat.symmetry(x, z), cat.unit())))
                    .collect()
            })
            .collect();
        let shifted_left = cat
            .objects()
            .map(|w| cat.objects().map(|y| per_basis(field, a.dim(w), |e| shifted.left_action(w, e, y))).collect())
            .collect();
        let shifted_right = cat
            .objects()
            .map(|y| cat.objects().map(|v| per_basis(field, a.dim(v), |e| shifted.right_action(y, v, e))).collect())
            .collect();
        HochschildComplex {
            a,
            m: m.clone(),
            x,
            shifted,
            left,
            right,
            twist,
            shifted_left,
            shifted_right,
            layouts: Mutex::new(BTreeMap::new()),
            spaces: Mutex::new(BTreeMap::new()),
            diffs: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn monoid(&self) -> &Arc<MonoidRep> {
        &self.a
    }

    pub fn bimodule(&self) -> &Arc<BimoduleRep> {
        &self.m
    }

    pub fn object(&self) -> ObjId {
        self.x
    }

    pub fn object_name(&self) -> &str {
        self.a.category().object_name(self.x)
    }

    /// The shifted bimodule `M_x`, target of every cochain.
    pub fn shifted(&self) -> &BimoduleRep {
        &self.shifted
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// Block shapes of all `n`-ary families into `M_x`, natural or not.
    pub fn layout(&self, n: usize) -> Arc<FamilyLayout> {
        let mut cache = self.layouts.lock().expect("layout cache");
        cache
            .entry(n)
            .or_insert_with(|| {
                Arc::new(FamilyLayout::new(
                    self.a.category().clone(),
                    vec![self.a.functor().dims().to_vec(); n],
                    self.shifted.functor().dims().to_vec(),
                ))
            })
            .clone()
    }

    /// `Cⁿ(A, M)(x)`.
    pub fn space(&self, n: usize) -> Arc<CochainSpace> {
        if let Some(s) = self.spaces.lock().expect("space cache").get(&n) {
            return s.clone();
        }
        let layout = self.layout(n);
        let space = if n == 0 {
            CochainSpace::unconstrained(layout)
        } else {
            let a = self.a.functor();
            let sys = naturality_system(&layout, &|_, g| a.basis_map(g).clone(), self.shifted.functor());
            CochainSpace::from_constraints(layout, &sys)
        };
        let space = Arc::new(space);
        self.spaces.lock().expect("space cache").insert(n, space.clone());
        space
    }

    pub fn dim(&self, n: usize) -> usize {
        self.space(n).dim()
    }

    /// `βf`, evaluated on basis tuples from the bimodule's own actions.
    pub fn beta(&self, f: &MultilinearFamily) -> MultilinearFamily {
        let out = self.layout(f.layout.arity() + 1);
        let blocks = (0..out.num_tuples())
            .into_par_iter()
            .map(|k| self.beta_block(f, &out, k))
            .collect();
        MultilinearFamily { layout: out, blocks }
    }

    fn beta_block(&self, f: &MultilinearFamily, out: &FamilyLayout, k: usize) -> Matrix {
        let cat = self.a.category();
        let field = self.field();
        let t = out.tuple(k);
        let n = t.len() - 1;
        let dims: Vec<usize> = t.iter().map(|&y| self.a.dim(y)).collect();
        let b = out.block(k);
        let mut res = Matrix::zeros(field, b.rows, b.cols);
        let rest = cat.tensor_objs(&t[1..]);
        let init = cat.tensor_objs(&t[..n]);
        let f_rest = f.block_at(&t[1..]);
        let f_init = f.block_at(&t[..n]);
        let lefts = &self.left[t[0]][cat.tensor_obj(rest, self.x)];
        let rights = &self.right[cat.tensor_obj(init, self.x)][t[n]];
        let twist = &self.twist[init][t[n]];
        let last_sign = field.from_i64(sign(n + 1));
        for c in 0..b.cols {
            let idx = split_index(c, &dims);
            // a₁ × f(a₂, …)
            let mut v = lefts[idx[0]].mul_vec(&f_rest.column(radix(&idx[1..], &dims[1..])));
            // f(…, aᵢ × aᵢ₊₁, …)
            for i in 0..n {
                let prod = self.a.product(t[i], t[i + 1]);
                let pcol = idx[i] * dims[i + 1] + idx[i + 1];
                let mut t2 = t[..i].to_vec();
                t2.push(cat.tensor_obj(t[i], t[i + 1]));
                t2.extend_from_slice(&t[i + 2..]);
                let dims2: Vec<usize> = t2.iter().map(|&y| self.a.dim(y)).collect();
                let fb = f.block_at(&t2);
                let s = field.from_i64(sign(i + 1));
                for j in 0..prod.rows() {
                    let coef = prod.get(j, pcol);
                    if coef.is_zero() {
                        continue;
                    }
                    let mut idx2 = idx[..i].to_vec();
                    idx2.push(j);
                    idx2.extend_from_slice(&idx[i + 2..]);
                    let col = radix(&idx2, &dims2);
                    let coef = &s * coef;
                    for (r, acc) in v.iter_mut().enumerate() {
                        let e = fb.get(r, col);
                        if !e.is_zero() {
                            *acc += &(&coef * e);
                        }
                    }
                }
            }
            // M(id ⋄ s_{x,xₙ₊₁})(f(a₁, …, aₙ) × aₙ₊₁)
            let w = f_init.column(radix(&idx[..n], &dims[..n]));
            let u = twist.mul_vec(&rights[idx[n]].mul_vec(&w));
            for (acc, e) in v.iter_mut().zip(&u) {
                if !e.is_zero() {
                    *acc += &(&last_sign * e);
                }
            }
            for (r, e) in v.into_iter().enumerate() {
                if !e.is_zero() {
                    res.set(r, c, e);
                }
            }
        }
        res
    }

    /// Precomposition with the `i`-th bar face, `1 ≤ i ≤ n + 2`: the outer
    /// faces act through `M_x`, the inner ones multiply adjacent arguments.
    pub fn face(&self, i: usize, f: &MultilinearFamily) -> Result<MultilinearFamily> {
        let n = f.layout.arity();
        if i == 0 || i > n + 2 {
            return Err(Error::Incompatible(format!("face {i} out of range 1..={} in degree {n}", n + 2)));
        }
        let out = self.layout(n + 1);
        let blocks = (0..out.num_tuples())
            .into_par_iter()
            .map(|k| self.face_block(i, f, &out, k))
            .collect();
        Ok(MultilinearFamily { layout: out, blocks })
    }

    fn face_block(&self, i: usize, f: &MultilinearFamily, out: &FamilyLayout, k: usize) -> Matrix {
        let cat = self.a.category();
        let field = self.field();
        let t = out.tuple(k);
        let n = t.len() - 1;
        let b = out.block(k);
        let mut res = Matrix::zeros(field, b.rows, b.cols);
        if i == 1 {
            let fr = f.block_at(&t[1..]);
            let mats = &self.shifted_left[t[0]][cat.tensor_objs(&t[1..])];
            for (j, l) in mats.iter().enumerate() {
                res.paste(0, j * fr.cols(), &l.mul(fr));
            }
        } else if i == n + 2 {
            let fi = f.block_at(&t[..n]);
            let mats = &self.shifted_right[cat.tensor_objs(&t[..n])][t[n]];
            let dl = mats.len();
            for (j, r) in mats.iter().enumerate() {
                let part = r.mul(fi);
                for c in 0..fi.cols() {
                    for row in 0..part.rows() {
                        res.set(row, c * dl + j, part.get(row, c).clone());
                    }
                }
            }
        } else {
            let p = i - 2;
            let mut t2 = t[..p].to_vec();
            t2.push(cat.tensor_obj(t[p], t[p + 1]));
            t2.extend_from_slice(&t[p + 2..]);
            let before: usize = t[..p].iter().map(|&y| self.a.dim(y)).product();
            let after: usize = t[p + 2..].iter().map(|&y| self.a.dim(y)).product();
            res = crate::multilinear::precompose_factor(f.block_at(&t2), before, self.a.product(t[p], t[p + 1]), after);
        }
        res
    }

    /// Matrix in cochain coordinates of a family-level map `Cⁿ → Cᵐ`.
    pub(crate) fn operator_matrix(
        &self,
        n: usize,
        target: &CochainSpace,
        op: impl Fn(&MultilinearFamily) -> Result<MultilinearFamily> + Sync,
    ) -> Result<Matrix> {
        let src = self.space(n);
        let cols: Vec<Vector> = (0..src.dim())
            .into_par_iter()
            .map(|k| {
                let image = op(&src.basis_family(k))?;
                target.encode(&image).map_err(|_| {
                    Error::Incompatible(format!(
                        "image of a degree-{n} basis cochain at {} is not natural",
                        self.object_name()
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Ok(from_columns(self.field(), target.dim(), &cols))
    }

    /// `βⁿ: Cⁿ(x) → Cⁿ⁺¹(x)` in cochain coordinates.
    pub fn differential(&self, n: usize) -> Result<Arc<Matrix>> {
        if let Some(d) = self.diffs.lock().expect("differential cache").get(&n) {
            return Ok(d.clone());
        }
        let target = self.space(n + 1);
        let d = Arc::new(self.operator_matrix(n, &target, |f| Ok(self.beta(f)))?);
        self.diffs.lock().expect("differential cache").insert(n, d.clone());
        Ok(d)
    }

    /// The dual of the `i`-th face in cochain coordinates.
    pub fn face_map_dual(&self, n: usize, i: usize) -> Result<Matrix> {
        let target = self.space(n + 1);
        self.operator_matrix(n, &target, |f| self.face(i, f))
    }

    /// Degrees `0..=top`, with `β∘β = 0` checked as a matrix identity.
    pub fn complex(&self, top: usize) -> Result<CochainComplexRep> {
        let dims = (0..=top).map(|n| self.dim(n)).collect();
        let diffs = (0..top)
            .map(|n| self.differential(n).map(|d| (*d).clone()))
            .collect::<Result<_>>()?;
        CochainComplexRep::new(self.field(), dims, diffs).map_err(|e| match e {
            Error::BetaSquared { degree, .. } => Error::BetaSquared {
                degree,
                object: self.object_name().to_string(),
            },
            e => e,
        })
    }

    /// Checks `β(βf) = 0` for every basis cochain of degree `n` by
    /// evaluation, without building the degree `n + 2` cochain space.
    pub fn check_beta_squared(&self, n: usize) -> Result<()> {
        let space = self.space(n);
        let bad = (0..space.dim())
            .into_par_iter()
            .any(|k| !self.beta(&self.beta(&space.basis_family(k))).is_zero());
        if bad {
            return Err(Error::BetaSquared {
                degree: n,
                object: self.object_name().to_string(),
            });
        }
        Ok(())
    }

    pub fn cochain(&self, n: usize, coords: &[Scalar]) -> MultilinearFamily {
        self.space(n).decode(coords)
    }

    pub fn is_cocycle(&self, f: &MultilinearFamily) -> bool {
        self.beta(f).is_zero()
    }

    /// Reads a cochain from its file form; tuples missing from the file are
    /// zero.
    pub fn cochain_from_file(&self, raw: &CocycleFile) -> Result<MultilinearFamily> {
        let cat = self.a.category();
        if cat.object(&raw.at)? != self.x {
            return Err(Error::Incompatible(format!(
                "cochain lives at {}, expected {}",
                raw.at,
                self.object_name()
            )));
        }
        let layout = self.layout(raw.degree);
        let mut f = layout.zero();
        for (key, rows) in &raw.components {
            let names = parse_tuple(key)?;
            if names.len() != raw.degree {
                return Err(Error::Parse(format!("component {key} has the wrong arity")));
            }
            let t = names.iter().map(|s| cat.object(s)).collect::<Result<Vec<_>>>()?;
            let k = layout.tuple_index(&t);
            let b = layout.block(k);
            f.blocks[k] = matrix_from_json(self.field(), b.rows, b.cols, rows, &format!("component {key}"))?;
        }
        if !self.space(raw.degree).contains(&f) {
            return Err(Error::Incompatible("cochain is not natural".into()));
        }
        Ok(f)
    }

    pub fn cochain_to_file(&self, f: &MultilinearFamily) -> CocycleFile {
        let cat = self.a.category();
        let components = f
            .layout
            .tuples()
            .zip(&f.blocks)
            .filter(|(_, b)| b.rows() * b.cols() > 0)
            .map(|(t, b)| {
                let names: Vec<&str> = t.iter().map(|&y| cat.object_name(y)).collect();
                (tuple_key(&names), matrix_to_json(b))
            })
            .collect();
        CocycleFile {
            degree: f.layout.arity(),
            at: self.object_name().to_string(),
            components,
        }
    }
}

/// One complex per object of the category, built on demand.
#[derive(Debug)]
pub struct Hochschild {
    m: Arc<BimoduleRep>,
    complexes: Vec<OnceLock<Arc<HochschildComplex>>>,
}

impl Hochschild {
    pub fn new(a: &Arc<MonoidRep>, m: &BimoduleRep) -> Result<Self> {
        if !Arc::ptr_eq(a, m.monoid()) && **a != **m.monoid() {
            return Err(Error::Incompatible("bimodule is over a different monoid".into()));
        }
        Ok(Hochschild {
            complexes: (0..m.category().num_objects()).map(|_| OnceLock::new()).collect(),
            m: Arc::new(m.clone()),
        })
    }

    pub fn monoid(&self) -> &Arc<MonoidRep> {
        self.m.monoid()
    }

    pub fn bimodule(&self) -> &Arc<BimoduleRep> {
        &self.m
    }

    pub fn at(&self, x: ObjId) -> Arc<HochschildComplex> {
        self.complexes[x]
            .get_or_init(|| Arc::new(HochschildComplex::new(&self.m, x)))
            .clone()
    }

    /// `HHⁿ` at `x`; builds the complex through degree `n + 1`.
    pub fn cohomology(&self, n: usize, x: ObjId) -> Result<CohomologyDegree> {
        Ok(cohomology_in_degree(&self.at(x).complex(n + 1)?, n))
    }

    /// The cochain map `Cⁿ(x) → Cⁿ(x')` postcomposing with `M(id ⋄ φ)`.
    pub fn cochain_translate(&self, n: usize, phi: &MorExpr) -> Result<Matrix> {
        let cat = self.m.category().clone();
        let (src, tgt) = (self.at(phi.src), self.at(phi.tgt));
        let target = tgt.space(n);
        let layout = target.layout().clone();
        src.operator_matrix(n, &target, |f| {
            let blocks = f
                .layout
                .tuples()
                .zip(&f.blocks)
                .map(|(t, b)| {
                    let map = self.m.functor().apply(&cat.whisker(cat.tensor_objs(&t), phi, cat.unit()));
                    map.mul(b)
                })
                .collect();
            Ok(MultilinearFamily {
                layout: layout.clone(),
                blocks,
            })
        })
    }

    /// `HHⁿ(x) → HHⁿ(x')` induced by `φ: x → x'`, in the bases of class
    /// representatives. Fails if the translation does not commute with `β`.
    pub fn hh_translate(&self, n: usize, phi: &MorExpr) -> Result<Matrix> {
        let t0 = self.cochain_translate(n, phi)?;
        let t1 = self.cochain_translate(n + 1, phi)?;
        let (src, tgt) = (self.at(phi.src), self.at(phi.tgt));
        if t1.mul(&*src.differential(n)?) != tgt.differential(n)?.mul(&t0) {
            return Err(Error::single("translation commutes with beta", format!("degree {n}")));
        }
        let hs = self.cohomology(n, phi.src)?;
        let ht = self.cohomology(n, phi.tgt)?;
        let cols: Vec<Vector> = hs.representatives.iter().map(|z| ht.class_of(&t0.mul_vec(z))).collect();
        Ok(from_columns(self.m.field(), ht.dim, &cols))
    }
}

/// Cohomology at one object.
#[derive(Clone, Debug)]
pub struct ObjectCohomology {
    pub object: ObjId,
    pub name: String,
    pub cochain_dims: Vec<usize>,
    pub degrees: Vec<CohomologyDegree>,
    /// `β∘β = 0` held as matrices through the top degree and by evaluation
    /// one degree beyond.
    pub beta_squared_verified: bool,
    pub complex: Arc<HochschildComplex>,
}

impl ObjectCohomology {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    /// Cocycles whose classes form a basis of `HHⁿ`.
    pub fn representatives(&self, n: usize) -> Vec<MultilinearFamily> {
        self.degrees[n]
            .representatives
            .iter()
            .map(|z| self.complex.cochain(n, z))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct HHReport {
    pub max_degree: usize,
    pub objects: Vec<ObjectCohomology>,
}

impl HHReport {
    pub fn at(&self, x: ObjId) -> Option<&ObjectCohomology> {
        self.objects.iter().find(|o| o.object == x)
    }

    /// Dimensions in degrees `0..=max_degree`; empty if `x` was not computed.
    pub fn dims_at(&self, x: ObjId) -> Vec<usize> {
        self.at(x).map(ObjectCohomology::dims).unwrap_or_default()
    }
}

/// `HHⁿ(A, M)(x)` for `n ≤ max_n` at the given objects (all if `None`).
pub fn hh_compute(a: &Arc<MonoidRep>, m: &BimoduleRep, max_n: usize, objects: Option<&[ObjId]>) -> Result<HHReport> {
    let h = Hochschild::new(a, m)?;
    hh_compute_with(&h, max_n, objects)
}

pub fn hh_compute_with(h: &Hochschild, max_n: usize, objects: Option<&[ObjId]>) -> Result<HHReport> {
    let all: Vec<ObjId> = match objects {
        Some(xs) => xs.to_vec(),
        None => h.bimodule().category().objects().collect(),
    };
    let objects = all
        .par_iter()
        .map(|&x| {
            let c = h.at(x);
            let complex = c.complex(max_n + 1)?;
            c.check_beta_squared(max_n)?;
            Ok(ObjectCohomology {
                object: x,
                name: c.object_name().to_string(),
                cochain_dims: complex.dims()[..=max_n].to_vec(),
                degrees: (0..=max_n).map(|n| cohomology_in_degree(&complex, n)).collect(),
                beta_squared_verified: true,
                complex: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HHReport { max_degree: max_n, objects })
}

/// `CM_A(x)`: elements `m` with `a × m = M(s_{x,y})(m × a)` for all `a`.
pub fn commutant(a: &Arc<MonoidRep>, m: &BimoduleRep, x: ObjId) -> Result<SubspaceBasis> {
    let h = Hochschild::new(a, m)?;
    Ok(rref(&*h.at(x).differential(0)?).kernel)
}

/// Derivations and inner derivations `A → M_x`, in degree-one cochain
/// coordinates.
#[derive(Clone, Debug)]
pub struct DerivationSpaces {
    pub derivations: SubspaceBasis,
    pub inner: SubspaceBasis,
}

impl DerivationSpaces {
    pub fn hh1(&self) -> usize {
        self.derivations.dim() - self.inner.dim()
    }
}

pub fn derivation_spaces(a: &Arc<MonoidRep>, m: &BimoduleRep, x: ObjId) -> Result<DerivationSpaces> {
    let h = Hochschild::new(a, m)?;
    let c = h.at(x);
    let d0 = c.differential(0)?;
    let inner = SubspaceBasis::spanned_by(c.field(), c.dim(1), &d0.transpose().to_rows());
    Ok(DerivationSpaces {
        derivations: rref(&*c.differential(1)?).kernel,
        inner,
    })
}

/// `HHⁿ(A,M)(x) → HHⁿ(A,M)(x')` along `φ: x → x'`.
pub fn hh_translate(a: &Arc<MonoidRep>, m: &BimoduleRep, n: usize, phi: &MorExpr) -> Result<Matrix> {
    Hochschild::new(a, m)?.hh_translate(n, phi)
}

/// The cochain map `Cⁿ(A,M)(x) → Cⁿ(A,M')(x)` induced by `α: M → M'`.
pub fn induced_cochain_map(alpha: &BimoduleMorphism, source: &HochschildComplex, target: &HochschildComplex, n: usize) -> Result<Matrix> {
    let cat = source.monoid().category().clone();
    let x = source.object();
    let space = target.space(n);
    let layout = space.layout().clone();
    source.operator_matrix(n, &space, |f| {
        let blocks = f
            .layout
            .tuples()
            .zip(&f.blocks)
            .map(|(t, b)| alpha.components[cat.tensor_obj(cat.tensor_objs(&t), x)].mul(b))
            .collect();
        Ok(MultilinearFamily {
            layout: layout.clone(),
            blocks,
        })
    })
}

/// The long exact sequence in `HH*(A, −)(x)` of a short exact sequence of
/// bimodules `K → M → N`, through degree `max_n`.
pub fn hh_long_exact_sequence(
    inj: &BimoduleMorphism,
    surj: &BimoduleMorphism,
    x: ObjId,
    max_n: usize,
) -> Result<LongExactSequence> {
    if *inj.target != *surj.source {
        return Err(Error::Incompatible("maps do not compose".into()));
    }
    let top = max_n + 1;
    let ck = HochschildComplex::new(&inj.source, x);
    let cm = HochschildComplex::new(&inj.target, x);
    let cn = HochschildComplex::new(&surj.target, x);
    let injection = (0..=top).map(|n| induced_cochain_map(inj, &ck, &cm, n)).collect::<Result<_>>()?;
    let surjection = (0..=top).map(|n| induced_cochain_map(surj, &cm, &cn, n)).collect::<Result<_>>()?;
    let ses = ComplexSESRep::new(ck.complex(top)?, cm.complex(top)?, cn.complex(top)?, injection, surjection)?;
    les_of_complex_ses(&ses, max_n)
}

#[cfg(test)]
mod tests;
