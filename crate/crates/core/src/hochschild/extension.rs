//! Square-zero extensions `M_x → E → A` split as functors, with `E` stored on
//! `M_x ⊕ A` (module coordinates first).

use std::sync::Arc;

use crate::error::{Error, Result, Violation};
use crate::linalg::{rank, rref, solve_affine, unit_vector, Matrix, SubspaceBasis, Vector};
use crate::monoid::{BimoduleRep, MonoidMorphism, MonoidRep};
use crate::multilinear::MultilinearFamily;

use super::{from_columns, HochschildComplex};

/// `(m₁, a₁) × (m₂, a₂) = (m₁ × a₂ + a₁ × m₂ + f(a₁, a₂), a₁ × a₂)` with unit
/// `(−f(ε, ε), ε)`; no cocycle gives the semidirect product.
fn square_zero(n: &BimoduleRep, a: &Arc<MonoidRep>, f: Option<&MultilinearFamily>) -> Result<MonoidRep> {
    let cat = a.category();
    let field = a.field();
    let functor = n.functor().direct_sum(a.functor());
    let product = cat
        .objects()
        .map(|y| {
            cat.objects()
                .map(|z| {
                    let yz = cat.tensor_obj(y, z);
                    let (ny, nz, nyz) = (n.dim(y), n.dim(z), n.dim(yz));
                    let (ay, az) = (a.dim(y), a.dim(z));
                    let (ey, ez) = (ny + ay, nz + az);
                    let mut out = Matrix::zeros(field, nyz + a.dim(yz), ey * ez);
                    let copy = |out: &mut Matrix, src: &Matrix, src_col: usize, row0: usize, col: usize| {
                        for r in 0..src.rows() {
                            let v = src.get(r, src_col);
                            if !v.is_zero() {
                                out.add_at(row0 + r, col, v);
                            }
                        }
                    };
                    for p in 0..ey {
                        for q in 0..ez {
                            let col = p * ez + q;
                            match (p < ny, q < nz) {
                                (true, true) => {}
                                (true, false) => copy(&mut out, n.right(y, z), p * az + (q - nz), 0, col),
                                (false, true) => copy(&mut out, n.left(y, z), (p - ny) * nz + q, 0, col),
                                (false, false) => {
                                    let c = (p - ny) * az + (q - nz);
                                    copy(&mut out, a.product(y, z), c, nyz, col);
                                    if let Some(f) = f {
                                        copy(&mut out, f.block_at(&[y, z]), c, 0, col);
                                    }
                                }
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let one = cat.unit();
    let eps = a.unit_element();
    let mut unit: Vector = match f {
        Some(f) => f.block_at(&[one, one]).apply_pair(eps, eps).iter().map(|v| -v.clone()).collect(),
        None => vec![field.zero(); n.dim(one)],
    };
    unit.extend(eps.iter().cloned());
    MonoidRep::new(functor, product, unit)
}

/// The semidirect product `N ⋊ A` on `N ⊕ A`.
pub fn semidirect_product(n: &BimoduleRep, a: &Arc<MonoidRep>) -> Result<MonoidRep> {
    if **n.monoid() != **a {
        return Err(Error::Incompatible("bimodule is over a different monoid".into()));
    }
    square_zero(n, a, None)
}

/// A Hochschild extension of `A` by `M_x`.
#[derive(Clone, Debug)]
pub struct ExtensionRep {
    pub complex: Arc<HochschildComplex>,
    pub monoid: Arc<MonoidRep>,
    pub cocycle: MultilinearFamily,
}

impl ExtensionRep {
    fn blocks(&self, y: crate::category::ObjId) -> (usize, usize) {
        (self.complex.shifted().dim(y), self.complex.monoid().dim(y))
    }

    /// `λ: M_x → E`.
    pub fn injection(&self) -> Vec<Matrix> {
        let field = self.monoid.field();
        self.monoid
            .category()
            .objects()
            .map(|y| {
                let (dn, da) = self.blocks(y);
                Matrix::identity(field, dn).vstack(&Matrix::zeros(field, da, dn))
            })
            .collect()
    }

    /// `π: E → A`.
    pub fn projection(&self) -> Vec<Matrix> {
        let field = self.monoid.field();
        self.monoid
            .category()
            .objects()
            .map(|y| {
                let (dn, da) = self.blocks(y);
                Matrix::zeros(field, da, dn).hstack(&Matrix::identity(field, da))
            })
            .collect()
    }

    /// `σ: A → E`, a splitting of `π` as functors.
    pub fn section(&self) -> Vec<Matrix> {
        let field = self.monoid.field();
        self.monoid
            .category()
            .objects()
            .map(|y| {
                let (dn, da) = self.blocks(y);
                Matrix::zeros(field, dn, da).vstack(&Matrix::identity(field, da))
            })
            .collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.monoid.validate();
        let a = self.complex.monoid();
        let proj = MonoidMorphism {
            source: self.monoid.clone(),
            target: a.clone(),
            components: self.projection(),
        };
        out.extend(proj.validate().into_iter().map(|v| Violation::new(format!("projection {}", v.axiom), v.witness)));
        let cat = self.monoid.category().clone();
        let (inj, sec, pr) = (self.injection(), self.section(), self.projection());
        for y in cat.objects() {
            if !pr[y].mul(&sec[y]).is_identity() {
                out.push(Violation::new("section splits projection", cat.object_name(y)));
            }
            for (g, b) in cat.basis().iter().enumerate() {
                if b.src == y && self.monoid.functor().basis_map(g).mul(&sec[y]) != sec[b.tgt].mul(a.functor().basis_map(g)) {
                    out.push(Violation::new("section naturality", b.name.clone()));
                }
            }
            for z in cat.objects() {
                let yz = cat.tensor_obj(y, z);
                let prod = self.monoid.product(y, z);
                if !prod.mul(&inj[y].kron(&inj[z])).is_zero() {
                    out.push(Violation::new("square-zero ideal", format!("({},{})", cat.object_name(y), cat.object_name(z))));
                }
                let e = |w| self.monoid.dim(w);
                let ideal = pr[yz].mul(&prod.mul(&inj[y].kron(&Matrix::identity(a.field(), e(z)))));
                let ideal2 = pr[yz].mul(&prod.mul(&Matrix::identity(a.field(), e(y)).kron(&inj[z])));
                if !ideal.is_zero() || !ideal2.is_zero() {
                    out.push(Violation::new("ideal", format!("({},{})", cat.object_name(y), cat.object_name(z))));
                }
            }
        }
        out
    }
}

/// `E_f` for a 2-cocycle `f` of `C*(A, M)(x)`.
pub fn extension_from_cocycle(c: &Arc<HochschildComplex>, f: &MultilinearFamily) -> Result<ExtensionRep> {
    if f.layout.arity() != 2 {
        return Err(Error::Incompatible(format!("expected a 2-cochain, got degree {}", f.layout.arity())));
    }
    if !c.space(2).contains(f) {
        return Err(Error::Incompatible("cochain is not natural".into()));
    }
    let bf = c.beta(f);
    if let Some((k, b)) = bf.blocks.iter().enumerate().find(|(_, b)| !b.is_zero()) {
        let cat = c.monoid().category();
        let names: Vec<&str> = bf.layout.tuple(k).iter().map(|&y| cat.object_name(y)).collect();
        let (r, col) = b.first_difference(&Matrix::zeros(b.field(), b.rows(), b.cols())).expect("nonzero block");
        return Err(Error::NotCocycle(format!(
            "beta f is {} at tuple ({}) entry ({r},{col})",
            b.get(r, col),
            names.join(",")
        )));
    }
    let monoid = Arc::new(square_zero(c.shifted(), c.monoid(), Some(f))?);
    let e = ExtensionRep {
        complex: c.clone(),
        monoid,
        cocycle: f.clone(),
    };
    let v = e.validate();
    if !v.is_empty() {
        return Err(Error::Validation(v));
    }
    Ok(e)
}

/// `f^E(a₁, a₂) = λ⁻¹(σa₁ × σa₂ − σ(a₁ × a₂))` for `E` on `M_x ⊕ A`.
pub fn extension_cocycle(c: &Arc<HochschildComplex>, e: &MonoidRep) -> Result<MultilinearFamily> {
    let cat = c.monoid().category().clone();
    let (n, a) = (c.shifted(), c.monoid());
    if cat.objects().any(|y| e.dim(y) != n.dim(y) + a.dim(y)) {
        return Err(Error::DimensionMismatch("extension is not on M_x ⊕ A".into()));
    }
    let layout = c.layout(2);
    let field = a.field();
    let blocks = layout
        .tuples()
        .map(|t| {
            let (y, z) = (t[0], t[1]);
            let yz = cat.tensor_obj(y, z);
            let sec = |w| Matrix::zeros(field, n.dim(w), a.dim(w)).vstack(&Matrix::identity(field, a.dim(w)));
            let lift = Matrix::identity(field, n.dim(yz)).hstack(&Matrix::zeros(field, n.dim(yz), a.dim(yz)));
            let both = e.product(y, z).mul(&sec(y).kron(&sec(z)));
            lift.mul(&both.sub(&sec(yz).mul(a.product(y, z))))
        })
        .collect();
    let f = MultilinearFamily { layout, blocks };
    if !c.space(2).contains(&f) {
        return Err(Error::Incompatible("extracted cocycle is not natural".into()));
    }
    Ok(f)
}

/// An equivalence `E → E'`, `(m, a) ↦ (m + g(a), a)`.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub g: MultilinearFamily,
    pub morphism: MonoidMorphism,
}

/// Decides whether `E_f` and `E_{f'}` are equivalent. With `g` given it must
/// satisfy `f − f' = βg`; otherwise such a `g` is solved for.
pub fn extension_equivalence(e: &ExtensionRep, e2: &ExtensionRep, g: Option<&MultilinearFamily>) -> Result<Option<Equivalence>> {
    let c = &e.complex;
    if !Arc::ptr_eq(c, &e2.complex)
        && (c.object() != e2.complex.object() || **c.bimodule() != **e2.complex.bimodule())
    {
        return Err(Error::Incompatible("extensions of different bimodules".into()));
    }
    let diff = e.cocycle.sub(&e2.cocycle);
    let g = match g {
        Some(g) => {
            if c.beta(g) != diff {
                return Err(Error::Incompatible("f - f' is not beta g".into()));
            }
            g.clone()
        }
        None => {
            let rhs = c.space(2).encode(&diff)?;
            match solve_affine(&*c.differential(1)?, &rhs)? {
                Some(sol) => c.cochain(1, &sol.particular),
                None => return Ok(None),
            }
        }
    };
    let cat = c.monoid().category().clone();
    let field = c.field();
    let components: Vec<Matrix> = cat
        .objects()
        .map(|y| {
            let (dn, da) = (c.shifted().dim(y), c.monoid().dim(y));
            let top = Matrix::identity(field, dn).hstack(g.block_at(&[y]));
            top.vstack(&Matrix::zeros(field, da, dn).hstack(&Matrix::identity(field, da)))
        })
        .collect();
    let morphism = MonoidMorphism::new(e.monoid.clone(), e2.monoid.clone(), components)?;
    let (inj, inj2) = (e.injection(), e2.injection());
    let (pr, pr2) = (e.projection(), e2.projection());
    for y in cat.objects() {
        let phi = &morphism.components[y];
        if phi.mul(&inj[y]) != inj2[y] || pr2[y].mul(phi) != pr[y] || rank(phi) != phi.rows() {
            return Err(Error::single("equivalence of extensions", cat.object_name(y)));
        }
    }
    Ok(Some(Equivalence { g, morphism }))
}

/// The Baer sum: the pullback of the projections modulo the antidiagonal
/// copy of `M_x`, identified with `M_x ⊕ A` by the class map
/// `(e, e') ↦ (λ⁻¹(e − σπe) + λ'⁻¹(e' − σ'π'e'), πe)`.
pub fn baer_sum(e: &ExtensionRep, e2: &ExtensionRep) -> Result<ExtensionRep> {
    let c = &e.complex;
    if c.object() != e2.complex.object() || **c.bimodule() != **e2.complex.bimodule() {
        return Err(Error::Incompatible("extensions of different bimodules".into()));
    }
    let cat = c.monoid().category().clone();
    let field = c.field();
    let (inj, inj2) = (e.injection(), e2.injection());
    let (pr, pr2) = (e.projection(), e2.projection());
    let (sec, sec2) = (e.section(), e2.section());
    let mut class = Vec::new();
    let mut lift = Vec::new();
    for y in cat.objects() {
        let (dn, da) = (c.shifted().dim(y), c.monoid().dim(y));
        let d = dn + da;
        let id = Matrix::identity(field, d);
        // λ is the inclusion of the first dn coordinates; this is its left inverse
        let linv = Matrix::identity(field, dn).hstack(&Matrix::zeros(field, dn, da));
        let left = linv.mul(&id.sub(&sec[y].mul(&pr[y])));
        let right = linv.mul(&id.sub(&sec2[y].mul(&pr2[y])));
        let cmap = left.hstack(&right).vstack(&pr[y].hstack(&Matrix::zeros(field, da, d)));
        let pullback = rref(&pr[y].hstack(&pr2[y].neg())).kernel;
        let relations: Vec<Vector> = (0..dn)
            .map(|i| {
                let n = unit_vector(field, dn, i);
                let mut v = inj[y].mul_vec(&n);
                v.extend(inj2[y].mul_vec(&n).into_iter().map(|s| -s));
                v
            })
            .collect();
        let rel = SubspaceBasis::spanned_by(field, 2 * d, &relations);
        let k = pullback.to_matrix().transpose();
        let ck = cmap.mul(&k);
        let kills = rel.vectors().iter().all(|v| cmap.mul_vec(v).iter().all(|s| s.is_zero()));
        if !kills || rank(&ck) != d || pullback.dim() != d + rel.dim() {
            return Err(Error::single("Baer sum class map", cat.object_name(y)));
        }
        let cols = (0..d)
            .map(|u| {
                let sol = solve_affine(&ck, &unit_vector(field, d, u))?.expect("class map is onto");
                Ok(k.mul_vec(&sol.particular))
            })
            .collect::<Result<Vec<_>>>()?;
        lift.push(from_columns(field, 2 * d, &cols));
        class.push(cmap);
    }
    let (m1, m2) = (&e.monoid, &e2.monoid);
    let product = cat
        .objects()
        .map(|y| {
            cat.objects()
                .map(|z| {
                    let yz = cat.tensor_obj(y, z);
                    let (dy, dz) = (m1.dim(y), m1.dim(z));
                    let cols: Vec<Vector> = (0..dy * dz)
                        .map(|col| {
                            let (p, q) = (col / dz, col % dz);
                            let (g1, g2) = (lift[y].column(p), lift[z].column(q));
                            let mut v = m1.product(y, z).apply_pair(&g1[..dy], &g2[..dz]);
                            v.extend(m2.product(y, z).apply_pair(&g1[dy..], &g2[dz..]));
                            class[yz].mul_vec(&v)
                        })
                        .collect();
                    from_columns(field, m1.dim(yz), &cols)
                })
                .collect()
        })
        .collect();
    let one = cat.unit();
    let mut eps = m1.unit_element().clone();
    eps.extend(m2.unit_element().iter().cloned());
    let unit = class[one].mul_vec(&eps);
    let functor = c.shifted().functor().direct_sum(c.monoid().functor());
    let monoid = MonoidRep::new(functor, product, unit)?;
    let cocycle = extension_cocycle(c, &monoid)?;
    let sum = ExtensionRep {
        complex: c.clone(),
        monoid: Arc::new(monoid),
        cocycle,
    };
    let v = sum.validate();
    if !v.is_empty() {
        return Err(Error::Validation(v));
    }
    let expected = extension_from_cocycle(c, &e.cocycle.add(&e2.cocycle))?;
    if extension_equivalence(&sum, &expected, None)?.is_none() {
        return Err(Error::single("Baer sum class", "sum of cocycles"));
    }
    Ok(sum)
}
