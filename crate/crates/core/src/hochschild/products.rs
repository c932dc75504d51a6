//! Cup product, the commutant action and the degree-one bracket.

use crate::error::{Error, Result};
use crate::linalg::SubspaceBasis;
use crate::monoid::BimoduleRep;
use crate::multilinear::MultilinearFamily;
use crate::scalar::Scalar;

use super::{CochainRep, Hochschild};

fn require_regular(h: &Hochschild) -> Result<()> {
    if *h.bimodule().as_ref() != BimoduleRep::regular(h.monoid()) {
        return Err(Error::Incompatible("coefficients must be the monoid itself".into()));
    }
    Ok(())
}

fn require_cocycle(h: &Hochschild, c: &CochainRep, what: &str) -> Result<()> {
    if !h.at(c.at).is_cocycle(&c.family) {
        return Err(Error::NotCocycle(format!("{what} at {}", h.monoid().category().object_name(c.at))));
    }
    Ok(())
}

/// `(f ⌣ g)(a, b) = A(id ⋄ s_{x, y₁⋄…⋄yⱼ} ⋄ id_y)(f(a) × g(b))`, at `x⋄y`.
pub fn cup_product(h: &Hochschild, f: &CochainRep, g: &CochainRep) -> Result<CochainRep> {
    require_regular(h)?;
    let a = h.monoid();
    let cat = a.category();
    let (i, j) = (f.degree(), g.degree());
    let (x, y) = (f.at, g.at);
    let z = cat.tensor_obj(x, y);
    let layout = h.at(z).layout(i + j);
    let blocks = layout
        .tuples()
        .map(|t| {
            let (tx, ty) = t.split_at(i);
            let (px, py) = (cat.tensor_objs(tx), cat.tensor_objs(ty));
            let twist = a.functor().apply(&cat.whisker(px, &cat.symmetry(x, py), y));
            let prod = a.product(cat.tensor_obj(px, x), cat.tensor_obj(py, y));
            twist.mul(&prod.mul(&f.family.block_at(tx).kron(g.family.block_at(ty))))
        })
        .collect();
    Ok(CochainRep::new(z, MultilinearFamily { layout, blocks }))
}

/// `c · g` for `c ∈ A(x)`: `b ↦ M(s_{x,y₁⋄…⋄yⱼ} ⋄ id_y)(c × g(b))`, at `x⋄y`.
pub fn ca_action(h: &Hochschild, x: crate::category::ObjId, c: &[Scalar], g: &CochainRep) -> Result<CochainRep> {
    let m = h.bimodule();
    let cat = m.category();
    let y = g.at;
    let z = cat.tensor_obj(x, y);
    let layout = h.at(z).layout(g.degree());
    let blocks = layout
        .tuples()
        .map(|t| {
            let p = cat.tensor_objs(&t);
            let twist = m.functor().apply(&cat.whisker(cat.unit(), &cat.symmetry(x, p), y));
            twist.mul(&m.left_action(x, c, cat.tensor_obj(p, y)).mul(g.family.block_at(&t)))
        })
        .collect();
    Ok(CochainRep::new(z, MultilinearFamily { layout, blocks }))
}

/// `[d, d']_y = d'_{y⋄x} ∘ d_y − A(id_y ⋄ s_{x',x}) ∘ d_{y⋄x'} ∘ d'_y`, a
/// derivation at `x⋄x'`.
pub fn lie_bracket_deg1(h: &Hochschild, d: &CochainRep, d2: &CochainRep) -> Result<CochainRep> {
    require_regular(h)?;
    if d.degree() != 1 || d2.degree() != 1 {
        return Err(Error::Incompatible("the bracket takes two degree-one cochains".into()));
    }
    require_cocycle(h, d, "first argument")?;
    require_cocycle(h, d2, "second argument")?;
    let a = h.monoid();
    let cat = a.category();
    let (x, x2) = (d.at, d2.at);
    let z = cat.tensor_obj(x, x2);
    let layout = h.at(z).layout(1);
    let blocks = cat
        .objects()
        .map(|y| {
            let first = d2.family.block_at(&[cat.tensor_obj(y, x)]).mul(d.family.block_at(&[y]));
            let twist = a.functor().apply(&cat.whisker(y, &cat.symmetry(x2, x), cat.unit()));
            let second = twist.mul(&d.family.block_at(&[cat.tensor_obj(y, x2)]).mul(d2.family.block_at(&[y])));
            first.sub(&second)
        })
        .collect();
    let out = CochainRep::new(z, MultilinearFamily { layout, blocks });
    if !h.at(z).is_cocycle(&out.family) {
        return Err(Error::single("bracket is a derivation", cat.object_name(z)));
    }
    Ok(out)
}

/// Whether `[d + βm, d'] − [d, d']` is an inner derivation.
pub fn bracket_class_is_well_defined(h: &Hochschild, d: &CochainRep, d2: &CochainRep, m: &[Scalar]) -> Result<bool> {
    let c = h.at(d.at);
    let bm = c.beta(&c.cochain(0, m));
    let shifted = CochainRep::new(d.at, d.family.add(&bm));
    let diff = lie_bracket_deg1(h, &shifted, d2)?.family.sub(&lie_bracket_deg1(h, d, d2)?.family);
    let target = h.at(h.monoid().category().tensor_obj(d.at, d2.at));
    let coords = target.space(1).encode(&diff)?;
    let d0 = target.differential(0)?;
    let inner = SubspaceBasis::spanned_by(target.field(), target.dim(1), &d0.transpose().to_rows());
    Ok(inner.contains(&coords))
}
