//! Square-zero extensions from 2-cocycles, their equivalences and Baer sums.

use functor_hh::fixtures;
use functor_hh::hochschild::{baer_sum, extension_equivalence, extension_from_cocycle, semidirect_product, Hochschild};
use functor_hh::monoid::BimoduleRep;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let q = Field::Rationals;
    let a = fixtures::dual_numbers(q);
    let h = Hochschild::new(&a, &BimoduleRep::regular(&a))?;
    let c = h.at(0);

    let trivial = extension_from_cocycle(&c, &c.layout(2).zero())?;
    println!("E_0 equals the semidirect product: {}", *trivial.monoid == semidirect_product(c.shifted(), &a)?);

    let f = c.cochain(2, &h.cohomology(2, 0)?.representatives[0]);
    let e = extension_from_cocycle(&c, &f)?;
    println!("E_f for the HH^2 generator satisfies the axioms: {}", e.validate().is_empty());
    println!("E_f is equivalent to E_0: {}", extension_equivalence(&e, &trivial, None)?.is_some());

    let g = c.cochain(1, &[q.one(), q.zero(), q.from_i64(2), q.from_i64(-1)]);
    let eb = extension_from_cocycle(&c, &c.beta(&g))?;
    let eq = extension_equivalence(&eb, &trivial, Some(&g))?.expect("coboundaries are trivial");
    println!("a coboundary extension is trivialised by its primitive: {}", eq.morphism.validate().is_empty());

    let sum = baer_sum(&e, &e)?;
    let doubled = extension_from_cocycle(&c, &f.add(&f))?;
    println!("E_f + E_f is equivalent to E_2f: {}", extension_equivalence(&sum, &doubled, None)?.is_some());
    Ok(())
}
