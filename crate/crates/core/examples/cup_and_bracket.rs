//! Cup products of Hochschild classes and the bracket of derivations.

use functor_hh::fixtures;
use functor_hh::hochschild::{cup_product, derivation_spaces, lie_bracket_deg1, CochainRep, Hochschild};
use functor_hh::monoid::BimoduleRep;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let f2 = Field::prime(2)?;
    let a = fixtures::dual_numbers(f2);
    let h = Hochschild::new(&a, &BimoduleRep::regular(&a))?;
    let c = h.at(0);
    let h1 = h.cohomology(1, 0)?;
    let h2 = h.cohomology(2, 0)?;
    for (k, z) in h1.representatives.iter().enumerate() {
        let u = CochainRep::new(0, c.cochain(1, z));
        let sq = cup_product(&h, &u, &u)?;
        let class = h2.class_of(&c.space(2).encode(&sq.family)?);
        println!(
            "over GF(2): square of HH^1 generator {k} has HH^2 coordinates {:?}",
            class.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let q = fixtures::dual_numbers(Field::Rationals);
    let h = Hochschild::new(&q, &BimoduleRep::regular(&q))?;
    let der = derivation_spaces(&q, h.bimodule(), 0)?;
    let d = CochainRep::new(0, h.at(0).cochain(1, &der.derivations.vectors()[0]));
    let b = lie_bracket_deg1(&h, &d, &d)?;
    println!("over Q: [d, d] vanishes for the derivation x -> x: {}", b.family.is_zero());
    Ok(())
}
