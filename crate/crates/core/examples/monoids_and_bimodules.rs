//! Monoids in the functor category, their opposites, bimodules and module
//! morphisms.

use functor_hh::fixtures;
use functor_hh::monoid::{hom_over_monoid, BimoduleRep};
use functor_hh::scalar::Field;

fn main() {
    for a in fixtures::all_monoids(Field::Rationals) {
        let cat = a.category();
        println!(
            "monoid with dimensions {:?} over objects {:?}: commutative {}",
            a.functor().dims(),
            cat.object_names(),
            a.is_commutative()
        );
    }

    let m2 = fixtures::matrix_algebra(Field::Rationals);
    println!("M2 has the same product table as its opposite: {}", m2.opposite() == *m2);

    let sup = fixtures::graded_c2_super(Field::Rationals);
    let m = BimoduleRep::regular(&sup);
    let sum = m.direct_sum(&m);
    println!("regular (+) regular bimodule valid: {}", sum.validate().is_empty());
    for x in sup.category().objects() {
        let h = hom_over_monoid(&sup.regular_left(), &sum.left_module(), x);
        println!(
            "Hom_A(A, M_{}) has dimension {} = dim M({})",
            sup.category().object_name(x),
            h.dim(),
            sup.category().object_name(x)
        );
    }
}
