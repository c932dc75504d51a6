//! Values of the Day convolution A (x) A, the multiplication out of it, and
//! separability witnesses.

use functor_hh::day::{separability_witness, transport_separability, DayConvolution};
use functor_hh::fixtures;
use functor_hh::linalg::{rank, Matrix};
use functor_hh::monoid::MonoidMorphism;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let q = Field::Rationals;
    for (name, a) in [
        ("dual numbers", fixtures::dual_numbers(q)),
        ("Q[C2]", fixtures::qc2(q)),
        ("M2(Q)", fixtures::matrix_algebra(q)),
    ] {
        let day = DayConvolution::new(&a);
        let v = day.value(0);
        let mu = day.day_mu(0)?;
        let witness = separability_witness(&a)?;
        println!(
            "{name}: (A(x)A)(1) has dimension {} from {} generators, mu has rank {}, separable {}",
            v.dim(),
            v.generators.len(),
            rank(&mu),
            witness.is_some()
        );
    }

    let b = fixtures::qc2(q);
    let k = fixtures::ground_field(q);
    let w = separability_witness(&b)?.expect("Q[C2] is separable");
    let aug = MonoidMorphism::new(b, k, vec![Matrix::from_ints(q, &[[1, 1]])])?;
    let moved = transport_separability(&aug, &w.xi)?;
    println!(
        "xi of Q[C2] = {:?}; along the augmentation it becomes {:?}",
        w.xi.iter().map(ToString::to_string).collect::<Vec<_>>(),
        moved.xi.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    Ok(())
}
