//! Hochschild cohomology dimensions of the fixture monoids with coefficients
//! in themselves, at every object.

use functor_hh::fixtures;
use functor_hh::hochschild::hh_compute;
use functor_hh::monoid::BimoduleRep;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let max_n = 3;
    for field in [Field::Rationals, Field::prime(2)?] {
        println!("over {field}");
        for (name, a) in [
            ("dual numbers", fixtures::dual_numbers(field)),
            ("group algebra of C2", fixtures::qc2(field)),
            ("graded C2", fixtures::graded_c2(field)),
            ("super graded C2", fixtures::graded_c2_super(field)),
        ] {
            let report = hh_compute(&a, &BimoduleRep::regular(&a), max_n, None)?;
            for o in &report.objects {
                println!("  {name:<20} at {}: {:?}", o.name, o.dims());
            }
        }
    }
    let m2 = fixtures::matrix_algebra(Field::Rationals);
    let report = hh_compute(&m2, &BimoduleRep::regular(&m2), max_n, None)?;
    println!("M2(Q): {:?}", report.dims_at(0));
    Ok(())
}
