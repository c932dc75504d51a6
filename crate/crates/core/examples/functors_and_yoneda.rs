//! Linear functors, representables, Yoneda-Dress shifts and natural
//! transformations.

use std::sync::Arc;

use functor_hh::fixtures;
use functor_hh::functor::{hom_functors, internal_hom_value, yoneda_dress_shift, yoneda_functor};
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let cat = Arc::new(fixtures::xc2(Field::Rationals));
    let a = fixtures::graded_c2(Field::Rationals);
    let f = a.functor();
    for x in cat.objects() {
        let y = yoneda_functor(&cat, x)?;
        println!(
            "dim Hom(X({}, -), A) = {}  (A({}) has dimension {})",
            cat.object_name(x),
            hom_functors(&y, f).dim(),
            cat.object_name(x),
            f.dim(x)
        );
    }
    let g = cat.object("g")?;
    let shifted = yoneda_dress_shift(f, g)?;
    println!("A shifted by g has dimensions {:?}", shifted.dims());
    println!("internal hom [A, A](g) has dimension {}", internal_hom_value(f, f, g).dim());

    let eps = Arc::new(fixtures::x1_eps(Field::Rationals));
    let rep = yoneda_functor(&eps, 0)?;
    println!("End of the representable on X1eps: {}", hom_functors(&rep, &rep).dim());
    Ok(())
}
