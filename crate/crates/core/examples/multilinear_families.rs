//! Natural multilinear families `F1 x ... x Fn -> G`, solved as a linear
//! system per tuple of objects.

use std::sync::Arc;

use functor_hh::fixtures;
use functor_hh::functor::yoneda_functor;
use functor_hh::multilinear::solve_multilinear_natural;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let eps = Arc::new(fixtures::x1_eps(Field::Rationals));
    let y = yoneda_functor(&eps, 0)?;
    for n in 0..=3 {
        let sources = vec![&y; n];
        let space = solve_multilinear_natural(&sources, &y);
        println!(
            "natural {n}-linear families on X1eps: {} of {} coordinates free",
            space.dim(),
            space.layout().len()
        );
    }

    let a = fixtures::graded_c2_super(Field::Rationals);
    let f = a.functor();
    let space = solve_multilinear_natural(&[f, f], f);
    println!("bilinear families A x A -> A on XC2super: dimension {}", space.dim());
    Ok(())
}
