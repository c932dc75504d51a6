//! Finite presentations of strict symmetric monoidal categories: composing,
//! tensoring, symmetries and validation.

use functor_hh::category::CategoryPresentation;
use functor_hh::fixtures;
use functor_hh::format::CategoryFile;
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let cat = fixtures::x1_eps(Field::Rationals);
    let t = cat.basis_expr(cat.morphism("t")?);
    let t2 = cat.compose(&t, &t)?;
    println!("in End(1) = Q[t]/t^2: t o t is zero: {}", t2.is_zero());
    println!("t tensor t = {:?}", cat.tensor(&t, &t).coords.iter().map(ToString::to_string).collect::<Vec<_>>());

    let sup = fixtures::xc2super(Field::Rationals);
    let g = sup.object("g")?;
    let s = sup.symmetry(g, g);
    println!(
        "sign-symmetric C2: s(g,g) = {} id_e, g tensor g = {}",
        s.coords[0],
        sup.object_name(sup.tensor_obj(g, g))
    );

    let raw: CategoryFile = serde_json::from_str(fixtures::BROKEN_CATEGORY).expect("fixture parses");
    match CategoryPresentation::from_file(&raw) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => {
            println!("broken presentation rejected:");
            for v in e.violations() {
                println!("  {v}");
            }
        }
    }
    Ok(())
}
