//! Classical Hochschild cohomology from structure constants, compared with
//! the general engine on the one-object category.

use functor_hh::oracle::{classical_hh, crosscheck, random_algebra, truncated_polynomial, upper_triangular};
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let q = Field::Rationals;
    let t2 = upper_triangular(q);
    println!("upper triangular 2x2: {:?}", classical_hh(&t2, &t2.coefficients(), 3)?);
    let cubic = truncated_polynomial(q, &[0, 0, 0]);
    println!("Q[x]/x^3: {:?}", classical_hh(&cubic, &cubic.coefficients(), 3)?);

    for seed in 0..5 {
        let alg = random_algebra(q, seed);
        let c = crosscheck(&alg, 3)?;
        println!(
            "seed {seed}: dimension {}, classical {:?}, general {:?}, {}",
            alg.dim,
            c.classical,
            c.general,
            if c.passed() { "match" } else { "MISMATCH" }
        );
    }
    Ok(())
}
