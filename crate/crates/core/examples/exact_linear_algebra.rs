//! Row reduction, affine solving and quotients over Q and GF(p).

use functor_hh::linalg::{quotient_space, rref, solve_affine, Matrix, SubspaceBasis};
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    for field in [Field::Rationals, Field::prime(3)?] {
        let m = Matrix::from_ints(field, &[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let d = rref(&m);
        println!("over {field}: rank {}, pivots {:?}, kernel dim {}", d.rank, d.pivots, d.kernel.dim());
        for v in d.kernel.vectors() {
            let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
            println!("  kernel vector [{}]", shown.join(", "));
        }
    }

    let q = Field::Rationals;
    let m = Matrix::from_ints(q, &[[2, 1], [1, 3]]);
    let rhs = vec![q.from_i64(1), q.from_i64(2)];
    let sol = solve_affine(&m, &rhs)?.expect("invertible system");
    println!("2x + y = 1, x + 3y = 2  =>  x = {}, y = {}", sol.particular[0], sol.particular[1]);

    // Q^3 modulo the diagonal
    let diag = SubspaceBasis::spanned_by(q, 3, &[vec![q.one(), q.one(), q.one()]]);
    let quot = quotient_space(3, &diag)?;
    println!("Q^3 / diagonal has dimension {}", quot.dim);
    println!("projection * section is the identity: {}", quot.projection.mul(&quot.section).is_identity());
    Ok(())
}
