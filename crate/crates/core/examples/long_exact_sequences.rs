//! Long exact sequences, first for abstract cochain complexes and then in
//! Hochschild cohomology for a split sequence of bimodules.

use std::sync::Arc;

use functor_hh::complex::{cohomology_of_complex, les_of_complex_ses, CochainComplexRep, ComplexSESRep};
use functor_hh::fixtures;
use functor_hh::hochschild::hh_long_exact_sequence;
use functor_hh::linalg::Matrix;
use functor_hh::monoid::{BimoduleMorphism, BimoduleRep};
use functor_hh::scalar::Field;

fn main() -> functor_hh::Result<()> {
    let q = Field::Rationals;
    // Q -> Q, multiplication by 0, then Q -> 0
    let k = CochainComplexRep::new(q, vec![1, 1, 0], vec![Matrix::zeros(q, 1, 1), Matrix::zeros(q, 0, 1)])?;
    let n = CochainComplexRep::new(q, vec![1, 1, 0], vec![Matrix::identity(q, 1), Matrix::zeros(q, 0, 1)])?;
    println!("H(K) = {:?}", cohomology_of_complex(&k).iter().map(|d| d.dim).collect::<Vec<_>>());
    println!("H(N) = {:?}", cohomology_of_complex(&n).iter().map(|d| d.dim).collect::<Vec<_>>());
    let les = les_of_complex_ses(&ComplexSESRep::split(&k, &n), 1)?;
    println!("split sequence of complexes exact: {}", les.is_exact());

    let a = fixtures::dual_numbers(q);
    let m = Arc::new(BimoduleRep::regular(&a));
    let (inj, surj) = BimoduleMorphism::split_pair(&m, &m)?;
    let les = hh_long_exact_sequence(&inj, &surj, 0, 3)?;
    println!("HH(A, A)     {:?}", les.dims_k);
    println!("HH(A, A+A)   {:?}", les.dims_m);
    println!("exact at all {} junctions: {}", les.junctions.len(), les.is_exact());
    Ok(())
}
