use std::sync::Arc;

use functor_hh::category::MorExpr;
use functor_hh::day::{separability_witness, DayConvolution};
use functor_hh::fixtures;
use functor_hh::hochschild::{commutant, derivation_spaces, hh_compute, Hochschild};
use functor_hh::linalg::{quotient_space, rank, rref, solve_affine, Matrix, SubspaceBasis};
use functor_hh::monoid::{BimoduleRep, MonoidRep};
use functor_hh::oracle;
use functor_hh::scalar::{Field, Scalar};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

fn matrix_strategy() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (field_strategy(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| {
        (Just(f), Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c))
    })
}

fn to_matrix(f: Field, r: usize, c: usize, data: &[i64]) -> Matrix {
    Matrix::from_data(f, r, c, data.iter().map(|&x| f.from_i64(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity((f, r, c, data) in matrix_strategy()) {
        let m = to_matrix(f, r, c, &data);
        let d = rref(&m);
        prop_assert_eq!(d.rank + d.kernel.dim(), c);
        prop_assert_eq!(d.image.dim(), d.rank);
        for v in d.kernel.vectors() {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(rank(&m.transpose()), d.rank);
    }

    #[test]
    fn affine_solutions_solve((f, r, c, data) in matrix_strategy(), x in prop::collection::vec(-3i64..=3, 6)) {
        let m = to_matrix(f, r, c, &data);
        let x: Vec<Scalar> = x[..c].iter().map(|&v| f.from_i64(v)).collect();
        let rhs = m.mul_vec(&x);
        let sol = solve_affine(&m, &rhs).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol.particular), rhs);
        prop_assert_eq!(sol.kernel.dim(), c - rank(&m));
    }

    #[test]
    fn quotients_split((f, r, c, data) in matrix_strategy()) {
        let m = to_matrix(f, r, c, &data);
        let rel = SubspaceBasis::spanned_by(f, c, &m.to_rows());
        let q = quotient_space(c, &rel).unwrap();
        prop_assert_eq!(q.dim, c - rel.dim());
        prop_assert!(q.projection.mul(&q.section).is_identity());
        for v in rel.vectors() {
            prop_assert!(q.projection.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rational_arithmetic_survives_overflow(a in any::<i64>(), b in any::<i64>(), c in 1i64..i64::MAX) {
        let q = Field::Rationals;
        let (a, b, c) = (q.from_i64(a), q.from_i64(b), q.ratio(1, c).unwrap());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn prime_field_inverses(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 101]), a in any::<i64>()) {
        let f = Field::prime(p).unwrap();
        let x = f.from_i64(a);
        if x.is_zero() {
            prop_assert!(x.inv().is_none());
        } else {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_algebras_agree_with_the_oracle(seed in 0u64..1000) {
        let alg = oracle::random_algebra(Field::Rationals, seed);
        let c = oracle::crosscheck(&alg, 2).unwrap();
        prop_assert!(c.passed(), "{:?}", c);
    }

    #[test]
    fn degree_zero_and_one_descriptions(seed in 0u64..1000, p in prop::sample::select(vec![0u64, 2, 3])) {
        let field = if p == 0 { Field::Rationals } else { Field::prime(p).unwrap() };
        let (a, m) = oracle::lift_algebra(&oracle::random_algebra(field, seed)).unwrap();
        let report = hh_compute(&a, &m, 1, None).unwrap();
        let h0 = &report.objects[0].degrees[0];
        prop_assert!(commutant(&a, &m, 0).unwrap().same_span(&h0.cocycles));
        let d = derivation_spaces(&a, &m, 0).unwrap();
        prop_assert_eq!(d.hh1(), report.dims_at(0)[1]);
    }

    #[test]
    fn beta_squared_on_random_cochains(seed in 0u64..1000, coords in prop::collection::vec(-3i64..=3, 27)) {
        let (a, m) = oracle::lift_algebra(&oracle::random_algebra(Field::Rationals, seed)).unwrap();
        let h = Hochschild::new(&a, &m).unwrap();
        let c = h.at(0);
        for n in 0..=2 {
            let v: Vec<Scalar> = (0..c.dim(n)).map(|k| Field::Rationals.from_i64(coords[k % coords.len()])).collect();
            prop_assert!(c.beta(&c.beta(&c.cochain(n, &v))).is_zero());
        }
    }

    #[test]
    fn multiplication_of_day_values_is_onto(seed in 0u64..1000) {
        let (a, _) = oracle::lift_algebra(&oracle::random_algebra(Field::Rationals, seed)).unwrap();
        let day = DayConvolution::new(&a);
        prop_assert_eq!(rank(&day.day_mu(0).unwrap()), a.dim(0));
    }

    #[test]
    fn separable_means_rigid(seed in 0u64..1000) {
        let (a, m) = oracle::lift_algebra(&oracle::random_algebra(Field::Rationals, seed)).unwrap();
        if separability_witness(&a).unwrap().is_some() {
            let dims = hh_compute(&a, &m, 2, None).unwrap().dims_at(0);
            prop_assert!(dims[1..].iter().all(|&d| d == 0), "{:?}", dims);
        }
    }

    #[test]
    fn translation_is_functorial(a0 in -3i64..=3, a1 in -3i64..=3, b0 in -3i64..=3, b1 in -3i64..=3) {
        let q = Field::Rationals;
        let cat = Arc::new(fixtures::x1_eps(q));
        let i = Arc::new(MonoidRep::unit_monoid(&cat));
        let h = Hochschild::new(&i, &BimoduleRep::regular(&i)).unwrap();
        let mor = |s: i64, t: i64| MorExpr { src: 0, tgt: 0, coords: vec![q.from_i64(s), q.from_i64(t)] };
        let (phi, psi) = (mor(a0, a1), mor(b0, b1));
        let both = cat.compose(&phi, &psi).unwrap();
        for n in 0..=2 {
            let lhs = h.hh_translate(n, &phi).unwrap().mul(&h.hh_translate(n, &psi).unwrap());
            prop_assert_eq!(lhs, h.hh_translate(n, &both).unwrap());
        }
    }
}
