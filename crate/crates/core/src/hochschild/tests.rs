use std::sync::Arc;

use super::*;
use crate::fixtures;

fn regular(a: &Arc<MonoidRep>) -> Hochschild {
    Hochschild::new(a, &BimoduleRep::regular(a)).unwrap()
}

fn q(n: i64) -> Scalar {
    Field::Rationals.from_i64(n)
}

#[test]
fn dual_numbers_over_q() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let r = hh_compute(&a, &BimoduleRep::regular(&a), 3, None).unwrap();
    assert_eq!(r.dims_at(0), vec![2, 1, 1, 1]);
    assert_eq!(r.at(0).unwrap().cochain_dims, vec![2, 4, 8, 16]);
}

#[test]
fn dual_numbers_over_gf2() {
    let a = fixtures::dual_numbers(Field::Prime(2));
    let r = hh_compute(&a, &BimoduleRep::regular(&a), 3, None).unwrap();
    assert_eq!(r.dims_at(0), vec![2, 2, 2, 2]);
}

#[test]
fn group_algebra_of_c2() {
    let a = fixtures::qc2(Field::Rationals);
    assert_eq!(hh_compute(&a, &BimoduleRep::regular(&a), 3, None).unwrap().dims_at(0), vec![2, 0, 0, 0]);
    let a = fixtures::qc2(Field::Prime(2));
    assert_eq!(hh_compute(&a, &BimoduleRep::regular(&a), 3, None).unwrap().dims_at(0), vec![2, 2, 2, 2]);
}

#[test]
fn matrix_algebra_is_rigid() {
    let a = fixtures::matrix_algebra(Field::Rationals);
    assert_eq!(hh_compute(&a, &BimoduleRep::regular(&a), 3, None).unwrap().dims_at(0), vec![1, 0, 0, 0]);
}

#[test]
fn faces_sum_to_the_differential() {
    for a in [fixtures::dual_numbers(Field::Rationals), fixtures::graded_c2_super(Field::Rationals)] {
        let h = regular(&a);
        for x in a.category().objects() {
            let c = h.at(x);
            for n in 0..3 {
                let mut sum = Matrix::zeros(c.field(), c.dim(n + 1), c.dim(n));
                for i in 1..=n + 2 {
                    let f = c.face_map_dual(n, i).unwrap();
                    sum = sum.add(&f.scale(&q(sign(i + 1))));
                }
                assert_eq!(sum, *c.differential(n).unwrap(), "degree {n} at {x}");
            }
            assert!(c.face_map_dual(1, 4).is_err());
            assert!(c.face_map_dual(1, 0).is_err());
        }
    }
}

#[test]
fn presimplicial_identities() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let c = h.at(0);
    for n in 0..2 {
        for j in 2..=n + 3 {
            for i in 1..j {
                let l = c.face_map_dual(n + 1, j).unwrap().mul(&c.face_map_dual(n, i).unwrap());
                let r = c.face_map_dual(n + 1, i).unwrap().mul(&c.face_map_dual(n, j - 1).unwrap());
                assert_eq!(l, r, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn inner_face_multiplies_arguments() {
    // f(a, b) = coefficient of x in a·b, so (f∘d₂)(x, 1, x) = f(x, x) = 0 and
    // (f∘d₂)(1, x, 1) = f(x, 1) = 1
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let c = h.at(0);
    let layout = c.layout(2);
    let mut f = layout.zero();
    f.blocks[0] = a.product(0, 0).submatrix(1..2, 0..4).vstack(&Matrix::zeros(Field::Rationals, 1, 4));
    let g = c.face(2, &f).unwrap();
    let b = &g.blocks[0];
    assert_eq!(*b.get(0, radix(&[1, 0, 1], &[2, 2, 2])), q(0));
    assert_eq!(*b.get(0, radix(&[0, 1, 0], &[2, 2, 2])), q(1));
    assert_eq!(*b.get(0, radix(&[1, 1, 0], &[2, 2, 2])), q(0));
}

#[test]
fn graded_monoid_degree_one_space() {
    let a = fixtures::graded_c2(Field::Rationals);
    assert_eq!(regular(&a).at(0).dim(1), 2);
}

#[test]
fn super_sign_in_degree_zero() {
    let a = fixtures::graded_c2_super(Field::Rationals);
    let h = regular(&a);
    let g = a.category().object("g").unwrap();
    let d = h.at(g).differential(0).unwrap();
    // at y = g: u·m − s_{g,g}(m·u) = 2m; at y = e: m − m = 0
    let beta = h.at(g).beta(&h.at(g).cochain(0, &[q(1)]));
    assert_eq!(*beta.block_at(&[g]).get(0, 0), q(2));
    assert!(beta.block_at(&[0]).is_zero());
    assert_eq!(crate::linalg::rank(&d), 1);
    assert_eq!(commutant(&a, &BimoduleRep::regular(&a), g).unwrap().dim(), 0);
    assert_eq!(commutant(&a, &BimoduleRep::regular(&a), 0).unwrap().dim(), 1);
}

#[test]
fn commutants() {
    let a = fixtures::matrix_algebra(Field::Rationals);
    assert_eq!(commutant(&a, &BimoduleRep::regular(&a), 0).unwrap().dim(), 1);
    let a = fixtures::dual_numbers(Field::Rationals);
    assert_eq!(commutant(&a, &BimoduleRep::regular(&a), 0).unwrap().dim(), 2);
}

#[test]
fn commutant_is_hh0_everywhere() {
    for a in fixtures::all_monoids(Field::Rationals) {
        let m = BimoduleRep::regular(&a);
        let r = hh_compute(&a, &m, 1, None).unwrap();
        for x in a.category().objects() {
            let cm = commutant(&a, &m, x).unwrap();
            assert!(cm.same_span(&r.at(x).unwrap().degrees[0].cocycles));
            let der = derivation_spaces(&a, &m, x).unwrap();
            assert_eq!(der.hh1(), r.dims_at(x)[1]);
        }
    }
}

#[test]
fn derivations_of_dual_numbers() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let d = derivation_spaces(&a, &BimoduleRep::regular(&a), 0).unwrap();
    assert_eq!((d.derivations.dim(), d.inner.dim(), d.hh1()), (1, 0, 1));
}

#[test]
fn commutant_products_stay_central() {
    for a in fixtures::all_monoids(Field::Rationals) {
        let m = BimoduleRep::regular(&a);
        let cat = a.category();
        for x in cat.objects() {
            for y in cat.objects() {
                let cx = commutant(&a, &m, x).unwrap();
                let cy = commutant(&a, &m, y).unwrap();
                let cxy = commutant(&a, &m, cat.tensor_obj(x, y)).unwrap();
                for u in cx.vectors() {
                    for v in cy.vectors() {
                        assert!(cxy.contains(&a.multiply(x, u, y, v)));
                    }
                }
            }
        }
    }
}

#[test]
fn translate_along_identity_and_round_trip() {
    let a = fixtures::graded_c2(Field::Rationals);
    let h = regular(&a);
    let cat = a.category();
    let g = cat.object("g").unwrap();
    for n in 0..2 {
        for x in cat.objects() {
            let t = h.hh_translate(n, &cat.identity(x)).unwrap();
            assert!(t.is_identity());
        }
        let id = cat.identity(g);
        let twice = h.hh_translate(n, &id).unwrap().mul(&h.hh_translate(n, &id).unwrap());
        assert!(twice.is_identity());
    }
}

#[test]
fn unit_is_a_cup_unit_and_leibniz_holds() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let c = h.at(0);
    let eps = CochainRep::new(0, c.cochain(0, a.unit_element()));
    let f1 = CochainRep::new(0, c.cochain(1, &[q(1), q(2), q(-1), q(3)]));
    let f2: Vec<Scalar> = (0..8).map(|i| q(i * i - 3)).collect();
    let f2 = CochainRep::new(0, c.cochain(2, &f2));
    assert_eq!(cup_product(&h, &eps, &f1).unwrap(), f1);
    assert_eq!(cup_product(&h, &f1, &eps).unwrap(), f1);
    for (f, g) in [(&f1, &f1), (&f1, &f2), (&f2, &f1)] {
        let lhs = c.beta(&cup_product(&h, f, g).unwrap().family);
        let bf = CochainRep::new(0, c.beta(&f.family));
        let bg = CochainRep::new(0, c.beta(&g.family));
        let s = q(sign(f.degree()));
        let rhs = cup_product(&h, &bf, g).unwrap().family.add(&cup_product(&h, f, &bg).unwrap().family.scale(&s));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cup_square_in_characteristic_two() {
    let a = fixtures::dual_numbers(Field::Prime(2));
    let h = regular(&a);
    let u = h.cohomology(1, 0).unwrap();
    let h2 = h.cohomology(2, 0).unwrap();
    // some HH¹ class squares to a nonzero class
    let found = u.representatives.iter().any(|z| {
        let f = CochainRep::new(0, h.at(0).cochain(1, z));
        let sq = cup_product(&h, &f, &f).unwrap();
        let coords = h.at(0).space(2).encode(&sq.family).unwrap();
        h2.class_of(&coords).iter().any(|s| !s.is_zero())
    });
    assert!(found);
}

#[test]
fn bracket_of_a_derivation_with_itself() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let der = derivation_spaces(&a, h.bimodule(), 0).unwrap();
    let d = CochainRep::new(0, h.at(0).cochain(1, &der.derivations.vectors()[0]));
    assert!(lie_bracket_deg1(&h, &d, &d).unwrap().family.is_zero());
    assert!(bracket_class_is_well_defined(&h, &d, &d, &[q(3), q(-2)]).unwrap());
}

#[test]
fn extensions_of_dual_numbers() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let c = h.at(0);
    let zero = extension_from_cocycle(&c, &c.layout(2).zero()).unwrap();
    let semi = semidirect_product(c.shifted(), &a).unwrap();
    assert_eq!(*zero.monoid, semi);
    let h2 = h.cohomology(2, 0).unwrap();
    let gen = c.cochain(2, &h2.representatives[0]);
    let e = extension_from_cocycle(&c, &gen).unwrap();
    assert_eq!(e.monoid.dim(0), 4);
    assert!(extension_equivalence(&e, &zero, None).unwrap().is_none());
    // a coboundary is equivalent to the trivial extension through its primitive
    let g = c.cochain(1, &[q(1), q(0), q(2), q(-1)]);
    let eb = extension_from_cocycle(&c, &c.beta(&g)).unwrap();
    let eq = extension_equivalence(&eb, &zero, Some(&g)).unwrap().unwrap();
    assert_eq!(eq.g, g);
    let sum = baer_sum(&e, &eb).unwrap();
    assert!(extension_equivalence(&sum, &e, None).unwrap().is_some());
    let inv = extension_from_cocycle(&c, &gen.scale(&q(-1))).unwrap();
    let cancel = baer_sum(&e, &inv).unwrap();
    assert!(extension_equivalence(&cancel, &zero, None).unwrap().is_some());
}

#[test]
fn non_cocycles_are_rejected() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = regular(&a);
    let c = h.at(0);
    let space = c.space(2);
    let d2 = c.differential(2).unwrap();
    let k = (0..space.dim()).find(|&k| !d2.column(k).iter().all(|s| s.is_zero())).unwrap();
    let err = extension_from_cocycle(&c, &space.basis_family(k)).unwrap_err();
    assert!(matches!(err, Error::NotCocycle(_)));
}

#[test]
fn cochain_files_round_trip() {
    let a = fixtures::graded_c2_super(Field::Rationals);
    let h = regular(&a);
    let c = h.at(1);
    let f = c.cochain(2, &vec![q(5); c.dim(2)]);
    let file = c.cochain_to_file(&f);
    assert_eq!(c.cochain_from_file(&file).unwrap(), f);
}

#[test]
fn split_sequence_of_bimodules() {
    let a = fixtures::dual_numbers(Field::Rationals);
    let m = Arc::new(BimoduleRep::regular(&a));
    let sum = Arc::new(m.direct_sum(&m));
    let field = Field::Rationals;
    let inj = BimoduleMorphism::new(m.clone(), sum.clone(), vec![Matrix::identity(field, 2).vstack(&Matrix::zeros(field, 2, 2))]).unwrap();
    let surj = BimoduleMorphism::new(sum.clone(), m.clone(), vec![Matrix::zeros(field, 2, 2).hstack(&Matrix::identity(field, 2))]).unwrap();
    let les = hh_long_exact_sequence(&inj, &surj, 0, 3).unwrap();
    assert!(les.is_exact());
    assert_eq!(les.dims_m, vec![4, 2, 2, 2]);
}
