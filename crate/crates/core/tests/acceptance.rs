//! Runs every acceptance criterion and prints one verdict line per criterion.

use std::sync::Arc;
use std::time::Instant;

use functor_hh::day::{separability_witness, transport_separability, DayConvolution};
use functor_hh::fixtures;
use functor_hh::functor::{hom_functors, yoneda_functor, LinearFunctorRep};
use functor_hh::hochschild::{
    baer_sum, bracket_class_is_well_defined, ca_action, cup_product, derivation_spaces, extension_equivalence,
    extension_from_cocycle, hh_compute, hh_long_exact_sequence, lie_bracket_deg1, semidirect_product, CochainRep,
    Hochschild,
};
use functor_hh::linalg::{rref, Matrix};
use functor_hh::monoid::{hom_over_monoid, BimoduleMorphism, BimoduleRep, MonoidMorphism, MonoidRep};
use functor_hh::multilinear::MultilinearFamily;
use functor_hh::oracle::{self, AlgebraRep};
use functor_hh::scalar::{Field, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

const Q: Field = Field::Rationals;

fn gf2() -> Field {
    Field::prime(2).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn regular(a: &Arc<MonoidRep>) -> Hochschild {
    Hochschild::new(a, &BimoduleRep::regular(a)).unwrap()
}

fn random_coords(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect()
}

fn sign(field: Field, k: usize) -> Scalar {
    if k % 2 == 0 {
        field.one()
    } else {
        field.from_i64(-1)
    }
}

fn dims_of(a: &Arc<MonoidRep>, max_n: usize) -> std::result::Result<Vec<usize>, String> {
    Ok(hh_compute(a, &BimoduleRep::regular(a), max_n, None).map_err(err)?.dims_at(0))
}

fn complex_sanity() -> Check {
    let mut monoids = fixtures::all_monoids(Q);
    monoids.extend(fixtures::all_monoids(gf2()));
    for a in monoids {
        let h = regular(&a);
        for x in a.category().objects() {
            let c = h.at(x);
            let complex = c.complex(4).map_err(err)?;
            for n in 0..3 {
                ensure(complex.differential(n + 1).mul(&complex.differential(n)).is_zero(), || {
                    format!("d{}d{n} at {}", n + 1, c.object_name())
                })?;
            }
            c.check_beta_squared(3).map_err(err)?;
        }
    }
    Ok(())
}

fn dual_numbers() -> Check {
    let q = dims_of(&fixtures::dual_numbers(Q), 3)?;
    ensure(q == [2, 1, 1, 1], || format!("over Q: {q:?}"))?;
    let p = dims_of(&fixtures::dual_numbers(gf2()), 3)?;
    ensure(p == [2, 2, 2, 2], || format!("over GF(2): {p:?}"))
}

fn group_algebra() -> Check {
    let q = dims_of(&fixtures::qc2(Q), 3)?;
    ensure(q == [2, 0, 0, 0], || format!("over Q: {q:?}"))?;
    let p = dims_of(&fixtures::qc2(gf2()), 3)?;
    ensure(p == [2, 2, 2, 2], || format!("over GF(2): {p:?}"))
}

fn separability() -> Check {
    let m2 = fixtures::matrix_algebra(Q);
    let w = separability_witness(&m2).map_err(err)?.ok_or("M2 has no witness")?;
    let day = DayConvolution::new(&m2);
    for x in m2.category().objects() {
        ensure(day.day_mu(x).map_err(err)?.mul(&w.t[x]).is_identity(), || "mu t != id".into())?;
    }
    let reg = Arc::new(BimoduleRep::regular(&m2));
    for m in [reg.as_ref().clone(), reg.direct_sum(&reg), BimoduleRep::zero(&m2)] {
        let d = hh_compute(&m2, &m, 3, None).map_err(err)?.dims_at(0);
        ensure(d[1..].iter().all(|&k| k == 0), || format!("M2 dims {d:?}"))?;
    }
    let dual = fixtures::dual_numbers(Q);
    ensure(separability_witness(&dual).map_err(err)?.is_none(), || "dual numbers separable".into())?;
    let d = dims_of(&dual, 1)?;
    ensure(d[1] != 0, || "HH1 of dual numbers vanishes".into())
}

fn sample_functors(cat: &Arc<functor_hh::category::CategoryPresentation>) -> Vec<LinearFunctorRep> {
    let g = cat.object("g").unwrap();
    let ident = |dims: Vec<usize>| {
        let maps = cat.basis().iter().map(|b| Matrix::identity(cat.field(), dims[b.src])).collect();
        LinearFunctorRep::new(cat.clone(), dims, maps).unwrap()
    };
    vec![yoneda_functor(cat, g).unwrap(), ident(vec![2, 1]), ident(vec![1, 3])]
}

fn unit_monoid() -> Check {
    for cat in [fixtures::xc2(Q), fixtures::xc2super(Q)] {
        let cat = Arc::new(cat);
        let i = Arc::new(MonoidRep::unit_monoid(&cat));
        for f in sample_functors(&cat) {
            let m = BimoduleRep::over_unit_monoid(&i, &f).map_err(err)?;
            let report = hh_compute(&i, &m, 2, None).map_err(err)?;
            for x in cat.objects() {
                let d = report.dims_at(x);
                ensure(d[1] == 0 && d[2] == 0, || format!("dims {d:?} at {}", cat.object_name(x)))?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut cases: Vec<(String, AlgebraRep)> = vec![
        ("dual numbers over Q".into(), oracle::truncated_polynomial(Q, &[0, 0])),
        ("dual numbers over GF(2)".into(), oracle::truncated_polynomial(gf2(), &[0, 0])),
        ("Q[C2]".into(), oracle::lower_monoid(&fixtures::qc2(Q)).map_err(err)?),
        ("M2(Q)".into(), oracle::lower_monoid(&fixtures::matrix_algebra(Q)).map_err(err)?),
    ];
    for seed in 0..5 {
        cases.push((format!("random seed {seed}"), oracle::random_algebra(Q, seed)));
    }
    for (name, alg) in cases {
        let c = oracle::crosscheck(&alg, 3).map_err(err)?;
        ensure(c.passed(), || format!("{name}: classical {:?} vs general {:?}", c.classical, c.general))?;
    }
    Ok(())
}

fn yoneda() -> Check {
    for a in fixtures::all_monoids(Q) {
        let cat = a.category();
        let reg = Arc::new(BimoduleRep::regular(&a));
        for m in [reg.as_ref().clone(), reg.direct_sum(&reg)] {
            for x in cat.objects() {
                let f = m.functor();
                let plain = hom_functors(&yoneda_functor(cat, x).map_err(err)?, f).dim();
                ensure(plain == f.dim(x), || format!("Hom(X(x,-), F) at {}", cat.object_name(x)))?;
                let over = hom_over_monoid(&a.regular_left(), &m.left_module(), x).dim();
                ensure(over == m.dim(x), || format!("Hom_A(A, M_x) at {}", cat.object_name(x)))?;
            }
        }
    }
    Ok(())
}

fn extensions() -> Check {
    let a = fixtures::dual_numbers(Q);
    let h = regular(&a);
    let c = h.at(0);
    let zero = extension_from_cocycle(&c, &c.layout(2).zero()).map_err(err)?;
    ensure(*zero.monoid == semidirect_product(c.shifted(), &a).map_err(err)?, || "E_0 is not semidirect".into())?;
    let z2 = rref(&*c.differential(2).map_err(err)?).kernel;
    let basis: Vec<MultilinearFamily> = z2.vectors().iter().map(|v| c.cochain(2, v)).collect();
    let eps = a.unit_element();
    for f in &basis {
        let e = extension_from_cocycle(&c, f).map_err(err)?;
        ensure(e.validate().is_empty(), || format!("{:?}", e.validate()))?;
        let mut unit: Vec<Scalar> = f.block_at(&[0, 0]).apply_pair(eps, eps).into_iter().map(|s| -s).collect();
        unit.extend(eps.iter().cloned());
        ensure(*e.monoid.unit_element() == unit, || "unit of E_f".into())?;
    }
    for k in 0..c.dim(1) {
        let g = c.cochain(1, &functor_hh::linalg::unit_vector(Q, c.dim(1), k));
        let eb = extension_from_cocycle(&c, &c.beta(&g)).map_err(err)?;
        let eq = extension_equivalence(&eb, &zero, Some(&g)).map_err(err)?;
        ensure(eq.is_some(), || format!("coboundary of basis cochain {k}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs: Vec<(MultilinearFamily, MultilinearFamily)> = Vec::new();
    for f in &basis {
        for g in &basis {
            pairs.push((f.clone(), g.clone()));
        }
    }
    for _ in 0..4 {
        let r = |rng: &mut ChaCha8Rng| {
            let coords: Vec<Scalar> = random_coords(rng, Q, z2.dim());
            let v = functor_hh::linalg::zero_vector(Q, c.dim(2));
            let v = z2.vectors().iter().zip(&coords).fold(v, |mut acc, (b, s)| {
                functor_hh::linalg::axpy(&mut acc, s, b);
                acc
            });
            c.cochain(2, &v)
        };
        pairs.push((r(&mut rng), r(&mut rng)));
    }
    for (f, g) in pairs {
        let sum = baer_sum(
            &extension_from_cocycle(&c, &f).map_err(err)?,
            &extension_from_cocycle(&c, &g).map_err(err)?,
        )
        .map_err(err)?;
        let target = extension_from_cocycle(&c, &f.add(&g)).map_err(err)?;
        ensure(extension_equivalence(&sum, &target, None).map_err(err)?.is_some(), || "Baer sum".into())?;
    }
    Ok(())
}

fn random_cochain(h: &Hochschild, rng: &mut ChaCha8Rng, n: usize, x: usize) -> CochainRep {
    let c = h.at(x);
    CochainRep::new(x, c.cochain(n, &random_coords(rng, c.field(), c.dim(n))))
}

fn cup_and_bracket() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for a in [fixtures::dual_numbers(Q), fixtures::graded_c2_super(Q), fixtures::graded_c2(Q)] {
        let h = regular(&a);
        let cat = a.category().clone();
        let one = cat.unit();
        let eps = CochainRep::new(one, h.at(one).cochain(0, a.unit_element()));
        for x in cat.objects() {
            for y in cat.objects() {
                for (i, j) in [(1, 1), (1, 2), (2, 1)] {
                    for _ in 0..3 {
                        let f = random_cochain(&h, &mut rng, i, x);
                        let g = random_cochain(&h, &mut rng, j, y);
                        let fg = cup_product(&h, &f, &g).map_err(err)?;
                        let lhs = h.at(fg.at).beta(&fg.family);
                        let bf = CochainRep::new(x, h.at(x).beta(&f.family));
                        let bg = CochainRep::new(y, h.at(y).beta(&g.family));
                        let rhs = cup_product(&h, &bf, &g)
                            .map_err(err)?
                            .family
                            .add(&cup_product(&h, &f, &bg).map_err(err)?.family.scale(&sign(Q, i)));
                        ensure(lhs == rhs, || format!("Leibniz ({i},{j}) at ({},{})", cat.object_name(x), cat.object_name(y)))?;
                    }
                }
                let f = random_cochain(&h, &mut rng, 2, x);
                ensure(cup_product(&h, &eps, &f).map_err(err)? == f, || "left unit".into())?;
                ensure(cup_product(&h, &f, &eps).map_err(err)? == f, || "right unit".into())?;
            }
        }
        let report = hh_compute(&a, h.bimodule(), 2, None).map_err(err)?;
        let reps: Vec<CochainRep> = report
            .objects
            .iter()
            .flat_map(|o| (0..=2).flat_map(move |n| o.representatives(n).into_iter().map(move |f| CochainRep::new(o.object, f))))
            .collect();
        for f in &reps {
            for g in &reps {
                for k in &reps {
                    if f.degree() + g.degree() + k.degree() > 3 {
                        continue;
                    }
                    let l = cup_product(&h, &cup_product(&h, f, g).map_err(err)?, k).map_err(err)?;
                    let r = cup_product(&h, f, &cup_product(&h, g, k).map_err(err)?).map_err(err)?;
                    ensure(l == r, || "cup associativity".into())?;
                }
            }
        }
        for x in cat.objects() {
            for x2 in cat.objects() {
                let (dx, dx2) = (derivation_spaces(&a, h.bimodule(), x).map_err(err)?, derivation_spaces(&a, h.bimodule(), x2).map_err(err)?);
                if dx.derivations.dim() == 0 || dx2.derivations.dim() == 0 {
                    continue;
                }
                for _ in 0..3 {
                    let comb = |d: &functor_hh::linalg::SubspaceBasis, rng: &mut ChaCha8Rng, at| {
                        let coords = random_coords(rng, Q, d.dim());
                        let v = d.vectors().iter().zip(&coords).fold(functor_hh::linalg::zero_vector(Q, d.ambient()), |mut acc, (b, s)| {
                            functor_hh::linalg::axpy(&mut acc, s, b);
                            acc
                        });
                        CochainRep::new(at, h.at(at).cochain(1, &v))
                    };
                    let d = comb(&dx.derivations, &mut rng, x);
                    let d2 = comb(&dx2.derivations, &mut rng, x2);
                    lie_bracket_deg1(&h, &d, &d2).map_err(err)?;
                    let m = random_coords(&mut rng, Q, h.at(x).dim(0));
                    ensure(bracket_class_is_well_defined(&h, &d, &d2, &m).map_err(err)?, || "bracket well defined".into())?;
                }
            }
        }
        for x in cat.objects() {
            let center = rref(&*h.at(x).differential(0).map_err(err)?).kernel;
            for cv in center.vectors() {
                let elem = h.at(x).cochain(0, cv).blocks[0].column(0);
                for y in cat.objects() {
                    for j in 0..=2 {
                        let k = random_cochain(&h, &mut rng, j, y);
                        let bk = CochainRep::new(y, h.at(y).beta(&k.family));
                        let acted = ca_action(&h, x, &elem, &bk).map_err(err)?;
                        let target = h.at(acted.at);
                        let coords = target.space(j + 1).encode(&acted.family).map_err(err)?;
                        let hj = h.cohomology(j + 1, acted.at).map_err(err)?;
                        ensure(hj.is_coboundary(&coords), || "CA action on coboundaries".into())?;
                    }
                    for j in 0..=2 {
                        for z in h.cohomology(j, y).map_err(err)?.representatives {
                            let g = CochainRep::new(y, h.at(y).cochain(j, &z));
                            let acted = ca_action(&h, x, &elem, &g).map_err(err)?;
                            ensure(h.at(acted.at).is_cocycle(&acted.family), || "CA action on cocycles".into())?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn long_exact_sequence() -> Check {
    let a = fixtures::dual_numbers(Q);
    let m = Arc::new(BimoduleRep::regular(&a));
    let (inj, surj) = BimoduleMorphism::split_pair(&m, &m).map_err(err)?;
    let les = hh_long_exact_sequence(&inj, &surj, 0, 3).map_err(err)?;
    ensure(les.is_exact(), || format!("{:?}", les.junctions.iter().filter(|j| !j.exact).collect::<Vec<_>>()))?;
    ensure((0..=3).all(|n| les.dims_m[n] == les.dims_k[n] + les.dims_n[n]), || "dims not additive".into())?;
    ensure(les.dims_m == [4, 2, 2, 2], || format!("{:?}", les.dims_m))
}

fn transport() -> Check {
    let b = fixtures::qc2(Q);
    let a = fixtures::ground_field(Q);
    let w = separability_witness(&b).map_err(err)?.ok_or("Q[C2] has no witness")?;
    let aug = MonoidMorphism::new(b, a.clone(), vec![Matrix::from_ints(Q, &[[1, 1]])]).map_err(err)?;
    let moved = transport_separability(&aug, &w.xi).map_err(err)?;
    DayConvolution::new(&a).check_witness(&moved.xi).map_err(err)?;
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("complex sanity: beta squared vanishes on every fixture", complex_sanity),
        ("dual numbers: (2,1,1,1) over Q, (2,2,2,2) over GF(2)", dual_numbers),
        ("group algebra of C2: (2,0,0,0) over Q, (2,2,2,2) over GF(2)", group_algebra),
        ("separability: M2 separable and rigid, dual numbers neither", separability),
        ("unit monoid: HH1 and HH2 vanish on XC2 and XC2super", unit_monoid),
        ("oracle equivalence on named and random algebras", oracle_equivalence),
        ("Yoneda dimensions", yoneda),
        ("extension suite", extensions),
        ("cup and bracket suite", cup_and_bracket),
        ("long exact sequence of a split sequence", long_exact_sequence),
        ("transport of separability along the augmentation", transport),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({:.2?})", k + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
