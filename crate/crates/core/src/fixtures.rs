//! Small presentations used throughout the tests and examples.
//!
//! The JSON sources live in the crate's `fixtures/` directory and are
//! compiled in, so the files and these constructors cannot drift apart.

use std::sync::Arc;

use crate::category::CategoryPresentation;
use crate::format::{CategoryFile, FieldSpec, MonoidFile};
use crate::monoid::MonoidRep;
use crate::scalar::Field;

pub const X1: &str = include_str!("../fixtures/x1.json");
pub const X1_EPS: &str = include_str!("../fixtures/x1_eps.json");
pub const XC2: &str = include_str!("../fixtures/xc2.json");
pub const XC2_SUPER: &str = include_str!("../fixtures/xc2_super.json");
pub const BROKEN_CATEGORY: &str = include_str!("../fixtures/broken_category.json");
pub const DUAL: &str = include_str!("../fixtures/dual.json");
pub const QC2: &str = include_str!("../fixtures/qc2.json");
pub const M2: &str = include_str!("../fixtures/m2.json");
pub const GROUND_FIELD: &str = include_str!("../fixtures/ground_field.json");
pub const GRADED_C2: &str = include_str!("../fixtures/graded_c2.json");
pub const GRADED_C2_SUPER: &str = include_str!("../fixtures/graded_c2_super.json");

/// Every fixture file with its name, for tests that read them from disk.
pub const FILES: &[(&str, &str)] = &[
    ("x1.json", X1),
    ("x1_eps.json", X1_EPS),
    ("xc2.json", XC2),
    ("xc2_super.json", XC2_SUPER),
    ("broken_category.json", BROKEN_CATEGORY),
    ("dual.json", DUAL),
    ("qc2.json", QC2),
    ("m2.json", M2),
    ("ground_field.json", GROUND_FIELD),
    ("graded_c2.json", GRADED_C2),
    ("graded_c2_super.json", GRADED_C2_SUPER),
];

fn category(text: &str, field: Field) -> CategoryPresentation {
    let mut raw: CategoryFile = serde_json::from_str(text).expect("fixture parses");
    raw.field = FieldSpec::from_field(field);
    CategoryPresentation::from_file(&raw).expect("fixture validates")
}

/// One object, `End(1)` spanned by the identity.
pub fn x1(field: Field) -> CategoryPresentation {
    category(X1, field)
}

/// One object with `End(1) = k[t]/t²` and `⋄` equal to composition.
pub fn x1_eps(field: Field) -> CategoryPresentation {
    category(X1_EPS, field)
}

/// Objects `{e, g}` with `g⋄g = e`, identity morphisms only, trivial symmetry.
pub fn xc2(field: Field) -> CategoryPresentation {
    category(XC2, field)
}

/// As [`xc2`] but with `s_{g,g} = −id_e`.
pub fn xc2super(field: Field) -> CategoryPresentation {
    category(XC2_SUPER, field)
}

fn category_named(name: &str, field: Field) -> CategoryPresentation {
    match name {
        "x1.json" => x1(field),
        "x1_eps.json" => x1_eps(field),
        "xc2.json" => xc2(field),
        "xc2_super.json" => xc2super(field),
        other => panic!("unknown fixture category {other}"),
    }
}

fn monoid(text: &str, field: Field) -> Arc<MonoidRep> {
    let raw: MonoidFile = serde_json::from_str(text).expect("fixture parses");
    let cat = category_named(raw.functor.category.as_deref().expect("category path"), field);
    Arc::new(MonoidRep::from_file(Arc::new(cat), &raw).expect("fixture validates"))
}

/// `k[x]/(x²)` with basis `(1, x)`.
pub fn dual_numbers(field: Field) -> Arc<MonoidRep> {
    monoid(DUAL, field)
}

/// The group algebra of `C₂` with basis `(1, g)`.
pub fn qc2(field: Field) -> Arc<MonoidRep> {
    monoid(QC2, field)
}

/// 2×2 matrices with basis `(e11, e12, e21, e22)`.
pub fn matrix_algebra(field: Field) -> Arc<MonoidRep> {
    monoid(M2, field)
}

/// The field itself on one object.
pub fn ground_field(field: Field) -> Arc<MonoidRep> {
    monoid(GROUND_FIELD, field)
}

/// `A(e) = k·1`, `A(g) = k·u`, `u × u = 1`, over the trivially symmetric
/// two-object category.
pub fn graded_c2(field: Field) -> Arc<MonoidRep> {
    monoid(GRADED_C2, field)
}

/// The same tables over the sign-symmetric category.
pub fn graded_c2_super(field: Field) -> Arc<MonoidRep> {
    monoid(GRADED_C2_SUPER, field)
}

pub fn unit_monoid(cat: CategoryPresentation) -> Arc<MonoidRep> {
    Arc::new(MonoidRep::unit_monoid(&Arc::new(cat)))
}

/// The named monoid fixtures, including unit monoids on every category.
pub fn all_monoids(field: Field) -> Vec<Arc<MonoidRep>> {
    let mut out = vec![
        dual_numbers(field),
        qc2(field),
        graded_c2(field),
        graded_c2_super(field),
        ground_field(field),
        unit_monoid(x1(field)),
        unit_monoid(x1_eps(field)),
        unit_monoid(xc2(field)),
        unit_monoid(xc2super(field)),
    ];
    if field == Field::Rationals {
        out.push(matrix_algebra(field));
    }
    out
}
