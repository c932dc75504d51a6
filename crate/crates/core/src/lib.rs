//! Hochschild cohomology for monoids in categories of linear functors.
//!
//! The base is a finitely presented strict symmetric monoidal category `X`
//! enriched in vector spaces over `Q` or `GF(p)`. Linear functors `X → Vect`
//! form a monoidal category under Day convolution; monoids there generalize
//! algebras and Green functors. This crate computes their Hochschild
//! cohomology objectwise, together with commutants, derivations, cup
//! products, the degree-one bracket, separability witnesses and square-zero
//! extensions, all in exact arithmetic.
//!
//! ```
//! use functor_hh::{fixtures, hochschild, scalar::Field};
//!
//! let a = fixtures::dual_numbers(Field::Rationals);
//! let m = functor_hh::monoid::BimoduleRep::regular(&a);
//! let report = hochschild::hh_compute(&a, &m, 3, None).unwrap();
//! assert_eq!(report.dims_at(0), vec![2, 1, 1, 1]);
//! ```

pub mod category;
pub mod cli;
pub mod complex;
pub mod day;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod functor;
pub mod hochschild;
pub mod linalg;
pub mod monoid;
pub mod multilinear;
pub mod oracle;
pub mod scalar;

pub use error::{Error, Result, Violation};
