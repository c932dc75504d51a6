use std::fmt;

use thiserror::Error;

/// One failed axiom, with the basis elements or indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            axiom: axiom.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed at {}", self.axiom, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed: {}", join(.0))]
    Validation(Vec<Violation>),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("incompatible arguments: {0}")]
    Incompatible(String),
    #[error("beta squared is nonzero in degree {degree} at object {object}")]
    BetaSquared { degree: usize, object: String },
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub fn single(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Validation(vec![Violation::new(axiom, witness)])
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Error::Validation(v) => v,
            _ => &[],
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
