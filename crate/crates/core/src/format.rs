//! JSON document shapes for every input and output file.
//!
//! Scalars are bare integers or `"p/q"` strings. Matrices are row-major with
//! rows indexing target coordinates.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { characteristic: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Rationals => Ok(Field::Rationals),
            FieldSpec::PrimeField { characteristic } => Field::prime(characteristic),
        }
    }

    pub fn from_field(field: Field) -> Self {
        match field {
            Field::Rationals => FieldSpec::Rationals,
            Field::Prime(p) => FieldSpec::PrimeField { characteristic: p },
        }
    }
}

/// Basis-name to coefficient.
pub type CoeffMap = BTreeMap<String, Value>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub field: FieldSpec,
    pub objects: Vec<String>,
    pub unit: String,
    /// `[x, y, x⋄y]` triples.
    pub tensor: Vec<(String, String, String)>,
    /// `"x->y"` to basis names; omitted pairs have an empty basis.
    #[serde(default)]
    pub hom: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub identity: BTreeMap<String, CoeffMap>,
    /// `"(g,f)"` to the coordinates of `g∘f`.
    #[serde(default)]
    pub compose: BTreeMap<String, CoeffMap>,
    /// `"(φ,ψ)"` to the coordinates of `φ⋄ψ`.
    #[serde(default)]
    pub tensor_mor: BTreeMap<String, CoeffMap>,
    /// `"(x,y)"` to the coordinates of `s_{x,y}` in `hom(x⋄y, y⋄x)`.
    #[serde(default)]
    pub symmetry: BTreeMap<String, CoeffMap>,
}

/// Values and basis-morphism matrices of a linear functor.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct FunctorBody {
    /// Path of the category file, relative to this file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    pub values: BTreeMap<String, usize>,
    /// Basis morphism name to matrix; omitted identities are identity matrices.
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<Value>>>,
}

/// `[i][j][k]`: coefficient of basis `k` of the target in `e_i × e_j`.
pub type ProductTable = Vec<Vec<Vec<Value>>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidFile {
    #[serde(flatten)]
    pub functor: FunctorBody,
    /// `"(x,y)"` to the table of `A(x) × A(y) → A(x⋄y)`.
    #[serde(default)]
    pub product: BTreeMap<String, ProductTable>,
    pub unit_element: Vec<Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleFile {
    #[serde(flatten)]
    pub functor: FunctorBody,
    /// `"(x,y)"` to the table of `A(x) × M(y) → M(x⋄y)`.
    #[serde(default)]
    pub left: BTreeMap<String, ProductTable>,
    /// `"(y,x)"` to the table of `M(y) × A(x) → M(y⋄x)`.
    #[serde(default)]
    pub right: BTreeMap<String, ProductTable>,
}

/// A cochain given by its full multilinear family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleFile {
    pub degree: usize,
    pub at: String,
    /// `"(x1,...,xn)"` to the matrix `A(x1)⊗…⊗A(xn) → M(x1⋄…⋄xn⋄at)`;
    /// degree 0 uses the key `"()"` with a single column.
    pub components: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dimension: usize,
    /// `[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    pub structure: ProductTable,
    pub unit: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<AlgebraBimoduleFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraBimoduleFile {
    pub dimension: usize,
    /// `[i][p][q]`: coefficient of `m_q` in `e_i m_p`.
    pub left: ProductTable,
    /// `[p][i][q]`: coefficient of `m_q` in `m_p e_i`.
    pub right: ProductTable,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Splits `"(a,b,c)"` into its names; `"()"` gives an empty list.
pub fn parse_tuple(key: &str) -> Result<Vec<String>> {
    let inner = key
        .trim()
        .strip_prefix('(')
        .and_then(|k| k.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a parenthesized tuple, found {key:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|s| s.trim().to_string()).collect())
}

pub fn parse_pair(key: &str) -> Result<(String, String)> {
    let parts = parse_tuple(key)?;
    match <[String; 2]>::try_from(parts) {
        Ok([a, b]) => Ok((a, b)),
        Err(_) => Err(Error::Parse(format!("expected a pair, found {key:?}"))),
    }
}

pub fn tuple_key<S: AsRef<str>>(names: &[S]) -> String {
    let inner: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    format!("({})", inner.join(","))
}

pub fn parse_hom_key(key: &str) -> Result<(String, String)> {
    key.split_once("->")
        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        .ok_or_else(|| Error::Parse(format!("expected \"x->y\", found {key:?}")))
}

pub fn scalars(field: Field, values: &[Value]) -> Result<Vec<Scalar>> {
    values.iter().map(|v| field.from_json(v)).collect()
}

pub fn matrix_from_json(
    field: Field,
    rows: usize,
    cols: usize,
    values: &[Vec<Value>],
    what: &str,
) -> Result<Matrix> {
    // an empty list stands for any matrix with zero rows
    if rows == 0 && values.is_empty() {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    if values.len() != rows || values.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "{what}: expected a {rows}x{cols} matrix"
        )));
    }
    let data = values
        .iter()
        .map(|r| scalars(field, r))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Matrix::from_data(field, rows, cols, data))
}

pub fn matrix_to_json(m: &Matrix) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_json).collect())
        .collect()
}

pub fn vector_to_json(v: &[Scalar]) -> Vec<Value> {
    v.iter().map(Scalar::to_json).collect()
}

/// Reads an `[i][j][k]` table into the matrix `(d1*d2) → d3` whose column
/// `i*d2 + j` is the product of `e_i` and `e_j`.
pub fn table_from_json(
    field: Field,
    d1: usize,
    d2: usize,
    d3: usize,
    table: &ProductTable,
    what: &str,
) -> Result<Matrix> {
    let bad = || Error::DimensionMismatch(format!("{what}: expected a {d1}x{d2}x{d3} table"));
    // an empty table stands for any product involving a zero space
    if table.is_empty() && d1 * d2 * d3 == 0 {
        return Ok(Matrix::zeros(field, d3, d1 * d2));
    }
    if table.len() != d1 {
        return Err(bad());
    }
    let mut m = Matrix::zeros(field, d3, d1 * d2);
    for (i, plane) in table.iter().enumerate() {
        if plane.len() != d2 {
            return Err(bad());
        }
        for (j, coeffs) in plane.iter().enumerate() {
            if coeffs.len() != d3 {
                return Err(bad());
            }
            for (k, v) in coeffs.iter().enumerate() {
                m.set(k, i * d2 + j, field.from_json(v)?);
            }
        }
    }
    Ok(m)
}

pub fn table_to_json(m: &Matrix, d1: usize, d2: usize) -> ProductTable {
    (0..d1)
        .map(|i| {
            (0..d2)
                .map(|j| (0..m.rows()).map(|k| m.get(k, i * d2 + j).to_json()).collect())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_keys_round_trip() {
        assert_eq!(parse_tuple("(g, e)").unwrap(), vec!["g", "e"]);
        assert!(parse_tuple("()").unwrap().is_empty());
        assert_eq!(tuple_key(&["a", "b"]), "(a,b)");
        assert!(parse_pair("(a)").is_err());
        assert!(parse_tuple("a,b").is_err());
        assert_eq!(parse_hom_key("e->g").unwrap(), ("e".into(), "g".into()));
    }

    #[test]
    fn field_spec_json() {
        let f: FieldSpec =
            serde_json::from_str(r#"{"kind":"prime-field","characteristic":2}"#).unwrap();
        assert_eq!(f.to_field().unwrap(), Field::Prime(2));
        let q: FieldSpec = serde_json::from_str(r#"{"kind":"rationals"}"#).unwrap();
        assert_eq!(q.to_field().unwrap(), Field::Rationals);
    }
}
