//! Exact scalars over the rationals or a prime field.
//!
//! Rationals keep an `i64` fast path and promote to arbitrary precision on
//! overflow, so every computation stays exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `GF(p)`; `p` is prime and below `2^32`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::Parse(format!("characteristic {p} is too large")));
        }
        if !is_prime(p) {
            return Err(Error::Parse(format!("characteristic {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Q(Rational::Small(n, 1))),
            Field::Prime(p) => Scalar(Repr::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// Builds `num / den`; fails when `den` is zero in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Parse(format!("denominator {den} vanishes in {self}")))?;
        Ok(&self.from_i64(num) * &inv)
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Q(Rational::from_big(BigRational::from_integer(
                n.clone(),
            )))),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar(Repr::Fp {
                    v: r.to_u64().expect("residue fits"),
                    p,
                })
            }
        }
    }

    /// Parses `"p/q"`, `"p"` or `"-p"`.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        let d = self.from_bigint(&den);
        let inv = d.inv().ok_or_else(bad)?;
        Ok(&self.from_bigint(&num) * &inv)
    }

    /// The scalar that `value` encodes, for every field: numbers must be
    /// integers, strings use [`Field::parse`].
    pub fn from_json(self, value: &serde_json::Value) -> Result<Scalar> {
        match value {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(self.from_i64(i))
                } else if let Some(u) = n.as_u64() {
                    Ok(self.from_bigint(&BigInt::from(u)))
                } else {
                    Err(Error::Parse(format!(
                        "scalar {n} is not an integer; write rationals as \"p/q\""
                    )))
                }
            }
            serde_json::Value::String(s) => self.parse(s),
            other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A rational in lowest terms with positive denominator. `Small` is used
/// whenever both parts fit in `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational::Small(s, 1);
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Rational::from_i128(s, z),
                        None => Rational::from_big(self.to_big() + other.to_big()),
                    },
                    _ => Rational::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational::Small(p, 1);
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(c), b.checked_mul(d)) {
                    (Some(n), Some(m)) => Rational::from_i128(n, m),
                    _ => Rational::from_big(self.to_big() * other.to_big()),
                }
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Rational::from_big(-self.to_big()),
            },
            Rational::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        })
    }

    fn cmp_sign(&self) -> Ordering {
        match self {
            Rational::Small(n, _) => n.cmp(&0),
            Rational::Big(b) => {
                if b.is_negative() {
                    Ordering::Less
                } else if b.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Q(Rational),
    Fp { v: u64, p: u64 },
}

/// An element of a [`Field`]. Mixing elements of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Q(_) => Field::Rationals,
            Repr::Fp { p, .. } => Field::Prime(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => r.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => matches!(r, Rational::Small(1, 1)),
            Repr::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Q(r) => r.inv().map(|r| Scalar(Repr::Q(r))),
            Repr::Fp { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar(Repr::Fp {
                        v: pow_mod(*v, p - 2, *p),
                        p: *p,
                    }))
                }
            }
        }
    }

    /// Sign of a rational; prime-field elements report `Greater` unless zero.
    pub fn sign(&self) -> Ordering {
        match &self.0 {
            Repr::Q(r) => r.cmp_sign(),
            Repr::Fp { v, .. } => v.cmp(&0),
        }
    }

    /// JSON encoding: integers as numbers when they fit, other rationals as
    /// `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        match &self.0 {
            Repr::Q(Rational::Small(n, 1)) => serde_json::Value::from(*n),
            Repr::Q(r) => serde_json::Value::String(r.to_string()),
            Repr::Fp { v, .. } => serde_json::Value::from(*v),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(r) => r.fmt(f),
            Repr::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch() -> ! {
    panic!("scalars from different fields combined")
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a.add(b))),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => Scalar(Repr::Fp {
                v: (a + b) % p,
                p: *p,
            }),
            _ => mismatch(),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a.mul(b))),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => Scalar(Repr::Fp {
                v: a * b % p,
                p: *p,
            }),
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(a) => Scalar(Repr::Q(a.neg())),
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: (p - v) % p,
                p: *p,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = Field::Rationals;
        let a = q.ratio(1, 2).unwrap();
        let b = q.ratio(1, 3).unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
        assert_eq!((&a - &a), q.zero());
        assert_eq!((&a * &q.from_i64(2)), q.one());
        assert_eq!(q.parse("-4/6").unwrap().to_string(), "-2/3");
    }

    #[test]
    fn overflow_promotes_to_big() {
        let q = Field::Rationals;
        let big = q.from_i64(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.to_string(), "18446744073709551614");
        let back = &sum - &big;
        assert_eq!(back, big);
        let tiny = q.ratio(1, i64::MAX).unwrap();
        let t2 = &tiny * &tiny;
        assert_eq!(&t2 * &(&big * &big), q.one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let a = f.from_i64(n);
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        assert_eq!(f.from_i64(-1).to_string(), "6");
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn parse_rejects_zero_denominator_mod_p() {
        let f = Field::prime(2).unwrap();
        assert!(f.parse("1/2").is_err());
        assert_eq!(f.parse("3").unwrap(), f.one());
    }
}
