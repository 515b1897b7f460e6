//! Exact arithmetic in Q(ω), ω a primitive cube root of unity.
//!
//! An element is `a + b ω` with rational `a`, `b`, reduced with
//! `ω² = -1 - ω`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        ExactScalar { a, b }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn omega() -> Self {
        ExactScalar { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar { a: BigRational::from_integer(n.into()), b: BigRational::zero() }
    }

    pub fn rational(num: i64, den: i64) -> Result<Self> {
        Ok(ExactScalar { a: ratio(num.into(), den.into())?, b: BigRational::zero() })
    }

    /// `(an/ad) + (bn/bd) ω`.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64) -> Result<Self> {
        Ok(ExactScalar { a: ratio(an.into(), ad.into())?, b: ratio(bn.into(), bd.into())? })
    }

    pub fn real_part(&self) -> &BigRational {
        &self.a
    }

    pub fn omega_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `ω -> ω²`: `a + b ω -> (a - b) - b ω`.
    pub fn conj(&self) -> Self {
        ExactScalar { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm `a² - ab + b²`, positive for nonzero elements.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Validation("division by zero in Q(omega)".into()));
        }
        let n = self.norm();
        let c = self.conj();
        Ok(ExactScalar { a: c.a / &n, b: c.b / n })
    }
}

fn ratio(num: BigInt, den: BigInt) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}w", self.b)
        } else {
            write!(f, "{}{}{}w", self.a, if self.b.is_negative() { "" } else { "+" }, self.b)
        }
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    // (a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        let bd = &self.b * &o.b;
        ExactScalar {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -&self.a, b: -&self.b }
    }
}

/// Panics on division by zero, like the rational types it wraps; use
/// [`ExactScalar::inv`] for a checked inverse.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, o: &ExactScalar) -> ExactScalar {
        self * &o.inv().expect("division by zero in Q(omega)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

/// An integer in JSON: a number when it fits in `i64`, otherwise a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Num(i64),
    Text(String),
}

impl IntRepr {
    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            IntRepr::Num(n) => Ok((*n).into()),
            IntRepr::Text(s) => s.trim().parse().map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

fn write_int<S: SerializeSeq>(seq: &mut S, n: &BigInt) -> std::result::Result<(), S::Error> {
    match n.to_i64() {
        Some(v) => seq.serialize_element(&v),
        None => seq.serialize_element(&n.to_string()),
    }
}

struct RationalJson<'a>(&'a BigRational);

impl Serialize for RationalJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        write_int(&mut seq, self.0.numer())?;
        write_int(&mut seq, self.0.denom())?;
        seq.end()
    }
}

/// Serialized as `[[a_num, a_den]]`, with a second pair `[b_num, b_den]`
/// only when the ω part is nonzero.
impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let len = if self.b.is_zero() { 1 } else { 2 };
        let mut seq = s.serialize_seq(Some(len))?;
        seq.serialize_element(&RationalJson(&self.a))?;
        if len == 2 {
            seq.serialize_element(&RationalJson(&self.b))?;
        }
        seq.end()
    }
}

/// Accepted coefficient forms: an integer, `[num, den]`, `[[num, den]]`, or
/// `[[a_num, a_den], [b_num, b_den]]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Int(IntRepr),
    Rational([IntRepr; 2]),
    Parts(Vec<[IntRepr; 2]>),
}

fn parse_pair(p: &[IntRepr; 2]) -> std::result::Result<BigRational, String> {
    let den = p[1].to_big()?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(p[0].to_big()?, den))
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        let (a, b) = match &repr {
            ScalarRepr::Int(n) => (BigRational::from_integer(n.to_big().map_err(de::Error::custom)?), BigRational::zero()),
            ScalarRepr::Rational(p) => (parse_pair(p).map_err(de::Error::custom)?, BigRational::zero()),
            ScalarRepr::Parts(parts) => match parts.as_slice() {
                [a] => (parse_pair(a).map_err(de::Error::custom)?, BigRational::zero()),
                [a, b] => (
                    parse_pair(a).map_err(de::Error::custom)?,
                    parse_pair(b).map_err(de::Error::custom)?,
                ),
                _ => return Err(de::Error::custom("a scalar has one or two rational parts")),
            },
        };
        Ok(ExactScalar { a, b })
    }
}
