//! Exact scalars over ℚ and their canonical `"num/den"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text: `"-3/2"`, integers without a denominator (`"0"`, `"7"`).
pub fn to_canonical(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"n"` or `"n/d"` (d ≠ 0) and reduces to lowest terms.
pub fn parse(text: &str) -> Result<Rational, Error> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match t.split_once('/') {
        None => BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Largest absolute value, used to size boxes.
pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(zero(), |acc, v| if v > acc { v } else { acc })
}

pub(crate) fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_canonical(q))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    match RawRational::deserialize(d)? {
        RawRational::Text(t) => parse(&t).map_err(de::Error::custom),
        RawRational::Int(n) => Ok(int(n)),
    }
}

/// Serde adapter for `Vec<Rational>` fields.
pub(crate) mod seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&to_canonical(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw: Vec<RawRational> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|r| match r {
                RawRational::Text(t) => parse(&t).map_err(de::Error::custom),
                RawRational::Int(n) => Ok(int(n)),
            })
            .collect()
    }
}

/// Serde adapter for `Vec<Vec<Rational>>` fields.
pub(crate) mod seq2 {
    use super::*;
    use serde::Serialize;

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = v
            .iter()
            .map(|r| r.iter().map(to_canonical).collect())
            .collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let raw: Vec<Vec<RawRational>> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|r| match r {
                        RawRational::Text(t) => parse(&t).map_err(de::Error::custom),
                        RawRational::Int(n) => Ok(int(n)),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter for `Option<Rational>` fields.
pub(crate) mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(q) => s.serialize_some(&to_canonical(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw: Option<RawRational> = Option::deserialize(d)?;
        raw.map(|r| match r {
            RawRational::Text(t) => parse(&t).map_err(de::Error::custom),
            RawRational::Int(n) => Ok(int(n)),
        })
        .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(to_canonical(&ratio(-6, 4)), "-3/2");
        assert_eq!(to_canonical(&zero()), "0");
        assert_eq!(to_canonical(&ratio(0, -5)), "0");
        assert_eq!(to_canonical(&ratio(3, -1)), "-3");
    }

    #[test]
    fn parse_reduces_and_rejects() {
        assert_eq!(parse("4/-6").unwrap(), ratio(-2, 3));
        assert_eq!(parse(" 12 ").unwrap(), int(12));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.5").is_err());
    }
}
