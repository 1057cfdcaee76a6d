//! Exact rational helpers. Every numeric invariant in the crate is an exact
//! [`Rational`]; nothing is ever rounded to floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

/// Parses `"3"`, `"-1/2"` and similar.
pub fn parse(text: &str) -> Option<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(t.parse().ok()?)),
    }
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn to_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serialization wrapper emitting `{"num": .., "den": ..}` with arbitrary
/// precision integers written as strings only when they do not fit in `i64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &BigIntJson(self.0.numer()))?;
        st.serialize_field("den", &BigIntJson(self.0.denom()))?;
        st.end()
    }
}

struct BigIntJson<'a>(&'a BigInt);

impl Serialize for BigIntJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse("1/6"), Some(frac(1, 6)));
        assert_eq!(parse("-2/4"), Some(frac(-1, 2)));
        assert_eq!(parse("7"), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(to_text(&frac(3, 6)), "1/2");
        assert_eq!(to_text(&int(-4)), "-4");
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&Exact(frac(-1, 6))).unwrap();
        assert_eq!(s, r#"{"num":-1,"den":6}"#);
    }
}
