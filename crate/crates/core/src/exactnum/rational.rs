//! Arbitrary-precision rationals and their JSON encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use std::fmt;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root, if the rational is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Writes `p/q` (or just `p` for integers).
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn serialize_bigint<S: SerializeSeq>(seq: &mut S, v: &BigInt) -> Result<(), S::Error> {
    // Integers past the i64 range are written as decimal strings so that the
    // document stays valid JSON without a big-number extension.
    match v.to_i64() {
        Some(x) => seq.serialize_element(&x),
        None => seq.serialize_element(&v.to_string()),
    }
}

/// `serde(with = ...)` adapter encoding a rational as `[numerator, denominator]`.
pub mod serde_pair {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        serialize_bigint(&mut seq, q.numer())?;
        serialize_bigint(&mut seq, q.denom())?;
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_seq(PairVisitor)
    }
}

#[derive(serde::Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(v)),
            IntRepr::Big(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

struct PairVisitor;

impl<'de> Visitor<'de> for PairVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a [numerator, denominator] pair")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Rational, A::Error> {
        let n: IntRepr = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let d: IntRepr = seq
            .next_element()?
            .ok_or_else(|| de::Error::invalid_length(1, &self))?;
        if seq.next_element::<IntRepr>()?.is_some() {
            return Err(de::Error::invalid_length(3, &self));
        }
        let n = n.into_bigint()?;
        let d = d.into_bigint()?;
        if !d.is_positive() {
            return Err(de::Error::custom("denominator must be positive"));
        }
        let q = Rational::new(n.clone(), d.clone());
        if q.numer() != &n || q.denom() != &d {
            return Err(de::Error::custom("rational not in lowest terms"));
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(3, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(fmt_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rational(&int(7)), "7");
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn pair_encoding_rejects_unreduced() {
        #[derive(serde::Deserialize, serde::Serialize)]
        struct W(#[serde(with = "serde_pair")] Rational);
        let w: W = serde_json::from_str("[3,4]").unwrap();
        assert_eq!(w.0, rat(3, 4));
        assert!(serde_json::from_str::<W>("[2,4]").is_err());
        assert!(serde_json::from_str::<W>("[2,-3]").is_err());
        let big = W(Rational::from_integer(BigInt::from(10).pow(30)));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[\"1000000000000000000000000000000\",1]");
        let back: W = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big.0);
    }
}
