//! Elements of a real quadratic field `Q(√d)`.

use super::rational::{fmt_rational, int, parse_rational, rational_sqrt, serde_pair, Rational};
use super::ExactError;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact sign of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

fn rational_sign(q: &Rational) -> Sign {
    if q.is_zero() {
        Sign::Zero
    } else if q.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn is_squarefree(d: u32) -> bool {
    if d == 0 {
        return false;
    }
    let mut k = 2u32;
    while k.saturating_mul(k) <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `rat + rad·√d`, with the radicand carried by every value.
///
/// `d = 1` is accepted as the plain rational field; its radical part is always
/// folded into the rational part so that equality stays componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    rat: Rational,
    rad: Rational,
    d: u32,
}

impl QuadraticNumber {
    /// Panics if `d` is not squarefree; use [`QuadraticNumber::try_new`] for
    /// untrusted input.
    pub fn new(rat: Rational, rad: Rational, d: u32) -> Self {
        assert!(is_squarefree(d), "radicand {d} is not squarefree");
        if d == 1 {
            QuadraticNumber { rat: rat + rad, rad: Rational::zero(), d }
        } else {
            QuadraticNumber { rat, rad, d }
        }
    }

    pub fn try_new(rat: Rational, rad: Rational, d: u32) -> Result<Self, ExactError> {
        if !is_squarefree(d) {
            return Err(ExactError::NotSquarefree(d));
        }
        Ok(Self::new(rat, rad, d))
    }

    pub fn from_rational(q: Rational, d: u32) -> Self {
        Self::new(q, Rational::zero(), d)
    }

    pub fn from_int(n: i64, d: u32) -> Self {
        Self::from_rational(int(n), d)
    }

    pub fn zero(d: u32) -> Self {
        Self::from_int(0, d)
    }

    pub fn one(d: u32) -> Self {
        Self::from_int(1, d)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u32) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn rad(&self) -> &Rational {
        &self.rad
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.rad.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(ExactError::RadicandMismatch { left: self.d, right: other.d })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(QuadraticNumber {
            rat: &self.rat + &other.rat,
            rad: &self.rad + &other.rad,
            d: self.d,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(QuadraticNumber {
            rat: &self.rat - &other.rat,
            rad: &self.rad - &other.rad,
            d: self.d,
        })
    }

    /// `(r₁r₂ + d·s₁s₂) + (r₁s₂ + r₂s₁)√d`
    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        let dq = int(self.d as i64);
        Ok(QuadraticNumber {
            rat: &self.rat * &other.rat + dq * &self.rad * &other.rad,
            rad: &self.rat * &other.rad + &other.rat * &self.rad,
            d: self.d,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    /// Field norm `r² − d·s²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - int(self.d as i64) * &self.rad * &self.rad
    }

    /// Galois conjugate `r − s√d`.
    pub fn conjugate(&self) -> Self {
        QuadraticNumber { rat: self.rat.clone(), rad: -&self.rad, d: self.d }
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // d squarefree and d > 1 means √d is irrational, so the norm of a
        // nonzero element never vanishes.
        let n = self.norm();
        Ok(QuadraticNumber { rat: &self.rat / &n, rad: -&self.rad / &n, d: self.d })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadraticNumber { rat: &self.rat * q, rad: &self.rad * q, d: self.d }
    }

    /// Exact sign by rational case analysis; never approximates.
    pub fn sign(&self) -> Sign {
        let sr = rational_sign(&self.rat);
        let ss = rational_sign(&self.rad);
        match (sr, ss) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            _ => {
                // Opposite signs: compare r² with d·s².
                let lhs = &self.rat * &self.rat;
                let rhs = int(self.d as i64) * &self.rad * &self.rad;
                let mag = Sign::of_ordering(lhs.cmp(&rhs));
                if sr == Sign::Positive {
                    mag
                } else {
                    mag.flip()
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn checked_cmp(&self, other: &Self) -> Result<Ordering, ExactError> {
        Ok(self.checked_sub(other)?.sign().to_ordering())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Square root inside the same field, when it exists (nonnegative root).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let d = self.d;
        let dq = int(d as i64);
        let candidates: Vec<QuadraticNumber> = if self.rad.is_zero() {
            let mut v = Vec::new();
            if let Some(a) = rational_sqrt(&self.rat) {
                v.push(Self::from_rational(a, d));
            }
            if d > 1 {
                if let Some(b) = rational_sqrt(&(&self.rat / &dq)) {
                    v.push(Self::new(Rational::zero(), b, d));
                }
            }
            v
        } else {
            // (A + B√d)² = A² + dB² + 2AB√d; A² solves a quadratic whose
            // discriminant is the norm.
            let disc = rational_sqrt(&self.norm())?;
            let two = int(2);
            [(&self.rat + &disc) / &two, (&self.rat - &disc) / &two]
                .iter()
                .filter_map(rational_sqrt)
                .filter(|a| !a.is_zero())
                .map(|a| {
                    let b = &self.rad / (&two * &a);
                    Self::new(a, b, d)
                })
                .collect()
        };
        candidates
            .into_iter()
            .map(|c| c.abs())
            .find(|c| &(c * c) == self)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        let s = self.rad.to_f64().unwrap_or(f64::NAN);
        r + s * (self.d as f64).sqrt()
    }

    /// Parses the text form `(p/q)+(r/s)√d`. Also accepted: `√3`, `2√3`,
    /// `-1/2+1/2√3`, `sqrt3`, `sqrt(3)`. A value without a radical takes the
    /// radicand `default_d`.
    pub fn parse(s: &str, default_d: u32) -> Result<Self, ExactError> {
        parse_text(s, default_d)
    }
}

fn parse_text(input: &str, default_d: u32) -> Result<QuadraticNumber, ExactError> {
    let err = || ExactError::Parse(input.to_string());
    let s: String = input
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect::<String>()
        .replace("sqrt", "√");
    if s.is_empty() {
        return Err(err());
    }
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut rat = Rational::zero();
    let mut rad = Rational::zero();
    let mut field: Option<u32> = None;
    let mut first = true;
    while i < chars.len() {
        let mut sign = Rational::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !first {
            return Err(err());
        }
        first = false;
        // coefficient: parenthesised or bare rational, possibly empty
        let coeff = if i < chars.len() && chars[i] == '(' {
            let close = chars[i..].iter().position(|&c| c == ')').ok_or_else(err)? + i;
            let inner: String = chars[i + 1..close].iter().collect();
            i = close + 1;
            Some(parse_rational(&inner).ok_or_else(err)?)
        } else {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            if i > start {
                let lit: String = chars[start..i].iter().collect();
                Some(parse_rational(&lit).ok_or_else(err)?)
            } else {
                None
            }
        };
        if i < chars.len() && chars[i] == '√' {
            i += 1;
            let paren = i < chars.len() && chars[i] == '(';
            if paren {
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let d: u32 = chars[start..i].iter().collect::<String>().parse().map_err(|_| err())?;
            if paren {
                if i >= chars.len() || chars[i] != ')' {
                    return Err(err());
                }
                i += 1;
            }
            if !is_squarefree(d) {
                return Err(ExactError::NotSquarefree(d));
            }
            if let Some(prev) = field {
                if prev != d {
                    return Err(ExactError::RadicandMismatch { left: prev, right: d });
                }
            }
            field = Some(d);
            rad += sign * coeff.unwrap_or_else(Rational::one);
        } else {
            rat += sign * coeff.ok_or_else(err)?;
        }
    }
    let d = field.unwrap_or(default_d);
    if field.is_some() && default_d != 1 && default_d != d {
        return Err(ExactError::RadicandMismatch { left: default_d, right: d });
    }
    QuadraticNumber::try_new(rat, rad, d)
}

impl fmt::Display for QuadraticNumber {
    /// Canonical text form, re-readable by [`QuadraticNumber::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rad_term = |f: &mut fmt::Formatter<'_>, lead: bool| -> fmt::Result {
            let neg = self.rad.is_negative();
            let mag = self.rad.abs();
            let sign = match (lead, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => "-",
                (false, false) => "+",
            };
            if mag.is_one() {
                write!(f, "{sign}√{}", self.d)
            } else {
                write!(f, "{sign}({})√{}", fmt_rational(&mag), self.d)
            }
        };
        match (self.rat.is_zero(), self.rad.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.rat)),
            (true, false) => rad_term(f, true),
            (false, false) => {
                write!(f, "{}", fmt_rational(&self.rat))?;
                rad_term(f, false)
            }
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [Q(√{})]", self.d)
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_cmp(other).ok()
    }
}

/// Total order inside one field. Comparing values of different fields is a
/// programming error and panics.
impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.checked_cmp(other).expect("radicand mismatch")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                self.$checked(rhs).expect("radicand mismatch")
            }
        }
        impl $trait<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { rat: -&self.rat, rad: -&self.rad, d: self.d }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct QnRepr {
    #[serde(with = "serde_pair")]
    rat: Rational,
    #[serde(with = "serde_pair")]
    rad: Rational,
    sqrt: u32,
}

impl Serialize for QuadraticNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QnRepr { rat: self.rat.clone(), rad: self.rad.clone(), sqrt: self.d }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = QnRepr::deserialize(d)?;
        if r.sqrt == 1 && !r.rad.is_zero() {
            return Err(serde::de::Error::custom("radical part must be zero when sqrt = 1"));
        }
        QuadraticNumber::try_new(r.rat, r.rad, r.sqrt).map_err(serde::de::Error::custom)
    }
}
