//! Scalar tower shared by every module: exact rationals, hardware floats and
//! (in [`crate::surd`]) quadratic surds, all behind the [`Scalar`] trait.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// An ordered field realization used by all algorithms in this crate.
///
/// Arithmetic operators panic on division by zero, and for [`crate::Surd`]
/// also when mixing two different irrational radicands. Public entry points
/// check [`Scalar::radicand`] compatibility up front and return
/// [`Error::IncompatibleRadicands`] instead.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether comparisons and equality are exact.
    const EXACT: bool;

    fn from_rational(q: &Rational) -> Self;

    /// Sign of the value as an ordering against zero.
    fn signum_ord(&self) -> Ordering;

    fn to_f64(&self) -> f64;

    /// The irrational radicand carried by the value, if any.
    fn radicand(&self) -> Option<&BigInt> {
        None
    }

    /// Human and machine readable rendering ("p/q", surd form, or a
    /// 17 significant digit float).
    fn render(&self) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&Rational::new(num.into(), den.into()))
    }

    fn zero() -> Self {
        Self::from_int(0)
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn is_zero_value(&self) -> bool {
        self.signum_ord() == Ordering::Equal
    }

    fn is_positive(&self) -> bool {
        self.signum_ord() == Ordering::Greater
    }

    fn abs_value(&self) -> Self {
        if self.signum_ord() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum_ord()
    }
}

/// Fails when two of `values` carry different irrational radicands.
pub fn check_compatible<S: Scalar>(values: &[&S]) -> Result<()> {
    let mut seen: Option<&BigInt> = None;
    for value in values {
        if let Some(d) = value.radicand() {
            match seen {
                None => seen = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::IncompatibleRadicands(prev.to_string(), d.to_string()))
                }
                Some(_) => {}
            }
        }
    }
    Ok(())
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }

    fn signum_ord(&self) -> Ordering {
        self.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format_f64(*self)
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn signum_ord(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if Signed::is_positive(self) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn render(&self) -> String {
        format_rational(self)
    }
}

/// Round-to-nearest conversion; falls back to a quotient of floats only if
/// the exact conversion is unavailable.
pub fn rational_to_f64(q: &Rational) -> f64 {
    ToPrimitive::to_f64(q).unwrap_or_else(|| {
        q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// `"p/q"`, or `"n"` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// 17 significant digits, enough for an exact binary64 round trip.
pub fn format_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Parses `"n"`, `"p/q"` or a decimal literal such as `"-0.125"` or
/// `"3e-2"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_rational(num)?;
        let den = parse_rational(den)?;
        if den.is_zero() {
            return Err(Error::InvalidDenominator);
        }
        return Ok(num / den);
    }
    parse_decimal(t)
}

fn parse_decimal(t: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a number: {t:?}"));
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], exp)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if exponent.abs() > 10_000 {
        return Err(Error::Parse(format!("exponent out of range in {t:?}")));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mantissa: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad())?
    };
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(mantissa);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

/// True when `text` is written as an integer or `p/q` fraction, i.e. a
/// literal that selects the exact code path.
pub fn is_fraction_literal(text: &str) -> bool {
    let t = text.trim();
    let body = |s: &str| {
        let s = s.strip_prefix(['-', '+']).unwrap_or(s);
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    match t.split_once('/') {
        Some((n, d)) => body(n) && body(d),
        None => body(t),
    }
}

/// Serde adapter writing a [`Rational`] as `"p/q"` (or `"n"`).
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
