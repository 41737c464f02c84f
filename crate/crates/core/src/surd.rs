//! Exact arithmetic in real quadratic fields ℚ(√d).
//!
//! A [`Surd`] is `(a + b√d)/c` with rational `a`, `b`, `c` and a nonnegative
//! integer radicand `d`. Values are kept in a canonical form: square factors
//! of `d` found by trial division up to [`TRIAL_DIVISION_BOUND`] move into
//! the coefficient, and anything with `b = 0` or a perfect-square radicand
//! collapses to a plain rational (`b = 0`, `d = 0`). Comparisons never go
//! through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::field::{format_rational, parse_rational, rational_to_f64, Rational, Scalar};
use crate::{Error, Result};

/// Largest trial divisor used when extracting square factors from a radicand.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct Surd {
    rat: Rational,
    irr: Rational,
    // zero iff `irr` is zero
    radicand: BigInt,
}

/// A float together with a guaranteed bound on its distance to the exact value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Approximation {
    pub value: f64,
    pub error_bound: f64,
}

impl Surd {
    /// `(a + b√d)/c` in canonical form.
    pub fn new(a: Rational, b: Rational, d: BigInt, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidDenominator);
        }
        Self::from_parts(a / &c, b / &c, d)
    }

    /// `rat + irr·√d` in canonical form.
    pub fn from_parts(rat: Rational, irr: Rational, d: BigInt) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        if irr.is_zero() || d.is_zero() {
            return Ok(Self::rational(rat));
        }
        let (root, core) = extract_square_factors(&d);
        let irr = irr * Rational::from_integer(root);
        if core.is_one() {
            return Ok(Self::rational(rat + irr));
        }
        let s = core.sqrt();
        if &s * &s == core {
            return Ok(Self::rational(rat + irr * Rational::from_integer(s)));
        }
        Ok(Surd { rat, irr, radicand: core })
    }

    /// `rat + irr·√core` for a radicand already in canonical form.
    fn with_canonical(rat: Rational, irr: Rational, core: BigInt) -> Self {
        if irr.is_zero() || core.is_zero() {
            return Self::rational(rat);
        }
        Surd { rat, irr, radicand: core }
    }

    pub fn rational(q: Rational) -> Self {
        Surd { rat: q, irr: <Rational as Zero>::zero(), radicand: BigInt::zero() }
    }

    /// `√q` for a nonnegative rational `q`.
    pub fn sqrt_of(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeRadicand(format_rational(q)));
        }
        // √(p/q) = √(pq)/q
        let d = q.numer() * q.denom();
        Self::from_parts(<Rational as Zero>::zero(), Rational::new(BigInt::one(), q.denom().clone()), d)
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rat
    }

    pub fn irrational_coefficient(&self) -> &Rational {
        &self.irr
    }

    /// The canonical radicand (zero for rational values).
    pub fn radicand_value(&self) -> &BigInt {
        &self.radicand
    }

    /// Integer representation `(a, b, d, c)` with `c > 0` and
    /// `gcd(a, b, c) = 1`.
    pub fn integer_form(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let c = self.rat.denom().lcm(self.irr.denom());
        let a = self.rat.numer() * (&c / self.rat.denom());
        let b = self.irr.numer() * (&c / self.irr.denom());
        let g = a.gcd(&b).gcd(&c);
        (&a / &g, &b / &g, self.radicand.clone(), &c / &g)
    }

    /// Conjugate `rat - irr·√d`.
    pub fn conjugate(&self) -> Self {
        Surd { rat: self.rat.clone(), irr: -self.irr.clone(), radicand: self.radicand.clone() }
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.radicand.is_zero(), other.radicand.is_zero()) {
            (true, _) => Ok(other.radicand.clone()),
            (_, true) => Ok(self.radicand.clone()),
            _ if self.radicand == other.radicand => Ok(self.radicand.clone()),
            _ => Err(Error::IncompatibleRadicands(
                self.radicand.to_string(),
                other.radicand.to_string(),
            )),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::with_canonical(&self.rat + &other.rat, &self.irr + &other.irr, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::with_canonical(&self.rat - &other.rat, &self.irr - &other.irr, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dq = Rational::from_integer(d.clone());
        let rat = &self.rat * &other.rat + &self.irr * &other.irr * dq;
        let irr = &self.rat * &other.irr + &self.irr * &other.rat;
        Ok(Self::with_canonical(rat, irr, d))
    }

    pub fn checked_recip(&self) -> Result<Self> {
        if self.is_rational() {
            if self.rat.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::rational(self.rat.recip()));
        }
        // (α + β√d)^{-1} = (α - β√d) / (α² - β²d); the norm is nonzero
        // because √d is irrational.
        let dq = Rational::from_integer(self.radicand.clone());
        let norm = &self.rat * &self.rat - &self.irr * &self.irr * dq;
        Ok(Self::with_canonical(&self.rat / &norm, -(&self.irr / &norm), self.radicand.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.common_radicand(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    /// Exact ordering of two surds over a shared radicand (or where at least
    /// one side is rational).
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.sign())
    }

    /// Exact sign via `α² ⋛ β²d` with a case split on the signs of α and β.
    pub fn sign(&self) -> Ordering {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.irr);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let lhs = &self.rat * &self.rat;
        let rhs = &self.irr * &self.irr * Rational::from_integer(self.radicand.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            // impossible for an irrational √d
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Rational enclosure `lo ≤ value ≤ hi` of width at most `|b|/c · 2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.rat.clone(), self.rat.clone());
        }
        let (lo, hi) = sqrt_enclosure(&self.radicand, bits);
        let a = &self.rat + &self.irr * &lo;
        let b = &self.rat + &self.irr * &hi;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// A float within `abs_err` of the exact value (up to the final binary64
    /// rounding, which is included in the reported bound).
    pub fn approximate(&self, abs_err: &Rational) -> Result<Approximation> {
        if !Signed::is_positive(abs_err) {
            return Err(Error::InvalidTolerance(format_rational(abs_err)));
        }
        let (approx, truncation) = if self.is_rational() {
            (self.rat.clone(), <Rational as Zero>::zero())
        } else {
            // need |irr|·2^-(m+1) ≤ abs_err/4
            let ratio = (self.irr.abs() / abs_err).ceil().to_integer();
            let m = ratio.bits() as u32 + 1;
            let (lo, hi) = sqrt_enclosure(&self.radicand, m);
            let mid = (lo + hi) / Rational::from_integer(BigInt::from(2));
            (&self.rat + &self.irr * mid, abs_err / Rational::from_integer(BigInt::from(4)))
        };
        let value = rational_to_f64(&approx);
        let rounding = Rational::from_float(value)
            .map(|exact| (exact - &approx).abs())
            .unwrap_or_else(<Rational as Zero>::zero);
        let bound = rational_to_f64(&(truncation + rounding));
        Ok(Approximation { value, error_bound: if bound > 0.0 { bound.next_up() } else { 0.0 } })
    }
}

fn sign_of(q: &Rational) -> Ordering {
    match q.numer().sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// `[n/2^bits, (n+1)/2^bits]` containing `√d`, with `n = ⌊√(d·4^bits)⌋`.
fn sqrt_enclosure(d: &BigInt, bits: u32) -> (Rational, Rational) {
    let scaled: BigInt = d << (2 * bits as usize);
    let n = scaled.sqrt();
    let den = BigInt::one() << bits as usize;
    let exact = &n * &n == scaled;
    let lo = Rational::new(n.clone(), den.clone());
    let hi = if exact { lo.clone() } else { Rational::new(n + 1, den) };
    (lo, hi)
}

/// Splits `d = root² · core`, removing square factors `p²` for `p` up to
/// [`TRIAL_DIVISION_BOUND`].
fn extract_square_factors(d: &BigInt) -> (BigInt, BigInt) {
    if let Some(small) = d.to_u128() {
        let (root, core) = extract_square_factors_u128(small);
        return (BigInt::from(root), BigInt::from(core));
    }
    let mut root = BigInt::one();
    let mut core = d.clone();
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_BOUND {
        let sq = BigInt::from(p) * BigInt::from(p);
        if sq > core {
            break;
        }
        while (&core % &sq).is_zero() {
            core /= &sq;
            root *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (root, core)
}

fn extract_square_factors_u128(d: u128) -> (u128, u128) {
    let mut root: u128 = 1;
    let mut core = d;
    let mut p: u128 = 2;
    while p <= TRIAL_DIVISION_BOUND as u128 && p * p <= core {
        let sq = p * p;
        while core % sq == 0 {
            core /= sq;
            root *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (root, core)
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        match self.compare(other) {
            Ok(ord) => ord == Ordering::Equal,
            Err(_) => false,
        }
    }
}

impl From<Rational> for Surd {
    fn from(q: Rational) -> Self {
        Surd::rational(q)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("surd arithmetic: {e}"))
            }
        }
        impl<'a> $trait<&'a Surd> for &'a Surd {
            type Output = Surd;
            fn $method(self, rhs: &'a Surd) -> Surd {
                self.$checked(rhs).unwrap_or_else(|e| panic!("surd arithmetic: {e}"))
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { rat: -self.rat, irr: -self.irr, radicand: self.radicand }
    }
}

impl Scalar for Surd {
    const EXACT: bool = true;

    fn from_rational(q: &Rational) -> Self {
        Surd::rational(q.clone())
    }

    fn signum_ord(&self) -> Ordering {
        self.sign()
    }

    fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return rational_to_f64(&self.rat);
        }
        let err = Rational::new(BigInt::one(), BigInt::one() << 80usize);
        let tiny = self.rat.abs() + self.irr.abs();
        self.approximate(&(err * (tiny + <Rational as One>::one())))
            .map(|a| a.value)
            .unwrap_or(f64::NAN)
    }

    fn radicand(&self) -> Option<&BigInt> {
        (!self.radicand.is_zero()).then_some(&self.radicand)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&format_rational(&self.rat));
        }
        let (a, b, d, c) = self.integer_form();
        let radical = match b.abs() {
            m if m.is_one() => format!("sqrt({d})"),
            m => format!("{m}*sqrt({d})"),
        };
        let numerator = match (a.is_zero(), b.is_negative()) {
            (true, false) => radical,
            (true, true) => format!("-{radical}"),
            (false, false) => format!("{a} + {radical}"),
            (false, true) => format!("{a} - {radical}"),
        };
        if c.is_one() {
            f.write_str(&numerator)
        } else {
            write!(f, "({numerator})/{c}")
        }
    }
}

fn surd_pattern() -> &'static Regex {
    static PATTERN: OnceLock<Regex> = OnceLock::new();
    PATTERN.get_or_init(|| {
        Regex::new(
            r"^\s*(?P<open>\()?\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<op>[+-]))?\s*(?P<lead>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*?\s*)?sqrt\s*\(\s*(?P<d>\d+)\s*\)\s*(?P<close>\))?\s*(?:/\s*(?P<c>\d+(?:/\d+)?))?\s*$",
        )
        .expect("valid surd pattern")
    })
}

impl FromStr for Surd {
    type Err = Error;

    /// Accepts rationals (`"7/4"`, `"0.5"`) and surds written like
    /// `"(156303 - 9*sqrt(10054801))/211888"` or `"2 + sqrt(3)"`.
    fn from_str(text: &str) -> Result<Self> {
        let Some(caps) = surd_pattern().captures(text) else {
            return parse_rational(text).map(Surd::rational);
        };
        let bad = || Error::Parse(format!("malformed surd {text:?}"));
        if caps.name("open").is_some() != caps.name("close").is_some() {
            return Err(bad());
        }
        if caps.name("c").is_some() && caps.name("a").is_some() && caps.name("open").is_none() {
            return Err(bad());
        }
        let a = match caps.name("a") {
            Some(m) => parse_rational(m.as_str())?,
            None => <Rational as Zero>::zero(),
        };
        let mut b = match caps.name("b") {
            Some(m) => parse_rational(m.as_str())?,
            None => <Rational as One>::one(),
        };
        for sign in ["op", "lead"] {
            if caps.name(sign).map(|m| m.as_str()) == Some("-") {
                b = -b;
            }
        }
        let d: BigInt = caps["d"].parse().map_err(|_| bad())?;
        let c = match caps.name("c") {
            Some(m) => parse_rational(m.as_str())?,
            None => <Rational as One>::one(),
        };
        Surd::new(a, b, d, c)
    }
}

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    a: String,
    b: String,
    d: String,
    c: String,
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (a, b, d, c) = self.integer_form();
        SurdRepr { a: a.to_string(), b: b.to_string(), d: d.to_string(), c: c.to_string() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SurdRepr::deserialize(deserializer)?;
        let a = parse_rational(&repr.a).map_err(D::Error::custom)?;
        let b = parse_rational(&repr.b).map_err(D::Error::custom)?;
        let c = parse_rational(&repr.c).map_err(D::Error::custom)?;
        let d: BigInt = repr.d.trim().parse().map_err(D::Error::custom)?;
        Surd::new(a, b, d, c).map_err(D::Error::custom)
    }
}
