//! Exact polynomial arithmetic in `ℚ[u, v, w, r, s]` and the identity suite
//! that certifies the closed forms used elsewhere in the crate.
//!
//! Every identity is checked from the coefficient tables in
//! [`crate::coefficients`], never from simplified forms: either the
//! difference of both sides is the zero polynomial, or it reduces to zero
//! modulo `R` by single-divisor division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::coefficients::{table, PolyTable};
use crate::field::{format_rational, rat, Rational, Scalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U = 0,
    V = 1,
    W = 2,
    R = 3,
    S = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::U, Var::V, Var::W, Var::R, Var::S];

    pub fn name(self) -> &'static str {
        ["u", "v", "w", "r", "s"][self as usize]
    }
}

/// Exponent vector over `(u, v, w, r, s)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; 5]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients and no zero terms.
/// The last map entry is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::default(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n, 1))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 5];
        e[v as usize] = 1;
        Self::term(Monomial(e), rat(1, 1))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_table(t: &PolyTable) -> Self {
        Self::from_terms(t.terms.iter().map(|(e, c)| (Monomial(e.map(|x| x as u16)), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v as usize] as u32).max().unwrap_or(0)
    }

    /// Returns `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(<Rational as Zero>::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::int(1);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Splits by powers of `v`: entry `j` is the coefficient of `v^j`.
    fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let j = rest.0[v as usize] as usize;
            rest.0[v as usize] = 0;
            out[j].add_term(rest, c.clone());
        }
        out
    }

    /// Replaces `var` by `value`. For a fraction `N/D` the result is
    /// `D^m · p(…, N/D, …)` with `m = deg_var p`; the returned `u32` is `m`
    /// (zero for polynomial values).
    pub fn substitute(&self, var: Var, value: &Substitution) -> Result<(MultiPoly, u32)> {
        let parts = self.coefficients_in(var);
        let m = parts.len() - 1;
        match value {
            Substitution::Poly(p) => {
                let mut acc = Self::zero();
                for part in parts.iter().rev() {
                    acc = &(&acc * p) + part;
                }
                Ok((acc, 0))
            }
            Substitution::Fraction { num, den } => {
                if den.is_zero() {
                    return Err(Error::InvalidSubstitution(format!(
                        "denominator for {} is the zero polynomial",
                        var.name()
                    )));
                }
                let mut num_pows = vec![Self::int(1)];
                let mut den_pows = vec![Self::int(1)];
                for _ in 0..m {
                    num_pows.push(num_pows.last().unwrap() * num);
                    den_pows.push(den_pows.last().unwrap() * den);
                }
                let mut acc = Self::zero();
                for (j, part) in parts.iter().enumerate() {
                    if part.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(part * &num_pows[j]) * &den_pows[m - j]);
                }
                Ok((acc, m as u32))
            }
        }
    }

    /// Single-divisor division: `self = quotient · divisor + remainder`, with
    /// no remainder term divisible by the divisor's leading monomial.
    pub fn reduce_mod(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::InvalidDivisor)?;
        let (lead_m, lead_c) = (*lead_m, lead_c.clone());
        let mut p = self.clone();
        let mut quotient = Self::zero();
        let mut remainder = Self::zero();
        while let Some((m, c)) = p.terms.pop_last() {
            if lead_m.divides(&m) {
                let qm = m.div(&lead_m);
                let qc = &c / &lead_c;
                // the leading term cancels exactly; subtract the rest
                for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                    p.add_term(dm.mul(&qm), -(dc * &qc));
                }
                quotient.add_term(qm, qc);
            } else {
                remainder.add_term(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    pub fn eval<S: Scalar>(&self, values: &[S; 5]) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_rational(c);
            for (x, &e) in values.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = Var::ALL
                .iter()
                .filter(|v| m.0[**v as usize] > 0)
                .map(|v| match m.0[*v as usize] {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &rhs.terms {
            for (n, a) in &self.terms {
                out.add_term(n.mul(m), a * c);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1, 1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Right-hand side for [`MultiPoly::substitute`].
#[derive(Clone, Debug, PartialEq)]
pub enum Substitution {
    Poly(MultiPoly),
    Fraction { num: MultiPoly, den: MultiPoly },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
    I10,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
        IdentityId::I8,
        IdentityId::I9,
        IdentityId::I10,
    ];

    pub fn as_str(self) -> &'static str {
        ["I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10"][self as usize]
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::I1 => "d*k = 2v(4u-1)(1-w)(1-2u)(1-4vw+4uvw) + (-1+4v-4uv)*R",
            IdentityId::I2 => "R(u,1/2,w) = (1-w-u)(2uw-2w+1)",
            IdentityId::I3 => "k(u,v,1/(4(1-u)(1-v))) = (1-2v)(4u-1)/(2(1-v))",
            IdentityId::I4 => "k(u,v,1/(2(1-u))) = 2(2v-1)(v-uv-u)",
            IdentityId::I5 => "2*k(u,v,3/4) = H(u,v)",
            IdentityId::I6 => "critical-point substitution turns the symmetric-function system into f, g, h",
            IdentityId::I7 => "closed-form r, s satisfy f = g = h = 0 modulo R",
            IdentityId::I8 => "both formulas for s agree modulo R",
            IdentityId::I9 => "4(1-u)v(1-w) - (1-4vw+4uvw) = 4v-4uv-1",
            IdentityId::I10 => "A = -2v(2u-1)(w-1)r + k vanishes on the closed-form r and on the solution of f = g = 0",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// The tabulated polynomials the identities are built from.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySet {
    pub r: MultiPoly,
    pub k: MultiPoly,
    pub d: MultiPoly,
    /// `H(u, v)`.
    pub h_upper: MultiPoly,
    pub f: MultiPoly,
    pub g: MultiPoly,
    pub h: MultiPoly,
}

impl PolySet {
    pub fn from_tables() -> Self {
        let p = |name| MultiPoly::from_table(table(name));
        PolySet { r: p("R"), k: p("k"), d: p("d"), h_upper: p("H"), f: p("f"), g: p("g"), h: p("h") }
    }

    pub fn with_r(mut self, r: MultiPoly) -> Self {
        self.r = r;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityOutcome {
    pub id: IdentityId,
    pub passed: bool,
    /// Zero on success; otherwise the first nonzero difference or remainder.
    pub witness: MultiPoly,
    /// Cofactors found by division, in the order described by `detail`.
    pub quotients: Vec<MultiPoly>,
    pub detail: String,
}

fn lin(terms: &[(i64, [u16; 5])]) -> MultiPoly {
    MultiPoly::from_terms(terms.iter().map(|(c, e)| (Monomial(*e), rat(*c, 1))))
}

fn u() -> MultiPoly {
    MultiPoly::var(Var::U)
}
fn v() -> MultiPoly {
    MultiPoly::var(Var::V)
}
fn w() -> MultiPoly {
    MultiPoly::var(Var::W)
}
fn c(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

/// `1 - 4vw + 4uvw`
fn upper_v() -> MultiPoly {
    lin(&[(1, [0; 5]), (-4, [0, 1, 1, 0, 0]), (4, [1, 1, 1, 0, 0])])
}

/// `-1 + 4v - 4uv`
fn lower_v() -> MultiPoly {
    lin(&[(-1, [0; 5]), (4, [0, 1, 0, 0, 0]), (-4, [1, 1, 0, 0, 0])])
}

/// `(num, den)` of the closed form for `r`.
fn r_fraction(ps: &PolySet) -> (MultiPoly, MultiPoly) {
    let den = c(2) * v() * (c(1) - c(2) * u()) * (c(1) - w());
    (ps.k.clone(), den)
}

/// `(num, den)` of the closed form for `s`.
fn s_fraction(ps: &PolySet) -> (MultiPoly, MultiPoly) {
    let num = c(2) * (c(1) - u()) * v() * ps.k.clone();
    let den = upper_v() * v() * (c(1) - c(2) * u());
    (num, den)
}

fn exact(id: IdentityId, diff: MultiPoly, detail: &str) -> IdentityOutcome {
    IdentityOutcome { id, passed: diff.is_zero(), witness: diff, quotients: Vec::new(), detail: detail.into() }
}

fn fraction(num: MultiPoly, den: MultiPoly) -> Substitution {
    Substitution::Fraction { num, den }
}

pub fn verify_identity(id: IdentityId, ps: &PolySet) -> Result<IdentityOutcome> {
    Ok(match id {
        IdentityId::I1 => {
            let rhs = c(2) * v() * (c(4) * u() - c(1)) * (c(1) - w()) * (c(1) - c(2) * u()) * upper_v()
                + lower_v() * ps.r.clone();
            exact(id, &(&ps.d * &ps.k) - &rhs, "d*k - rhs is the zero polynomial")
        }
        IdentityId::I2 => {
            let (sub, _) = ps.r.substitute(Var::V, &Substitution::Poly(MultiPoly::constant(rat(1, 2))))?;
            let rhs = (c(1) - w() - u()) * (c(2) * w() * u() - c(2) * w() + c(1));
            exact(id, sub - rhs, "R(u,1/2,w) minus the product is the zero polynomial")
        }
        IdentityId::I3 => {
            let den = c(4) * (c(1) - u()) * (c(1) - v());
            let (cleared, m) = ps.k.substitute(Var::W, &fraction(c(1), den.clone()))?;
            // den^m * (1-2v)(4u-1) / (2(1-v))
            let rhs = den.pow(m.saturating_sub(1)) * c(2) * (c(1) - u()) * (c(1) - c(2) * v()) * (c(4) * u() - c(1));
            exact(id, cleared - rhs, &format!("cleared with denominator power {m}"))
        }
        IdentityId::I4 => {
            let den = c(2) * (c(1) - u());
            let (cleared, m) = ps.k.substitute(Var::W, &fraction(c(1), den.clone()))?;
            let rhs = den.pow(m) * c(2) * (c(2) * v() - c(1)) * (v() - u() * v() - u());
            exact(id, cleared - rhs, &format!("cleared with denominator power {m}"))
        }
        IdentityId::I5 => {
            let (sub, _) = ps.k.substitute(Var::W, &Substitution::Poly(MultiPoly::constant(rat(3, 4))))?;
            exact(id, sub.scale(&rat(2, 1)) - ps.h_upper.clone(), "2*k(u,v,3/4) - H is the zero polynomial")
        }
        IdentityId::I6 => verify_i6(ps)?,
        IdentityId::I7 => verify_i7(ps)?,
        IdentityId::I8 => {
            let lhs = c(2) * (c(1) - u()) * v() * ps.k.clone() * ps.d.clone();
            let rhs = c(4) * v() * (c(4) * u() - c(1)) * (c(1) - u()) * (c(1) - w()) * v() * (c(1) - c(2) * u())
                * upper_v();
            modulo_r(id, &(lhs - rhs), ps, "difference of cross-multiplied s formulas")?
        }
        IdentityId::I9 => {
            let diff = c(4) * (c(1) - u()) * v() * (c(1) - w()) - upper_v() - (c(4) * v() - c(4) * u() * v() - c(1));
            exact(id, diff, "difference is the zero polynomial")
        }
        IdentityId::I10 => verify_i10(ps)?,
    })
}

fn modulo_r(id: IdentityId, p: &MultiPoly, ps: &PolySet, what: &str) -> Result<IdentityOutcome> {
    let (q, rem) = p.reduce_mod(&ps.r)?;
    Ok(IdentityOutcome {
        id,
        passed: rem.is_zero(),
        witness: rem,
        detail: format!("{what}: quotient by R has {} terms", q.len()),
        quotients: vec![q],
    })
}

/// The symmetric-function system for roots `-1, 0, r, s` and critical
/// points `x1, x2, x3`, in the order (product, sum, pairwise sum).
fn symmetric_system(x: [MultiPoly; 3]) -> [MultiPoly; 3] {
    let r = MultiPoly::var(Var::R);
    let s = MultiPoly::var(Var::S);
    let [x1, x2, x3] = x;
    let e1 = &(&x1 + &x2) + &x3;
    let e2 = &(&(&x1 * &x2) + &(&x1 * &x3)) + &(&x2 * &x3);
    let e3 = &(&x1 * &x2) * &x3;
    let rs = &r * &s;
    [
        c(4) * e3 + rs.clone(),
        c(4) * e1 - c(3) * (c(-1) + r.clone() + s.clone()),
        c(2) * e2 - (rs - r - s),
    ]
}

fn verify_i6(ps: &PolySet) -> Result<IdentityOutcome> {
    let r = MultiPoly::var(Var::R);
    let s = MultiPoly::var(Var::S);
    let x = [u() - c(1), &r * &v(), &(&(&s - &r) * &w()) + &r];
    let system = symmetric_system(x);
    let mut quotients = Vec::new();
    let mut witness = MultiPoly::zero();
    let mut passed = true;
    for (eq, target) in system.iter().zip([&ps.f, &ps.g, &ps.h]) {
        let (q, rem) = eq.reduce_mod(target)?;
        // the factor must be a single nonvanishing monomial (r > 0 on the canonical frame)
        let ok = rem.is_zero() && q.len() == 1 && {
            let (m, _) = q.leading_term().unwrap();
            m.0[..3].iter().all(|&e| e == 0) && m.0[4] == 0
        };
        if !ok && passed {
            passed = false;
            witness = if rem.is_zero() { q.clone() } else { rem };
        }
        quotients.push(q);
    }
    let factors: Vec<String> = quotients.iter().map(|q| q.to_string()).collect();
    Ok(IdentityOutcome {
        id: IdentityId::I6,
        passed,
        witness,
        detail: format!("equations equal ({}) times (f, g, h)", factors.join(", ")),
        quotients,
    })
}

fn substitute_rs(p: &MultiPoly, ps: &PolySet) -> Result<MultiPoly> {
    let (rn, rd) = r_fraction(ps);
    let (sn, sd) = s_fraction(ps);
    let (p, _) = p.substitute(Var::R, &fraction(rn, rd))?;
    let (p, _) = p.substitute(Var::S, &fraction(sn, sd))?;
    Ok(p)
}

fn verify_i7(ps: &PolySet) -> Result<IdentityOutcome> {
    let mut quotients = Vec::new();
    let mut witness = MultiPoly::zero();
    let mut passed = true;
    for eq in [&ps.f, &ps.g, &ps.h] {
        let cleared = substitute_rs(eq, ps)?;
        let (q, rem) = cleared.reduce_mod(&ps.r)?;
        if !rem.is_zero() && passed {
            passed = false;
            witness = rem;
        }
        quotients.push(q);
    }
    Ok(IdentityOutcome {
        id: IdentityId::I7,
        passed,
        witness,
        detail: "cleared numerators of f, g, h reduce to zero modulo R".into(),
        quotients,
    })
}

/// `A = -2v(2u-1)(w-1)r + k`
fn a_poly(ps: &PolySet) -> MultiPoly {
    c(-2) * v() * (c(2) * u() - c(1)) * (w() - c(1)) * MultiPoly::var(Var::R) + ps.k.clone()
}

fn verify_i10(ps: &PolySet) -> Result<IdentityOutcome> {
    let a = a_poly(ps);
    // closed-form r
    let (rn, rd) = r_fraction(ps);
    let (closed, _) = a.substitute(Var::R, &fraction(rn, rd))?;
    let (q_closed, rem_closed) = closed.reduce_mod(&ps.r)?;

    // s from g = 0, then r from the resulting equation linear in r
    let g_parts = ps.g.coefficients_in(Var::S);
    if g_parts.len() != 2 {
        return Err(Error::InvalidSubstitution("g is not linear in s".into()));
    }
    let (f_tilde, _) = ps.f.substitute(Var::S, &fraction(-&g_parts[0], g_parts[1].clone()))?;
    let f_parts = f_tilde.coefficients_in(Var::R);
    if f_parts.len() != 2 {
        return Err(Error::InvalidSubstitution("eliminated f is not linear in r".into()));
    }
    let (solved, _) = a.substitute(Var::R, &fraction(-&f_parts[0], f_parts[1].clone()))?;
    let (q_solved, rem_solved) = solved.reduce_mod(&ps.r)?;

    let passed = rem_closed.is_zero() && rem_solved.is_zero();
    let witness = if !rem_closed.is_zero() { rem_closed } else { rem_solved };
    Ok(IdentityOutcome {
        id: IdentityId::I10,
        passed,
        witness,
        detail: format!(
            "A on closed-form r is {} times R; A on the solution of f = g = 0 is ({}) times R",
            if q_closed.is_zero() { "0".to_string() } else { format!("({q_closed})") },
            q_solved
        ),
        quotients: vec![q_closed, q_solved],
    })
}

pub fn verify_all(ps: &PolySet) -> Result<Vec<IdentityOutcome>> {
    IdentityId::ALL.par_iter().map(|&id| verify_identity(id, ps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps() -> PolySet {
        PolySet::from_tables()
    }

    #[test]
    fn arithmetic_basics() {
        let r = ps().r;
        assert!((&r - &r).is_zero());
        assert_eq!(r.len(), 23);
        assert_eq!(r.total_degree(), 7);
        assert_eq!(u() * v(), lin(&[(1, [1, 1, 0, 0, 0])]));
        assert_eq!((u() + c(1)).pow(2), u() * u() + c(2) * u() + c(1));
        let q = lower_v().scale(&rat(-1, 1)) * r;
        assert_eq!(q.total_degree(), 9);
    }

    #[test]
    fn display_is_readable() {
        let p = c(3) * u() * u() * w() - v() + MultiPoly::constant(rat(1, 2));
        assert_eq!(p.to_string(), "3*u^2*w - v + 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitution_examples() {
        let ps = ps();
        let (h2, m) = ps.k.substitute(Var::W, &Substitution::Poly(MultiPoly::constant(rat(3, 4)))).unwrap();
        assert_eq!(m, 0);
        assert_eq!(h2.scale(&rat(2, 1)), ps.h_upper);
        let (same, _) = ps.r.substitute(Var::W, &Substitution::Poly(w())).unwrap();
        assert_eq!(same, ps.r);
        let err = ps.r.substitute(Var::W, &fraction(c(1), MultiPoly::zero())).unwrap_err();
        assert!(matches!(err, Error::InvalidSubstitution(_)));
        let (cleared, m) = ps.k.substitute(Var::W, &fraction(c(3), c(4))).unwrap();
        assert_eq!(m, 1);
        assert_eq!(cleared.scale(&rat(1, 2)), ps.h_upper);
    }

    #[test]
    fn reduce_examples() {
        let ps = ps();
        assert_eq!(ps.r.reduce_mod(&ps.r).unwrap(), (c(1), MultiPoly::zero()));
        assert_eq!((u() * ps.r.clone()).reduce_mod(&ps.r).unwrap(), (u(), MultiPoly::zero()));
        let (q, rem) = ps.k.reduce_mod(&ps.r).unwrap();
        assert!(!rem.is_zero());
        assert_eq!(&(&q * &ps.r) + &rem, ps.k);
        assert_eq!(ps.k.reduce_mod(&MultiPoly::zero()).unwrap_err(), Error::InvalidDivisor);
    }

    #[test]
    fn identity_suite_passes() {
        for outcome in verify_all(&ps()).unwrap() {
            assert!(outcome.passed, "{} failed: {}", outcome.id, outcome.witness);
        }
    }

    #[test]
    fn i6_factors() {
        let out = verify_identity(IdentityId::I6, &ps()).unwrap();
        assert_eq!(out.quotients, vec![-MultiPoly::var(Var::R), c(1), c(1)]);
    }

    #[test]
    fn i7_and_i10_cofactors() {
        let ps = ps();
        let out = verify_identity(IdentityId::I7, &ps).unwrap();
        assert!(out.quotients[0].is_zero());
        assert!(!out.quotients[1].is_zero());
        assert!(out.quotients[2].is_zero());
        let out = verify_identity(IdentityId::I10, &ps).unwrap();
        assert!(out.quotients[0].is_zero());
        let q = &out.quotients[1];
        let multiple = q.reduce_mod(&lower_v()).unwrap();
        assert!(multiple.1.is_zero(), "cofactor {q} should contain 4uv - 4v + 1");
    }

    #[test]
    fn mutated_constant_breaks_i1() {
        let ps = ps();
        let mutated = &ps.r - &c(1);
        let out = verify_identity(IdentityId::I1, &ps.with_r(mutated)).unwrap();
        assert!(!out.passed);
        assert!(!out.witness.is_zero());
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!("I11".parse::<IdentityId>().is_err());
    }
}
