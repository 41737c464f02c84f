//! The `(u, v, w)` side: the polynomials R, k, d, Q and H, the universal
//! and quartic-specific ratio bounds, the regions Z1, Z2, Z3, and the
//! membership test
//!
//! ```text
//! (u, v, w) is a ratio vector  ⇔  R(u, v, w) = 0  and  (u, v, w) ∈ Z1 ∪ Z2 ∪ Z3
//! ```
//!
//! with
//!
//! ```text
//! Z1: 1/4 < u ≤ 1/3,  1/(4(1-u)) < v < 1/2,  1/2 < w < 1/(4(1-u)(1-v))
//! Z2: 1/4 < u ≤ 1/3,  1/2 < w < 1/(2(1-u)),  1/2 ≤ v < 1/(4(1-u)w),  v < 2/3
//! Z3: 1/3 < u < 1/2,  1/2 < w < 3/4,  1/(4(1-u)) < v < 1/(4(1-u)w),  v < 2/3
//! ```
//!
//! Exact scalars are compared exactly. Floats use [`Tolerances`]: `R = 0` is
//! replaced by `|R| ≤ r_tol`, and a point within `boundary_tol` of a region
//! boundary that decides its label is reported as
//! [`RegionLabel::BoundaryIndeterminate`].

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::coefficients::{table, PolyTable};
use crate::field::{rat, Rational, Scalar};
use crate::quartic::RatioVector;
use crate::{Error, Result};

/// `|R| ≤ DEFAULT_R_TOL` stands in for `R = 0` on the float path.
pub const DEFAULT_R_TOL: f64 = 1e-9;
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub r_tol: f64,
    pub boundary_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { r_tol: DEFAULT_R_TOL, boundary_tol: DEFAULT_BOUNDARY_TOL }
    }
}

/// A polynomial in `u, v, w` stored as coefficients of `w^0, w^1, ...`,
/// each a list of `(i, j, c)` meaning `c·u^i·v^j`.
#[derive(Clone, Debug)]
pub struct UvwPoly {
    by_w: Vec<Vec<(u32, u32, Rational)>>,
    max_u: u32,
    max_v: u32,
}

impl UvwPoly {
    pub fn from_table(table: &PolyTable) -> Self {
        let mut by_w: Vec<Vec<(u32, u32, Rational)>> = Vec::new();
        let (mut max_u, mut max_v) = (0, 0);
        for ([i, j, k, r, s], c) in &table.terms {
            assert!(*r == 0 && *s == 0, "{} involves r or s", table.name);
            let k = *k as usize;
            if by_w.len() <= k {
                by_w.resize(k + 1, Vec::new());
            }
            by_w[k].push((*i, *j, c.clone()));
            max_u = max_u.max(*i);
            max_v = max_v.max(*j);
        }
        UvwPoly { by_w, max_u, max_v }
    }

    pub fn w_degree(&self) -> usize {
        self.by_w.len().saturating_sub(1)
    }

    /// Coefficients of `w^0, w^1, ...` at the given `(u, v)`.
    pub fn w_coefficients<S: Scalar>(&self, u: &S, v: &S) -> Vec<S> {
        let powers = |x: &S, n: u32| {
            let mut p = vec![S::one()];
            for _ in 0..n {
                let next = p.last().cloned().unwrap_or_else(S::one) * x.clone();
                p.push(next);
            }
            p
        };
        let up = powers(u, self.max_u);
        let vp = powers(v, self.max_v);
        self.by_w
            .iter()
            .map(|terms| {
                terms.iter().fold(S::zero(), |acc, (i, j, c)| {
                    acc + S::from_rational(c) * up[*i as usize].clone() * vp[*j as usize].clone()
                })
            })
            .collect()
    }

    /// Horner in `w` over the collected coefficients.
    pub fn eval<S: Scalar>(&self, u: &S, v: &S, w: &S) -> S {
        self.w_coefficients(u, v)
            .into_iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * w.clone() + c)
    }
}

fn cached(cell: &'static OnceLock<UvwPoly>, name: &str) -> &'static UvwPoly {
    cell.get_or_init(|| UvwPoly::from_table(table(name)))
}

pub fn r_poly() -> &'static UvwPoly {
    static CELL: OnceLock<UvwPoly> = OnceLock::new();
    cached(&CELL, "R")
}

pub fn k_poly() -> &'static UvwPoly {
    static CELL: OnceLock<UvwPoly> = OnceLock::new();
    cached(&CELL, "k")
}

pub fn d_poly() -> &'static UvwPoly {
    static CELL: OnceLock<UvwPoly> = OnceLock::new();
    cached(&CELL, "d")
}

fn h_poly() -> &'static UvwPoly {
    static CELL: OnceLock<UvwPoly> = OnceLock::new();
    cached(&CELL, "H")
}

pub fn eval_r<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    r_poly().eval(u, v, w)
}

pub fn eval_k<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    k_poly().eval(u, v, w)
}

pub fn eval_d<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    d_poly().eval(u, v, w)
}

/// `Q = (1 - 4v + 4uv)·R`.
pub fn eval_q<S: Scalar>(u: &S, v: &S, w: &S) -> S {
    let factor = S::one() - S::from_int(4) * v.clone() + S::from_int(4) * u.clone() * v.clone();
    factor * eval_r(u, v, w)
}

/// `H(u, v) = 2·k(u, v, 3/4)`.
pub fn eval_h<S: Scalar>(u: &S, v: &S) -> S {
    h_poly().eval(u, v, &S::zero())
}

/// Universal bounds `1/(n-k+1) < σk < k/(k+1)` for a degree `n` polynomial.
pub fn peyser_bounds(n: u32, k: u32) -> Result<(Rational, Rational)> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::InvalidIndex(format!("need n >= 2 and 1 <= k <= n-1, got n = {n}, k = {k}")));
    }
    Ok((rat(1, (n - k + 1) as i64), rat(k as i64, (k + 1) as i64)))
}

/// One strict inequality `lhs < rhs` (or `lhs > rhs`) checked at a point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck<S> {
    pub name: &'static str,
    /// Value of the bounding expression.
    #[serde(skip)]
    pub bound: S,
    pub satisfied: bool,
    /// Distance to the bound, positive exactly when satisfied.
    #[serde(skip)]
    pub margin: S,
}

fn strict_lower<S: Scalar>(name: &'static str, value: &S, bound: S) -> BoundCheck<S> {
    let margin = value.clone() - bound.clone();
    BoundCheck { name, satisfied: margin.is_positive(), bound, margin }
}

fn strict_upper<S: Scalar>(name: &'static str, value: &S, bound: S) -> BoundCheck<S> {
    let margin = bound.clone() - value.clone();
    BoundCheck { name, satisfied: margin.is_positive(), bound, margin }
}

/// The box `1/4 < u < 1/2, 1/3 < v < 2/3, 1/2 < w < 3/4`.
pub fn box_bounds<S: Scalar>(rv: &RatioVector<S>) -> Vec<BoundCheck<S>> {
    vec![
        strict_lower("u > 1/4", &rv.u, S::ratio(1, 4)),
        strict_upper("u < 1/2", &rv.u, S::ratio(1, 2)),
        strict_lower("v > 1/3", &rv.v, S::ratio(1, 3)),
        strict_upper("v < 2/3", &rv.v, S::ratio(2, 3)),
        strict_lower("w > 1/2", &rv.w, S::ratio(1, 2)),
        strict_upper("w < 3/4", &rv.w, S::ratio(3, 4)),
    ]
}

pub fn in_box<S: Scalar>(rv: &RatioVector<S>) -> bool {
    box_bounds(rv).iter().all(|b| b.satisfied)
}

/// Necessary bounds for quartic ratio vectors:
/// `1/(4(1-u)) < v < 1/(4(1-u)w)`, `1/(4(1-v)) < w < 1/(4(1-u)(1-v))` and
/// `w < 1/(2(1-u))`.
pub fn l1_bounds<S: Scalar>(rv: &RatioVector<S>) -> Result<Vec<BoundCheck<S>>> {
    rv.check_compatible()?;
    let one = S::one();
    let four = S::from_int(4);
    let one_u = one.clone() - rv.u.clone();
    let one_v = one.clone() - rv.v.clone();
    if one_u.is_zero_value() || one_v.is_zero_value() || rv.w.is_zero_value() {
        return Err(Error::InvalidPoint(format!(
            "bounds undefined at u = {}, v = {}, w = {}",
            rv.u.render(),
            rv.v.render(),
            rv.w.render()
        )));
    }
    Ok(vec![
        strict_lower("v > 1/(4(1-u))", &rv.v, one.clone() / (four.clone() * one_u.clone())),
        strict_upper(
            "v < 1/(4(1-u)w)",
            &rv.v,
            one.clone() / (four.clone() * one_u.clone() * rv.w.clone()),
        ),
        strict_lower("w > 1/(4(1-v))", &rv.w, one.clone() / (four.clone() * one_v.clone())),
        strict_upper("w < 1/(4(1-u)(1-v))", &rv.w, one.clone() / (four * one_u.clone() * one_v)),
        strict_upper("w < 1/(2(1-u))", &rv.w, one / (S::from_int(2) * one_u)),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RegionLabel {
    Z1,
    Z2,
    Z3,
    Outside,
    BoundaryIndeterminate,
}

impl RegionLabel {
    pub fn is_admissible(self) -> bool {
        matches!(self, RegionLabel::Z1 | RegionLabel::Z2 | RegionLabel::Z3)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::Z1 => "Z1",
            RegionLabel::Z2 => "Z2",
            RegionLabel::Z3 => "Z3",
            RegionLabel::Outside => "Outside",
            RegionLabel::BoundaryIndeterminate => "BoundaryIndeterminate",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Three-valued truth for toleranced comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Truth {
    Yes,
    No,
    Unknown,
}

struct Comparator {
    tol: f64,
}

impl Comparator {
    fn decide<S: Scalar>(&self, diff: S, strict: bool) -> Truth {
        if S::EXACT {
            return match diff.signum_ord() {
                std::cmp::Ordering::Greater => Truth::Yes,
                std::cmp::Ordering::Equal if !strict => Truth::Yes,
                _ => Truth::No,
            };
        }
        let d = diff.to_f64();
        if d > self.tol {
            Truth::Yes
        } else if d < -self.tol {
            Truth::No
        } else {
            Truth::Unknown
        }
    }

    fn lt<S: Scalar>(&self, a: &S, b: &S) -> Truth {
        self.decide(b.clone() - a.clone(), true)
    }

    fn le<S: Scalar>(&self, a: &S, b: &S) -> Truth {
        self.decide(b.clone() - a.clone(), false)
    }
}

/// Conjunction evaluated left to right, stopping at the first definite
/// failure so later conditions may assume the earlier ones (nonzero
/// denominators in particular).
fn all_of(conditions: &[&dyn Fn() -> Truth]) -> Truth {
    let mut acc = Truth::Yes;
    for condition in conditions {
        match condition() {
            Truth::No => return Truth::No,
            Truth::Unknown => acc = Truth::Unknown,
            Truth::Yes => {}
        }
    }
    acc
}

fn region_truths<S: Scalar>(rv: &RatioVector<S>, boundary_tol: f64) -> [Truth; 3] {
    let c = Comparator { tol: boundary_tol };
    let (u, v, w) = (&rv.u, &rv.v, &rv.w);
    let one = S::one();
    let four = S::from_int(4);
    let q = |n, d| S::ratio(n, d);
    let one_u = || one.clone() - u.clone();
    let v_low = || one.clone() / (four.clone() * one_u());
    let v_high = || one.clone() / (four.clone() * one_u() * w.clone());

    let z1 = all_of(&[
        &|| c.lt(&q(1, 4), u),
        &|| c.le(u, &q(1, 3)),
        &|| c.lt(&v_low(), v),
        &|| c.lt(v, &q(1, 2)),
        &|| c.lt(&q(1, 2), w),
        &|| c.lt(w, &(one.clone() / (four.clone() * one_u() * (one.clone() - v.clone())))),
    ]);
    let z2 = all_of(&[
        &|| c.lt(&q(1, 4), u),
        &|| c.le(u, &q(1, 3)),
        &|| c.lt(&q(1, 2), w),
        &|| c.lt(w, &(one.clone() / (S::from_int(2) * one_u()))),
        &|| c.le(&q(1, 2), v),
        &|| c.lt(v, &v_high()),
        &|| c.lt(v, &q(2, 3)),
    ]);
    let z3 = all_of(&[
        &|| c.lt(&q(1, 3), u),
        &|| c.lt(u, &q(1, 2)),
        &|| c.lt(&q(1, 2), w),
        &|| c.lt(w, &q(3, 4)),
        &|| c.lt(&v_low(), v),
        &|| c.lt(v, &v_high()),
        &|| c.lt(v, &q(2, 3)),
    ]);
    [z1, z2, z3]
}

pub fn classify_region<S: Scalar>(rv: &RatioVector<S>) -> Result<RegionLabel> {
    classify_region_with(rv, DEFAULT_BOUNDARY_TOL)
}

/// The unique region among Z1, Z2, Z3 containing the point, else `Outside`.
/// Never returns `BoundaryIndeterminate` for exact scalars.
pub fn classify_region_with<S: Scalar>(rv: &RatioVector<S>, boundary_tol: f64) -> Result<RegionLabel> {
    rv.check_compatible()?;
    let truths = region_truths(rv, boundary_tol);
    let labels = [RegionLabel::Z1, RegionLabel::Z2, RegionLabel::Z3];
    let definite: Vec<RegionLabel> =
        labels.iter().zip(&truths).filter(|(_, t)| **t == Truth::Yes).map(|(l, _)| *l).collect();
    Ok(match definite.as_slice() {
        [label] => *label,
        [] if truths.contains(&Truth::Unknown) => RegionLabel::BoundaryIndeterminate,
        [] => RegionLabel::Outside,
        // the regions are disjoint, so this needs a tolerance larger than their separation
        _ => RegionLabel::BoundaryIndeterminate,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipVerdict<S> {
    pub is_ratio_vector: bool,
    pub region: RegionLabel,
    /// `R = 0` exactly, or `|R| ≤ r_tol` on the float path.
    pub on_surface: bool,
    pub r_value: S,
    pub k_value: S,
    pub bound_report: Vec<BoundCheck<S>>,
    pub diagnostics: Vec<String>,
}

pub fn is_ratio_vector<S: Scalar>(rv: &RatioVector<S>) -> Result<MembershipVerdict<S>> {
    is_ratio_vector_with(rv, &Tolerances::default())
}

pub fn is_ratio_vector_with<S: Scalar>(
    rv: &RatioVector<S>,
    tol: &Tolerances,
) -> Result<MembershipVerdict<S>> {
    rv.check_compatible()?;
    let r_value = eval_r(&rv.u, &rv.v, &rv.w);
    let k_value = eval_k(&rv.u, &rv.v, &rv.w);
    let on_surface = if S::EXACT {
        r_value.is_zero_value()
    } else {
        r_value.to_f64().abs() <= tol.r_tol
    };
    let region = classify_region_with(rv, tol.boundary_tol)?;
    let is_ratio_vector = on_surface && region.is_admissible();

    let mut bound_report = box_bounds(rv);
    if let Ok(l1) = l1_bounds(rv) {
        bound_report.extend(l1);
    }
    let mut diagnostics = Vec::new();
    if !S::EXACT {
        diagnostics.push(format!("float path: |R| <= {:e} used in place of R = 0", tol.r_tol));
    }
    if region == RegionLabel::BoundaryIndeterminate {
        diagnostics.push(format!("point within {:e} of a region boundary", tol.boundary_tol));
    }
    if is_ratio_vector && !k_value.is_positive() {
        diagnostics.push(format!("k = {} is not positive at an admissible point", k_value.render()));
    }
    Ok(MembershipVerdict { is_ratio_vector, region, on_surface, r_value, k_value, bound_report, diagnostics })
}

/// Alternative test: `R = 0`, inside the box, `1/(4(1-u)) < v < 1/(4(1-u)w)`
/// and `k > 0`. Agrees with [`is_ratio_vector`] on exact inputs.
pub fn equivalent_condition<S: Scalar>(rv: &RatioVector<S>, tol: &Tolerances) -> Result<bool> {
    rv.check_compatible()?;
    let r_value = eval_r(&rv.u, &rv.v, &rv.w);
    let on_surface = if S::EXACT { r_value.is_zero_value() } else { r_value.to_f64().abs() <= tol.r_tol };
    if !on_surface || !in_box(rv) {
        return Ok(false);
    }
    let l1 = l1_bounds(rv)?;
    let v_bounds = l1.iter().take(2).all(|b| b.satisfied);
    Ok(v_bounds && eval_k(&rv.u, &rv.v, &rv.w).is_positive())
}
