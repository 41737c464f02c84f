//! Roots side of the picture: quartics with four distinct real roots, their
//! critical points, and the forward map to the ratio vector.
//!
//! Critical points are isolated by bisection inside each root interval.
//! For a monic quartic `p(x) = ∏(x - ri)` the derivative alternates in sign
//! at the roots (`p'(r1) < 0`, `p'(r2) > 0`, `p'(r3) < 0`, `p'(r4) > 0`), so
//! every interval `(rk, rk+1)` brackets exactly one critical point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{check_compatible, Rational, Scalar};
use crate::surd::Surd;
use crate::{Error, Result};

/// Default bisection tolerance, relative to the width of each root interval.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Float inputs whose smallest root gap is below this fraction of the root
/// span are rejected as degenerate.
pub const MIN_RELATIVE_GAP: f64 = 1e-9;

pub const MAX_BISECTIONS: u32 = 200;

/// Four strictly increasing real roots of a monic quartic.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticRoots<S> {
    roots: [S; 4],
}

impl<S: Scalar> QuarticRoots<S> {
    pub fn new(roots: [S; 4]) -> Result<Self> {
        check_compatible(&roots.iter().collect::<Vec<_>>())?;
        if !S::EXACT && roots.iter().any(|r| !r.to_f64().is_finite()) {
            return Err(Error::DegenerateRoots("roots must be finite".into()));
        }
        for k in 0..3 {
            if roots[k].cmp_value(&roots[k + 1]) != Ordering::Less {
                return Err(Error::DegenerateRoots(format!(
                    "roots must be strictly increasing, got {} >= {}",
                    roots[k].render(),
                    roots[k + 1].render()
                )));
            }
        }
        if !S::EXACT {
            let span = (roots[3].clone() - roots[0].clone()).to_f64();
            for k in 0..3 {
                let gap = (roots[k + 1].clone() - roots[k].clone()).to_f64();
                if gap < MIN_RELATIVE_GAP * span {
                    return Err(Error::DegenerateRoots(format!(
                        "root gap {gap:e} below {MIN_RELATIVE_GAP:e} of the span"
                    )));
                }
            }
        }
        Ok(QuarticRoots { roots })
    }

    /// Roots `(-1, 0, r, s)`.
    pub fn canonical(r: S, s: S) -> Result<Self> {
        Self::new([S::from_int(-1), S::zero(), r, s])
    }

    pub fn roots(&self) -> &[S; 4] {
        &self.roots
    }

    pub fn eval(&self, x: &S) -> S {
        self.roots.iter().fold(S::one(), |acc, r| acc * (x.clone() - r.clone()))
    }

    /// `p'(x) = Σ_i ∏_{j≠i} (x - rj)`.
    pub fn derivative(&self, x: &S) -> S {
        let diffs: Vec<S> = self.roots.iter().map(|r| x.clone() - r.clone()).collect();
        (0..4).fold(S::zero(), |acc, i| {
            let term = (0..4)
                .filter(|&j| j != i)
                .fold(S::one(), |t, j| t * diffs[j].clone());
            acc + term
        })
    }

    /// Coefficients `[c0, c1, c2, c3, 1]` of the monic expansion.
    pub fn coefficients(&self) -> [S; 5] {
        let [a, b, c, d] = self.roots.clone();
        let e1 = a.clone() + b.clone() + c.clone() + d.clone();
        let e2 = a.clone() * b.clone()
            + a.clone() * c.clone()
            + a.clone() * d.clone()
            + b.clone() * c.clone()
            + b.clone() * d.clone()
            + c.clone() * d.clone();
        let e3 = a.clone() * b.clone() * c.clone()
            + a.clone() * b.clone() * d.clone()
            + a.clone() * c.clone() * d.clone()
            + b.clone() * c.clone() * d.clone();
        let e4 = a * b * c * d;
        [e4, -e3, e2, -e1, S::one()]
    }

    /// Roots of `p(-x)`: `(-r4, -r3, -r2, -r1)`.
    pub fn reflected(&self) -> Self {
        let [a, b, c, d] = self.roots.clone();
        QuarticRoots { roots: [-d, -c, -b, -a] }
    }

    /// Roots of `p((x - shift)/scale)`, i.e. `scale·ri + shift`, for `scale > 0`.
    pub fn affine_image(&self, scale: &S, shift: &S) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::InvalidPoint("affine scale must be positive".into()));
        }
        Self::new(self.roots.clone().map(|r| scale.clone() * r + shift.clone()))
    }
}

/// Roots `(-1, 0, r, s)` with `0 < r < s`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalQuartic<S> {
    r: S,
    s: S,
}

impl<S: Scalar> CanonicalQuartic<S> {
    pub fn new(r: S, s: S) -> Result<Self> {
        check_compatible(&[&r, &s])?;
        if !r.is_positive() || r.cmp_value(&s) != Ordering::Less {
            return Err(Error::DegenerateRoots(format!(
                "canonical roots need 0 < r < s, got r = {}, s = {}",
                r.render(),
                s.render()
            )));
        }
        Ok(CanonicalQuartic { r, s })
    }

    pub fn r(&self) -> &S {
        &self.r
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    pub fn roots(&self) -> Result<QuarticRoots<S>> {
        QuarticRoots::canonical(self.r.clone(), self.s.clone())
    }
}

/// The increasing affine map `t(x) = scale·x + shift`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<S> {
    pub scale: S,
    pub shift: S,
}

impl<S: Scalar> AffineMap<S> {
    pub fn apply(&self, x: &S) -> S {
        self.scale.clone() * x.clone() + self.shift.clone()
    }
}

/// Moves `(r1, r2, r3, r4)` to `(-1, 0, r, s)` via `t(x) = (x - r2)/(r2 - r1)`.
pub fn normalize_roots<S: Scalar>(roots: &QuarticRoots<S>) -> (CanonicalQuartic<S>, AffineMap<S>) {
    let [r1, r2, r3, r4] = roots.roots().clone();
    let unit = r2.clone() - r1;
    let map = AffineMap { scale: S::one() / unit.clone(), shift: -(r2.clone() / unit) };
    let canonical = CanonicalQuartic { r: map.apply(&r3), s: map.apply(&r4) };
    (canonical, map)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoints<S> {
    /// Midpoints of the enclosures (exact values when an enclosure collapsed).
    pub points: [S; 3],
    pub enclosures: [(S, S); 3],
    /// Largest enclosure width; zero when every point is exact.
    pub certified_width: S,
}

/// Number of halvings that shrink an interval to `tol` times its width.
fn bisection_steps(tol: f64) -> Result<u32> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::InvalidTolerance(format!("{tol}")));
    }
    if tol >= 1.0 {
        return Ok(0);
    }
    let steps = (1.0 / tol).log2().ceil() as u32;
    if steps > MAX_BISECTIONS {
        return Err(Error::NoConvergence(MAX_BISECTIONS));
    }
    Ok(steps)
}

fn bisect<S: Scalar>(
    roots: &QuarticRoots<S>,
    mut lo: S,
    mut hi: S,
    lo_sign: Ordering,
    steps: u32,
) -> (S, S) {
    let half = S::ratio(1, 2);
    for _ in 0..steps {
        let mid = (lo.clone() + hi.clone()) * half.clone();
        if !S::EXACT && (mid == lo || mid == hi) {
            break;
        }
        match roots.derivative(&mid).signum_ord() {
            Ordering::Equal => return (mid.clone(), mid),
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
    (lo, hi)
}

const LEFT_SIGNS: [Ordering; 3] = [Ordering::Less, Ordering::Greater, Ordering::Less];

/// The three critical points, each enclosed within `tol` times the width of
/// its root interval.
pub fn critical_points<S: Scalar>(roots: &QuarticRoots<S>, tol: f64) -> Result<CriticalPoints<S>> {
    let steps = bisection_steps(tol)?;
    let r = roots.roots();
    let half = S::ratio(1, 2);
    let enclosures: [(S, S); 3] =
        std::array::from_fn(|k| bisect(roots, r[k].clone(), r[k + 1].clone(), LEFT_SIGNS[k], steps));
    let points = enclosures
        .clone()
        .map(|(lo, hi)| if lo == hi { lo } else { (lo + hi) * half.clone() });
    let certified_width = enclosures
        .iter()
        .map(|(lo, hi)| hi.clone() - lo.clone())
        .fold(S::zero(), |m, w| if w.cmp_value(&m) == Ordering::Greater { w } else { m });
    Ok(CriticalPoints { points, enclosures, certified_width })
}

/// `(u, v, w) = (σ1, σ2, σ3)` with `σk = (xk - rk)/(rk+1 - rk)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioVector<S> {
    pub u: S,
    pub v: S,
    pub w: S,
}

impl<S: Scalar> RatioVector<S> {
    pub fn new(u: S, v: S, w: S) -> Self {
        RatioVector { u, v, w }
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.u.clone(), self.v.clone(), self.w.clone()]
    }

    pub fn to_f64(&self) -> RatioVector<f64> {
        RatioVector::new(self.u.to_f64(), self.v.to_f64(), self.w.to_f64())
    }

    /// Ratio vector of the reflected quartic `p(-x)`: `(1-w, 1-v, 1-u)`.
    pub fn reflected(&self) -> Self {
        RatioVector::new(
            S::one() - self.w.clone(),
            S::one() - self.v.clone(),
            S::one() - self.u.clone(),
        )
    }

    pub fn check_compatible(&self) -> Result<()> {
        check_compatible(&[&self.u, &self.v, &self.w])
    }
}

pub fn ratios_from_critical_points<S: Scalar>(roots: &QuarticRoots<S>, crits: &[S; 3]) -> RatioVector<S> {
    let r = roots.roots();
    let sigma = |k: usize| (crits[k].clone() - r[k].clone()) / (r[k + 1].clone() - r[k].clone());
    RatioVector::new(sigma(0), sigma(1), sigma(2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Forward<S> {
    pub critical_points: CriticalPoints<S>,
    pub ratios: RatioVector<S>,
    /// Enclosure of each ratio induced by the critical point enclosures.
    pub ratio_enclosures: [(S, S); 3],
}

pub fn forward<S: Scalar>(roots: &QuarticRoots<S>, tol: f64) -> Result<Forward<S>> {
    let critical_points = critical_points(roots, tol)?;
    let ratios = ratios_from_critical_points(roots, &critical_points.points);
    let r = roots.roots();
    let ratio_enclosures = std::array::from_fn(|k| {
        let gap = r[k + 1].clone() - r[k].clone();
        let (lo, hi) = &critical_points.enclosures[k];
        ((lo.clone() - r[k].clone()) / gap.clone(), (hi.clone() - r[k].clone()) / gap)
    });
    Ok(Forward { critical_points, ratios, ratio_enclosures })
}

pub fn forward_ratio_vector<S: Scalar>(roots: &QuarticRoots<S>, tol: f64) -> Result<RatioVector<S>> {
    Ok(forward(roots, tol)?.ratios)
}

/// `|Ej(roots) - Ej(crits)|` for `j = 1, 2, 3`, with `Ej = ej / C(n, j)`
/// taken over the four roots and over the three critical points.
pub fn symmetric_check<S: Scalar>(roots: &QuarticRoots<S>, crits: &[S; 3]) -> [S; 3] {
    let [a, b, c, d] = roots.roots().clone();
    let e1 = a.clone() + b.clone() + c.clone() + d.clone();
    let e2 = a.clone() * b.clone()
        + a.clone() * c.clone()
        + a.clone() * d.clone()
        + b.clone() * c.clone()
        + b.clone() * d.clone()
        + c.clone() * d.clone();
    let e3 = a.clone() * b.clone() * c.clone()
        + a.clone() * b.clone() * d.clone()
        + a * c.clone() * d.clone()
        + b * c * d;
    let [x, y, z] = crits.clone();
    let f1 = x.clone() + y.clone() + z.clone();
    let f2 = x.clone() * y.clone() + x.clone() * z.clone() + y.clone() * z.clone();
    let f3 = x * y * z;
    [
        (e1 / S::from_int(4) - f1 / S::from_int(3)).abs_value(),
        (e2 / S::from_int(6) - f2 / S::from_int(3)).abs_value(),
        (e3 / S::from_int(4) - f3).abs_value(),
    ]
}

/// Result of the forward map on exact rational roots.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactForward {
    /// `p'` has a rational root, so all critical points and ratios are exact
    /// elements of a single quadratic field.
    Closed { critical_points: [Surd; 3], ratios: RatioVector<Surd> },
    /// No closed form: certified rational enclosures from bisection.
    Enclosed(Forward<Rational>),
}

impl ExactForward {
    pub fn ratios_f64(&self) -> RatioVector<f64> {
        match self {
            ExactForward::Closed { ratios, .. } => ratios.to_f64(),
            ExactForward::Enclosed(f) => f.ratios.to_f64(),
        }
    }

    pub fn critical_points_f64(&self) -> [f64; 3] {
        match self {
            ExactForward::Closed { critical_points, .. } => critical_points.clone().map(|x| x.to_f64()),
            ExactForward::Enclosed(f) => f.critical_points.points.clone().map(|x| x.to_f64()),
        }
    }
}

pub fn forward_exact(roots: &QuarticRoots<Rational>, tol: f64) -> Result<ExactForward> {
    if let Some(crits) = exact_critical_points(roots) {
        let surd_roots = QuarticRoots { roots: roots.roots().clone().map(Surd::rational) };
        let ratios = ratios_from_critical_points(&surd_roots, &crits);
        return Ok(ExactForward::Closed { critical_points: crits, ratios });
    }
    Ok(ExactForward::Enclosed(forward(roots, tol)?))
}

/// Exact critical points when `p'` has a rational root: that root is found
/// as the simplest rational in a sufficiently narrow enclosure, and the
/// other two come from the deflated quadratic.
pub fn exact_critical_points(roots: &QuarticRoots<Rational>) -> Option<[Surd; 3]> {
    let c = roots.coefficients();
    // p'(x) = 4x³ + 3c3x² + 2c2x + c1
    let deriv: [Rational; 4] = [
        c[1].clone(),
        &c[2] * Rational::from_integer(2.into()),
        &c[3] * Rational::from_integer(3.into()),
        Rational::from_integer(4.into()),
    ];
    let lcm = deriv.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let leading = Rational::from_integer(lcm * 4);
    // distinct rationals with denominators dividing `leading` are ≥ 1/leading² apart
    let separation = (&leading * &leading).recip();
    let r = roots.roots();
    let rational_root = (0..3).find_map(|k| {
        let width = &r[k + 1] - &r[k];
        let mut steps = 0u32;
        let mut w = width;
        while w >= separation {
            w /= Rational::from_integer(2.into());
            steps += 1;
            if steps > MAX_BISECTIONS {
                return None;
            }
        }
        let (lo, hi) = bisect(roots, r[k].clone(), r[k + 1].clone(), LEFT_SIGNS[k], steps);
        let q = simplest_rational_between(&lo, &hi);
        roots.derivative(&q).is_zero().then_some(q)
    })?;

    // synthetic division of p' by (x - q)
    let a2 = deriv[3].clone();
    let a1 = &deriv[2] + &a2 * &rational_root;
    let a0 = &deriv[1] + &a1 * &rational_root;
    let disc = &a1 * &a1 - Rational::from_integer(4.into()) * &a2 * &a0;
    let sqrt_disc = Surd::sqrt_of(&disc).ok()?;
    let two_a = Surd::rational(Rational::from_integer(2.into()) * &a2);
    let minus_b = Surd::rational(-a1);
    let mut crits = [
        Surd::rational(rational_root),
        (&minus_b - &sqrt_disc) / two_a.clone(),
        (&minus_b + &sqrt_disc) / two_a,
    ];
    crits.sort_by(surd_cmp);
    let interlaced = (0..3).all(|k| {
        let lo = Surd::rational(r[k].clone());
        let hi = Surd::rational(r[k + 1].clone());
        surd_cmp(&lo, &crits[k]) == Ordering::Less && surd_cmp(&crits[k], &hi) == Ordering::Less
    });
    interlaced.then_some(crits)
}

// all three share one radicand by construction
fn surd_cmp(a: &Surd, b: &Surd) -> Ordering {
    a.compare(b).unwrap_or(Ordering::Equal)
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !Signed::is_positive(lo) && !hi.is_negative() {
        return <Rational as Zero>::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    let floor = lo.floor();
    if &floor == lo {
        return floor;
    }
    let next = &floor + <Rational as One>::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_rational_between(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn qroots(r: [(i64, i64); 4]) -> QuarticRoots<Rational> {
        QuarticRoots::new(r.map(|(n, d)| rat(n, d))).unwrap()
    }

    fn example1() -> QuarticRoots<Rational> {
        qroots([(1, 1), (3, 2), (13, 8), (7, 4)])
    }

    #[test]
    fn normalize_examples() {
        let (c, m) = normalize_roots(&qroots([(-1, 1), (0, 1), (1, 4), (1, 2)]));
        assert_eq!((c.r(), c.s()), (&rat(1, 4), &rat(1, 2)));
        assert_eq!((m.scale, m.shift), (rat(1, 1), rat(0, 1)));

        let (c, m) = normalize_roots(&example1());
        assert_eq!((c.r(), c.s()), (&rat(1, 4), &rat(1, 2)));
        assert_eq!((m.scale, m.shift), (rat(2, 1), rat(-3, 1)));

        let (c, m) = normalize_roots(&qroots([(0, 1), (1, 1), (2, 1), (3, 1)]));
        assert_eq!((c.r(), c.s()), (&rat(1, 1), &rat(2, 1)));
        assert_eq!((m.scale, m.shift), (rat(1, 1), rat(-1, 1)));
    }

    #[test]
    fn degenerate_roots_rejected() {
        assert!(matches!(QuarticRoots::new([0.0, 1.0, 1.0, 2.0]), Err(Error::DegenerateRoots(_))));
        assert!(matches!(QuarticRoots::new([0.0, 2.0, 1.0, 3.0]), Err(Error::DegenerateRoots(_))));
        assert!(matches!(
            QuarticRoots::new([0.0, 1.0, 1.0 + 1e-10, 2.0]),
            Err(Error::DegenerateRoots(_))
        ));
        assert!(matches!(QuarticRoots::new([0.0, 1.0, 2.0, f64::NAN]), Err(Error::DegenerateRoots(_))));
        assert!(CanonicalQuartic::new(rat(1, 2), rat(1, 4)).is_err());
        // exact inputs only need strict ordering
        assert!(QuarticRoots::new([rat(0, 1), rat(1, 1), rat(1, 1) + rat(1, 10i64.pow(12)), rat(2, 1)]).is_ok());
    }

    #[test]
    fn example1_critical_points_float() {
        let roots = QuarticRoots::new([1.0, 1.5, 1.625, 1.75]).unwrap();
        let cp = critical_points(&roots, DEFAULT_TOL).unwrap();
        for (x, want) in cp.points.iter().zip([1.1506, 1.5560, 1.6996]) {
            assert!((x - want).abs() < 5e-5, "{x} vs {want}");
        }
        let rv = forward_ratio_vector(&roots, DEFAULT_TOL).unwrap();
        for (x, want) in rv.to_array().iter().zip([0.3013, 0.4481, 0.5968]) {
            assert!((x - want).abs() < 5e-5, "{x} vs {want}");
        }
    }

    #[test]
    fn biquadratic_closed_form() {
        // p = x⁴ - (5/4)x² + 1/4, p' = x(4x² - 5/2): critical points 0, ±√10/4
        let roots = QuarticRoots::new([-1.0, -0.5, 0.5, 1.0]).unwrap();
        let cp = critical_points(&roots, DEFAULT_TOL).unwrap();
        let r = 10f64.sqrt() / 4.0;
        for (x, want) in cp.points.iter().zip([-r, 0.0, r]) {
            assert!((x - want).abs() < 1e-12);
        }
        let rv = forward_ratio_vector(&roots, DEFAULT_TOL).unwrap();
        let s = 10f64.sqrt() / 2.0;
        for (x, want) in rv.to_array().iter().zip([2.0 - s, 0.5, s - 1.0]) {
            assert!((x - want).abs() < 1e-11);
        }

        let exact = exact_critical_points(&qroots([(-1, 1), (-1, 2), (1, 2), (1, 1)])).unwrap();
        let root10: Surd = "sqrt(10)/4".parse().unwrap();
        assert_eq!(exact, [-root10.clone(), Surd::rational(rat(0, 1)), root10]);
    }

    #[test]
    fn symmetric_configuration_exact() {
        let roots = qroots([(-1, 1), (0, 1), (1, 20), (21, 20)]);
        let crits = exact_critical_points(&roots).unwrap();
        let want = [rat(-7, 10), rat(1, 40), rat(3, 4)];
        for (c, w) in crits.iter().zip(&want) {
            assert_eq!(c.as_rational(), Some(w));
        }
        let ExactForward::Closed { ratios, .. } = forward_exact(&roots, DEFAULT_TOL).unwrap() else {
            panic!("expected closed form");
        };
        assert_eq!(ratios.to_array().map(|x| x.as_rational().cloned().unwrap()), [rat(3, 10), rat(1, 2), rat(7, 10)]);
        assert_eq!(symmetric_check(&roots, &want), [rat(0, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn example1_has_no_closed_form_but_encloses() {
        match forward_exact(&example1(), DEFAULT_TOL).unwrap() {
            ExactForward::Enclosed(f) => {
                let width = f.critical_points.certified_width.to_f64();
                assert!(width > 0.0 && width <= DEFAULT_TOL * 0.5);
                for k in 0..3 {
                    let (lo, hi) = &f.critical_points.enclosures[k];
                    assert!(roots_derivative_sign_change(&example1(), lo, hi));
                }
            }
            other => panic!("unexpected closed form {other:?}"),
        }
    }

    fn roots_derivative_sign_change(roots: &QuarticRoots<Rational>, lo: &Rational, hi: &Rational) -> bool {
        let a = roots.derivative(lo).signum_ord();
        let b = roots.derivative(hi).signum_ord();
        a != b || a == Ordering::Equal
    }

    #[test]
    fn symmetric_check_residuals() {
        let roots = QuarticRoots::new([1.0, 1.5, 1.625, 1.75]).unwrap();
        let cp = critical_points(&roots, DEFAULT_TOL).unwrap();
        assert!(symmetric_check(&roots, &cp.points).iter().all(|r| *r <= 1e-9));
        let mut bad = cp.points;
        bad[1] += 0.1;
        assert!(!symmetric_check(&roots, &bad).iter().all(|r| *r <= 1e-3));
    }

    #[test]
    fn tolerance_validation() {
        let roots = QuarticRoots::new([0.0, 1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(critical_points(&roots, 0.0), Err(Error::InvalidTolerance(_))));
        assert!(matches!(critical_points(&roots, 1e-70), Err(Error::NoConvergence(200))));
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_rational_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_rational_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_rational_between(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_rational_between(&rat(-1, 10), &rat(1, 10)), rat(0, 1));
        assert_eq!(simplest_rational_between(&rat(7, 5), &rat(7, 5)), rat(7, 5));
    }

    #[test]
    fn coefficients_match_expansion() {
        let c = example1().coefficients();
        // 128x⁴ - 752x³ + 1636x² - 1558x + 546, made monic
        let want = [546, -1558, 1636, -752, 128].map(|n| rat(n, 128));
        assert_eq!(c, want);
    }
}
