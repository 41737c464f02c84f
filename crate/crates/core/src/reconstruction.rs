//! The inverse map: from an admissible `(u, v, w)` back to the unique
//! canonical quartic `(x+1)x(x-r)(x-s)`, with
//!
//! ```text
//! r = k / (2v(1-2u)(1-w))
//! s = 2(1-u)v·k / ((1 - 4vw + 4uvw)·v(1-2u))  =  4v(4u-1)(1-u)(1-w) / d
//! ```
//!
//! plus exact solving of `R(u, v, ·) = 0` over ℚ(√D) and the `v = 1/2`
//! line family `(C, 1/2, 1-C)`.

use std::cmp::Ordering;

use crate::characterization::{
    eval_d, eval_k, is_ratio_vector_with, r_poly, MembershipVerdict, Tolerances,
};
use crate::field::{rat, Rational, Scalar};
use crate::quartic::{forward_ratio_vector, ratios_from_critical_points, QuarticRoots, RatioVector};
use crate::surd::Surd;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Refuse points that fail the membership test.
    Checked,
    /// Evaluate the formulas anywhere they are defined; results off the
    /// admissible set carry `off_variety = true`.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionResult<S> {
    pub r: S,
    pub s: S,
    /// `s` from the alternative formula with denominator `d`, when `d ≠ 0`.
    pub s_alt: Option<S>,
    /// `[c0, c1, c2, c3, c4]` of `(x+1)x(x-r)(x-s)`.
    pub coefficients: [S; 5],
    /// Predicted critical points `(u-1, rv, (s-r)w + r)`.
    pub critical_points: [S; 3],
    pub off_variety: bool,
}

pub fn reconstruct<S: Scalar>(rv: &RatioVector<S>, mode: Mode) -> Result<ReconstructionResult<S>> {
    reconstruct_with(rv, mode, &Tolerances::default())
}

pub fn reconstruct_with<S: Scalar>(
    rv: &RatioVector<S>,
    mode: Mode,
    tol: &Tolerances,
) -> Result<ReconstructionResult<S>> {
    let member = is_ratio_vector_with(rv, tol)?.is_ratio_vector;
    if mode == Mode::Checked && !member {
        return Err(Error::NotARatioVector);
    }
    let (u, v, w) = (rv.u.clone(), rv.v.clone(), rv.w.clone());
    let one = S::one();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let one_u = one.clone() - u.clone();
    let one_w = one.clone() - w.clone();
    let one_2u = one.clone() - two.clone() * u.clone();
    // 1 - 4vw + 4uvw
    let upper_v = one.clone() - four.clone() * v.clone() * w.clone()
        + four.clone() * u.clone() * v.clone() * w.clone();

    let r_den = two.clone() * v.clone() * one_2u.clone() * one_w.clone();
    let s_den = upper_v.clone() * v.clone() * one_2u;
    for (den, what) in [(&r_den, "2v(1-2u)(1-w)"), (&s_den, "(1 - 4vw + 4uvw)v(1-2u)")] {
        if den.is_zero_value() {
            return Err(Error::FormulaDegenerate(format!("{what} vanishes")));
        }
    }
    let k = eval_k(&u, &v, &w);
    let r = k.clone() / r_den;
    let s = two * one_u.clone() * v.clone() * k / s_den;
    let d = eval_d(&u, &v, &w);
    let s_alt = (!d.is_zero_value()).then(|| {
        four.clone() * v.clone() * (four * u.clone() - one.clone()) * one_u * one_w / d
    });

    let rs = r.clone() * s.clone();
    let coefficients = [
        S::zero(),
        rs.clone(),
        rs - r.clone() - s.clone(),
        one.clone() - r.clone() - s.clone(),
        one.clone(),
    ];
    let critical_points = [u - one, r.clone() * v, (s.clone() - r.clone()) * w + r.clone()];
    Ok(ReconstructionResult { r, s, s_alt, coefficients, critical_points, off_variety: !member })
}

#[derive(Clone, Debug, PartialEq)]
pub struct WRoot {
    pub w: Surd,
    pub verdict: MembershipVerdict<Surd>,
}

/// All real `w` with `R(u, v, w) = 0` for rational `u, v`, ascending, each
/// with its membership verdict. `R` is quadratic in `w`.
pub fn solve_w(u: &Rational, v: &Rational) -> Result<Vec<WRoot>> {
    let coeffs = r_poly().w_coefficients(u, v);
    let get = |i: usize| coeffs.get(i).cloned().unwrap_or_else(|| rat(0, 1));
    if coeffs.len() > 3 {
        return Err(Error::InvalidPoint("R is not quadratic in w".into()));
    }
    let (c, b, a) = (get(0), get(1), get(2));
    let zero = rat(0, 1);
    let mut roots: Vec<Surd> = if a != zero {
        let disc = &b * &b - rat(4, 1) * &a * &c;
        match disc.cmp(&zero) {
            Ordering::Less => Vec::new(),
            Ordering::Equal => vec![Surd::rational(-&b / (rat(2, 1) * &a))],
            Ordering::Greater => {
                let root = Surd::sqrt_of(&disc)?;
                let minus_b = Surd::rational(-b.clone());
                let two_a = Surd::rational(rat(2, 1) * &a);
                vec![(&minus_b - &root) / two_a.clone(), (&minus_b + &root) / two_a]
            }
        }
    } else if b != zero {
        vec![Surd::rational(-c / b)]
    } else {
        // R(u, v, ·) constant: no isolated roots
        Vec::new()
    };
    roots.sort_by(|x, y| x.compare(y).unwrap_or(Ordering::Equal));
    roots
        .into_iter()
        .map(|w| {
            let point = RatioVector::new(Surd::rational(u.clone()), Surd::rational(v.clone()), w.clone());
            Ok(WRoot { verdict: is_ratio_vector_with(&point, &Tolerances::default())?, w })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineFamilyPoint {
    pub c: Rational,
    pub point: RatioVector<Rational>,
    pub verdict: MembershipVerdict<Rational>,
    /// `k` on the line: `C(-1 + 4C - 2C²)`.
    pub k_on_line: Rational,
    pub reconstruction: Option<ReconstructionResult<Rational>>,
}

/// The point `(C, 1/2, 1-C)`, which always lies on `R = 0`.
pub fn line_family(c: &Rational) -> Result<LineFamilyPoint> {
    let point = RatioVector::new(c.clone(), rat(1, 2), rat(1, 1) - c);
    let verdict = is_ratio_vector_with(&point, &Tolerances::default())?;
    let k_on_line = c * (rat(-1, 1) + rat(4, 1) * c - rat(2, 1) * c * c);
    let reconstruction = if verdict.is_ratio_vector {
        Some(reconstruct(&point, Mode::Checked)?)
    } else {
        None
    };
    Ok(LineFamilyPoint { c: c.clone(), point, verdict, k_on_line, reconstruction })
}

/// `1 - √2/2 < C < 1/2`, decided in ℚ(√2).
pub fn in_line_family_interval(c: &Rational) -> bool {
    let lower = Surd::rational(rat(1, 1)) - "sqrt(2)/2".parse::<Surd>().expect("valid literal");
    let c = Surd::rational(c.clone());
    lower.compare(&c) == Ok(Ordering::Less) && c.compare(&Surd::rational(rat(1, 2))) == Ok(Ordering::Less)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundTripReport<S> {
    pub reconstruction: ReconstructionResult<S>,
    /// `p'` at the predicted critical points.
    pub derivative_residuals: [S; 3],
    /// Exact realizations only: whether `p'` vanishes at all three.
    pub derivative_vanishes: Option<bool>,
    /// `-1 < x1 < 0 < x2 < r < x3 < s` for the predicted critical points.
    pub interlaced: bool,
    /// Exact realizations only: ratios of the verified critical points minus the input.
    pub exact_deviation: Option<[S; 3]>,
    /// Forward map of the reconstructed roots in binary64.
    pub numeric_ratios: RatioVector<f64>,
    pub numeric_deviation: [f64; 3],
}

impl<S> RoundTripReport<S> {
    pub fn max_numeric_deviation(&self) -> f64 {
        self.numeric_deviation.iter().cloned().fold(0.0, f64::max)
    }
}

/// Reconstructs `(r, s)`, then maps the roots `(-1, 0, r, s)` forward again.
pub fn round_trip<S: Scalar>(rv: &RatioVector<S>, tol: f64) -> Result<RoundTripReport<S>> {
    let reconstruction = reconstruct(rv, Mode::Checked)?;
    let roots = QuarticRoots::canonical(reconstruction.r.clone(), reconstruction.s.clone())?;
    let crits = reconstruction.critical_points.clone();
    let derivative_residuals = crits.clone().map(|x| roots.derivative(&x));
    let r = roots.roots();
    let interlaced = (0..3).all(|k| {
        r[k].cmp_value(&crits[k]) == Ordering::Less && crits[k].cmp_value(&r[k + 1]) == Ordering::Less
    });
    let (derivative_vanishes, exact_deviation) = if S::EXACT {
        let vanishes = derivative_residuals.iter().all(|x| x.is_zero_value());
        let deviation = (vanishes && interlaced).then(|| {
            let back = ratios_from_critical_points(&roots, &crits);
            [back.u - rv.u.clone(), back.v - rv.v.clone(), back.w - rv.w.clone()]
        });
        (Some(vanishes), deviation)
    } else {
        (None, None)
    };

    let float_roots = QuarticRoots::canonical(reconstruction.r.to_f64(), reconstruction.s.to_f64())?;
    let numeric_ratios = forward_ratio_vector(&float_roots, tol)?;
    let target = rv.to_f64();
    let numeric_deviation = [
        (numeric_ratios.u - target.u).abs(),
        (numeric_ratios.v - target.v).abs(),
        (numeric_ratios.w - target.w).abs(),
    ];
    Ok(RoundTripReport {
        reconstruction,
        derivative_residuals,
        derivative_vanishes,
        interlaced,
        exact_deviation,
        numeric_ratios,
        numeric_deviation,
    })
}
