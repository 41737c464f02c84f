use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratvec::quartic::{forward_ratio_vector, normalize_roots, QuarticRoots};
use ratvec::symbolic::{verify_all, Monomial, MultiPoly, PolySet, Substitution, Var};
use ratvec::Rational;

fn poly() -> impl Strategy<Value = MultiPoly> {
    let term = (prop::array::uniform5(0u16..3), -9i64..10, 1i64..4);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(e, n, d)| (Monomial(e), Rational::new(n.into(), d.into()))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn reduction_reconstructs_dividend(p in poly(), d in nonzero_poly()) {
        let (q, rem) = p.reduce_mod(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &rem, p);
        let lead = *d.leading_term().unwrap().0;
        for (m, _) in rem.terms() {
            prop_assert!(!lead.divides(m), "{} divisible by leading monomial of {}", rem, d);
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), x in prop::array::uniform5(-5i64..6)) {
        let point = x.map(|n| Rational::from_integer(n.into()));
        prop_assert_eq!((&a * &b).eval(&point), a.eval(&point) * b.eval(&point));
        prop_assert_eq!((&a + &b).eval(&point), a.eval(&point) + b.eval(&point));
    }

    #[test]
    fn fraction_substitution_clears_denominator(p in poly(), n in poly(), dn in 1i64..7, x in prop::array::uniform5(-4i64..5)) {
        let den = MultiPoly::int(dn);
        let (cleared, m) = p.substitute(Var::U, &Substitution::Fraction { num: n.clone(), den }).unwrap();
        let point = x.map(|k| Rational::from_integer(k.into()));
        let mut moved = point.clone();
        moved[0] = n.eval(&point) / Rational::from_integer(dn.into());
        let scale = Rational::from_integer(dn.into()).pow(m as i32);
        prop_assert_eq!(cleared.eval(&point), scale * p.eval(&moved));
    }
}

#[test]
fn identity_suite_passes_symbolically() {
    for outcome in verify_all(&PolySet::from_tables()).unwrap() {
        assert!(outcome.passed, "{}: {}", outcome.id, outcome.witness);
    }
}

fn ev(p: &MultiPoly, u: f64, v: f64, w: f64, r: f64, s: f64) -> f64 {
    p.eval(&[u, v, w, r, s])
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

/// The identities checked by floating-point evaluation, without any
/// polynomial algebra.
#[test]
fn identities_hold_numerically() {
    let ps = PolySet::from_tables();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let u = rng.random_range(0.25..0.5);
        let v = rng.random_range(1.0 / 3.0..2.0 / 3.0);
        let w = rng.random_range(0.5..0.75);
        let (k, rr, d) = (ev(&ps.k, u, v, w, 0.0, 0.0), ev(&ps.r, u, v, w, 0.0, 0.0), ev(&ps.d, u, v, w, 0.0, 0.0));
        let upper = 1.0 - 4.0 * v * w + 4.0 * u * v * w;
        let lower = -1.0 + 4.0 * v - 4.0 * u * v;

        let i1 = 2.0 * v * (4.0 * u - 1.0) * (1.0 - w) * (1.0 - 2.0 * u) * upper + lower * rr;
        assert!(rel_close(d * k, i1, 1e-12), "I1 at ({u}, {v}, {w})");
        let i2 = ev(&ps.r, u, 0.5, w, 0.0, 0.0);
        assert!(rel_close(i2, (1.0 - w - u) * (2.0 * u * w - 2.0 * w + 1.0), 1e-12), "I2");
        let k3 = ev(&ps.k, u, v, 1.0 / (4.0 * (1.0 - u) * (1.0 - v)), 0.0, 0.0);
        assert!(rel_close(k3, (1.0 - 2.0 * v) * (4.0 * u - 1.0) / (2.0 * (1.0 - v)), 1e-12), "I3");
        let k4 = ev(&ps.k, u, v, 1.0 / (2.0 * (1.0 - u)), 0.0, 0.0);
        assert!(rel_close(k4, 2.0 * (2.0 * v - 1.0) * (v - u * v - u), 1e-12), "I4");
        let k5 = ev(&ps.k, u, v, 0.75, 0.0, 0.0);
        assert!(rel_close(2.0 * k5, ev(&ps.h_upper, u, v, 0.0, 0.0, 0.0), 1e-12), "I5");
        assert!(rel_close(4.0 * (1.0 - u) * v * (1.0 - w) - upper, 4.0 * v - 4.0 * u * v - 1.0, 1e-12), "I9");

        // symmetric functions of x1 = u - 1, x2 = rv, x3 = (s - r)w + r
        let r = rng.random_range(0.1..5.0);
        let s = r + rng.random_range(0.1..5.0);
        let (x1, x2, x3) = (u - 1.0, r * v, (s - r) * w + r);
        let e2 = x1 * x2 + x1 * x3 + x2 * x3;
        let (f, g, h) = (ev(&ps.f, u, v, w, r, s), ev(&ps.g, u, v, w, r, s), ev(&ps.h, u, v, w, r, s));
        assert!(rel_close(4.0 * x1 * x2 * x3 + r * s, -r * f, 1e-12), "I6 first equation");
        assert!(rel_close(4.0 * (x1 + x2 + x3) - 3.0 * (-1.0 + r + s), g, 1e-12), "I6 second equation");
        assert!(rel_close(2.0 * e2 - (r * s - r - s), h, 1e-12), "I6 third equation");
    }
}

/// Identities that only hold on the surface, checked at ratio vectors of
/// random quartics.
#[test]
fn surface_identities_hold_numerically() {
    let ps = PolySet::from_tables();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 1000 {
        let mut x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        x.sort_by(f64::total_cmp);
        if x.windows(2).any(|p| p[1] - p[0] < 1e-2) {
            continue;
        }
        let q = QuarticRoots::new(x).unwrap();
        let rv = forward_ratio_vector(&q, 1e-15).unwrap();
        let (u, v, w) = (rv.u, rv.v, rv.w);
        let k = ev(&ps.k, u, v, w, 0.0, 0.0);
        let d = ev(&ps.d, u, v, w, 0.0, 0.0);
        let r = k / (2.0 * v * (1.0 - 2.0 * u) * (1.0 - w));
        let s = 2.0 * (1.0 - u) * v * k / ((1.0 - 4.0 * v * w + 4.0 * u * v * w) * v * (1.0 - 2.0 * u));
        let s_alt = 4.0 * v * (4.0 * u - 1.0) * (1.0 - u) * (1.0 - w) / d;
        let scale = 1.0 + r.abs() + s.abs();
        for poly in [&ps.f, &ps.g, &ps.h] {
            let residual = ev(poly, u, v, w, r, s);
            assert!(residual.abs() <= 1e-6 * scale.powi(3), "I7 residual {residual} at ({u}, {v}, {w})");
        }
        assert!(rel_close(s, s_alt, 1e-7), "I8: {s} vs {s_alt}");
        let (canonical, _) = normalize_roots(&q);
        let a = -2.0 * v * (2.0 * u - 1.0) * (w - 1.0) * canonical.r() + k;
        assert!(a.abs() <= 1e-7 * (1.0 + canonical.r()), "I10 residual {a}");
        checked += 1;
    }
}
