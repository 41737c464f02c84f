use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratvec::characterization::{is_ratio_vector, r_poly};
use ratvec::quartic::{forward_ratio_vector, normalize_roots, QuarticRoots, RatioVector, DEFAULT_TOL};
use ratvec::reconstruction::{reconstruct, round_trip, solve_w, Mode};
use ratvec::{Rational, Scalar, Surd};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exact admissible points from random rational `(u, v)` in the box.
fn admissible_points(seed: u64, wanted: usize) -> Vec<RatioVector<Surd>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();
    for _ in 0..50 * wanted {
        let u = r(1, 4) + r(rng.random_range(1..1000), 4000);
        let v = r(1, 3) + r(rng.random_range(1..1000), 3000);
        for root in solve_w(&u, &v).unwrap() {
            if root.verdict.is_ratio_vector {
                found.push(RatioVector::new(Surd::rational(u.clone()), Surd::rational(v.clone()), root.w));
            }
        }
        if found.len() >= wanted {
            break;
        }
    }
    found
}

#[test]
fn exact_reconstruction_properties() {
    let points = admissible_points(11, 150);
    assert!(points.len() >= 150, "only {} admissible points found", points.len());
    let zero = Surd::rational(r(0, 1));
    for p in &points {
        let rec = reconstruct(p, Mode::Checked).unwrap();
        assert!(rec.r.is_positive() && rec.r.cmp_value(&rec.s).is_lt(), "0 < r < s fails at {p:?}");
        assert_eq!(rec.s_alt.as_ref(), Some(&rec.s), "s formulas disagree at {p:?}");

        let (u, v, w) = (p.u.clone(), p.v.clone(), p.w.clone());
        let one = Surd::rational(r(1, 1));
        let four = Surd::rational(r(4, 1));
        let num = four.clone() * (one.clone() - u.clone()) * v.clone() * (one.clone() - w.clone());
        let den = one.clone() - four.clone() * v.clone() * w.clone() + four.clone() * v.clone() * w.clone() * u.clone();
        assert_eq!(rec.s.clone() / rec.r.clone(), num.clone() / den.clone());
        assert_eq!(num - den, four.clone() * v.clone() - four * u * v - one);

        let trip = round_trip(p, DEFAULT_TOL).unwrap();
        assert_eq!(trip.derivative_vanishes, Some(true));
        assert!(trip.interlaced);
        assert_eq!(trip.exact_deviation, Some([zero.clone(), zero.clone(), zero.clone()]));
        assert!(trip.max_numeric_deviation() < 1e-8);
    }
}

#[test]
fn float_s_formulas_agree_on_surface() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 2000 {
        let roots = {
            let mut x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
            x.sort_by(f64::total_cmp);
            if x.windows(2).any(|p| p[1] - p[0] < 1e-2) {
                continue;
            }
            x
        };
        let q = QuarticRoots::new(roots).unwrap();
        let rv = forward_ratio_vector(&q, 1e-15).unwrap();
        let rec = reconstruct(&rv, Mode::Checked).unwrap();
        let s_alt = rec.s_alt.unwrap();
        assert!(((rec.s - s_alt) / rec.s).abs() < 1e-8, "{} vs {}", rec.s, s_alt);
        let (canonical, _) = normalize_roots(&q);
        assert!(((rec.r - canonical.r()) / canonical.r()).abs() < 1e-6);
        checked += 1;
    }
}

#[test]
fn solve_w_roots_lie_on_surface_and_are_sorted() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let u = r(rng.random_range(1..1000), 1000);
        let v = r(rng.random_range(1..1000), 1000);
        let roots = solve_w(&u, &v).unwrap();
        for pair in roots.windows(2) {
            assert!(pair[0].w.compare(&pair[1].w).unwrap().is_le());
        }
        let (su, sv) = (Surd::rational(u.clone()), Surd::rational(v.clone()));
        for root in &roots {
            assert!(r_poly().eval(&su, &sv, &root.w).is_zero_value());
            let again = is_ratio_vector(&RatioVector::new(su.clone(), sv.clone(), root.w.clone())).unwrap();
            assert_eq!(again.is_ratio_vector, root.verdict.is_ratio_vector);
        }
    }
}
