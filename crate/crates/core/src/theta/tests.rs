use super::*;
use crate::characteristics::{enumerate_chars, HalfChar};
use crate::random::{random_argument, random_tau, rng};
use rand::Rng;

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn tau1(t: C) -> RiemannMatrix<f64> {
    RiemannMatrix::new(vec![vec![t]]).unwrap()
}

fn half(s: &str) -> Characteristic {
    Characteristic::from_half(s.parse().unwrap())
}

/// Direct one-dimensional sum of `theta[a;b](z, t)` over `|n| <= 40`.
fn direct_1d(a: f64, b: f64, z: C, t: C) -> C {
    (-40..=40)
        .map(|n| {
            let v = n as f64 + a;
            (c(0.0, std::f64::consts::PI) * (t * v * v + (z + b) * 2.0 * v)).exp()
        })
        .sum()
}

fn zeros(g: usize) -> Vec<C> {
    vec![c(0.0, 0.0); g]
}

#[test]
fn theta_at_i_matches_direct_sum() {
    let t = tau1(c(0.0, 1.0));
    let got = theta_base(&zeros(1), &t, &EvalConfig::default()).unwrap();
    let oracle: f64 = (-20i32..=20).map(|n| (-std::f64::consts::PI * (n * n) as f64).exp()).sum();
    assert!((got - c(oracle, 0.0)).norm() < 1e-14);
    assert!((got.re - 1.086_434_811_213_308).abs() < 1e-13);
}

#[test]
fn doubling_the_radius_changes_nothing() {
    let cfg = EvalConfig::default();
    for (t, z) in [
        (tau1(c(0.0, 2.0)), vec![c(0.0, 0.0)]),
        (tau1(c(0.3, 0.7)), vec![c(0.2, -0.4)]),
    ] {
        let r = truncation_radius(&t, &cfg).unwrap();
        let v1 = theta_raw_at_radius(&[0.0], &[0.0], &z, &t, r).unwrap();
        let v2 = theta_raw_at_radius(&[0.0], &[0.0], &z, &t, 2 * r).unwrap();
        assert!((v1 - v2).norm() < cfg.tol * envelope(&z, &t));
    }
    let mut r = rng(11);
    for g in 1..=3 {
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        let z = random_argument(g, 0.7, &mut r);
        let a = vec![0.25; g];
        let b = vec![0.5; g];
        let rad = truncation_radius(&t, &cfg).unwrap();
        let v1 = theta_raw_at_radius(&a, &b, &z, &t, rad).unwrap();
        let v2 = theta_raw_at_radius(&a, &b, &z, &t, 2 * rad).unwrap();
        assert!((v1 - v2).norm() < cfg.tol * envelope(&z, &t));
    }
}

#[test]
fn one_dimensional_values_match_direct_sums() {
    let cfg = EvalConfig::default();
    let t = c(0.31, 0.83);
    let tau = tau1(t);
    for (a, b) in [(0.0, 0.0), (0.5, 0.0), (0.25, 0.75), (1.0 / 3.0, 1.0 / 6.0)] {
        for z in [c(0.0, 0.0), c(0.3, -0.2), c(-1.1, 0.9)] {
            let got = theta_raw(&[a], &[b], &[z], &tau, &cfg).unwrap();
            let want = direct_1d(a, b, z, t);
            assert!((got - want).norm() < 1e-11 * want.norm().max(1.0), "{a} {b} {z}");
        }
    }
}

#[test]
fn base_theta_is_even() {
    let cfg = EvalConfig::default();
    let mut r = rng(3);
    for g in 1..=3 {
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        let z = random_argument(g, 0.5, &mut r);
        let neg: Vec<C> = z.iter().map(|x| -x).collect();
        let d = theta_base(&z, &t, &cfg).unwrap() - theta_base(&neg, &t, &cfg).unwrap();
        assert!(d.norm() < 1e-12 * envelope(&z, &t));
    }
}

#[test]
fn odd_nulls_vanish_and_zero_char_is_base() {
    let cfg = EvalConfig::default();
    let mut r = rng(5);
    let t: RiemannMatrix<f64> = random_tau(3, &mut r).unwrap();
    for m in HalfChar::all(3).filter(|m| !m.is_even()) {
        let v = theta_null(&Characteristic::from_half(m), &t, &cfg).unwrap();
        assert!(v.norm() < 1e-12, "{m}: {v}");
    }
    let z = random_argument(3, 0.5, &mut r);
    let a = theta_char(&Characteristic::zero(3), &z, &t, &cfg).unwrap();
    assert_eq!(a, theta_base(&z, &t, &cfg).unwrap());
}

#[test]
fn exponential_factor_form_agrees() {
    let cfg = EvalConfig::default();
    let mut r = rng(17);
    for g in 1..=3 {
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        for denom in [2u32, 4, 6] {
            let top: Vec<i64> = (0..g).map(|_| r.gen_range(0..denom as i64)).collect();
            let bot: Vec<i64> = (0..g).map(|_| r.gen_range(0..denom as i64)).collect();
            let ch = Characteristic::new(g, denom, &top, &bot).unwrap();
            let z = random_argument(g, 0.4, &mut r);
            let (a, b): (Vec<f64>, Vec<f64>) = (ch.a(), ch.b());
            let ta: Vec<C> = (0..g)
                .map(|i| (0..g).map(|j| t.entry(i, j) * a[j]).sum())
                .collect();
            let shifted: Vec<C> = (0..g).map(|i| z[i] + ta[i] + b[i]).collect();
            let ata: C = (0..g).map(|i| ta[i] * a[i]).sum();
            let az: C = (0..g).map(|i| (z[i] + b[i]) * a[i]).sum();
            let factor = (c(0.0, std::f64::consts::PI) * (ata + az * 2.0)).exp();
            let want = factor * theta_base(&shifted, &t, &cfg).unwrap();
            let got = theta_char(&ch, &z, &t, &cfg).unwrap();
            assert!((got - want).norm() < 1e-10 * envelope(&z, &t).max(got.norm()));
        }
    }
}

#[test]
fn quasi_periodicity_on_random_samples() {
    let cfg = EvalConfig::default();
    let mut r = rng(2024);
    let mut worst = 0.0f64;
    for s in 0..100 {
        let g = 1 + s % 3;
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        let denom = [2u32, 4, 6][r.gen_range(0..3)];
        let top: Vec<i64> = (0..g).map(|_| r.gen_range(0..denom as i64)).collect();
        let bot: Vec<i64> = (0..g).map(|_| r.gen_range(0..denom as i64)).collect();
        let ch = Characteristic::new(g, denom, &top, &bot).unwrap();
        let z = random_argument(g, 0.5, &mut r);
        let n: Vec<i64> = (0..g).map(|_| r.gen_range(-2..=2)).collect();
        let m: Vec<i64> = (0..g).map(|_| r.gen_range(-1..=1)).collect();
        worst = worst.max(quasi_periodicity_residuals(&ch, &z, &n, &m, &t, &cfg).unwrap().max());
    }
    assert!(worst < 1e-8, "worst residual {worst}");
}

#[test]
fn parity_law_on_random_samples() {
    let cfg = EvalConfig::default();
    let mut r = rng(99);
    for s in 0..60 {
        let g = 1 + s % 3;
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        let m = HalfChar::from_code(g, r.gen_range(0..1 << (2 * g)));
        let z = random_argument(g, 0.5, &mut r);
        assert!(parity_residual(m, &z, &t, &cfg).unwrap() < 1e-8);
    }
}

#[test]
fn jacobi_quartic_at_i() {
    let cfg = EvalConfig::default();
    let t = tau1(c(0.0, 1.0));
    let n = |s: &str| theta_null(&half(s), &t, &cfg).unwrap();
    let (t00, t01, t10) = (n("0/0"), n("0/1"), n("1/0"));
    assert!((t01.powi(4) + t10.powi(4) - t00.powi(4)).norm() < 1e-12);
    assert!((t01.norm() - t10.norm()).abs() < 1e-13);
    // oracle by direct summation
    let d01 = direct_1d(0.0, 0.5, c(0.0, 0.0), c(0.0, 1.0));
    assert!((t01 - d01).norm() < 1e-14);
}

#[test]
fn even_gradient_at_origin_is_zero() {
    let cfg = EvalConfig::default();
    let mut r = rng(8);
    let t: RiemannMatrix<f64> = random_tau(3, &mut r).unwrap();
    for m in HalfChar::all(3).filter(|m| m.is_even()) {
        let g = theta_gradient(&Characteristic::from_half(m), &zeros(3), &t, &cfg).unwrap();
        assert!(g.iter().all(|x| x.norm() < 1e-11));
    }
}

#[test]
fn odd_gradient_at_i_matches_direct_sum() {
    let cfg = EvalConfig::default();
    let t = tau1(c(0.0, 1.0));
    let got = theta_gradient(&half("1/1"), &zeros(1), &t, &cfg).unwrap()[0];
    let want: C = (-40..=40)
        .map(|n| {
            let v = n as f64 + 0.5;
            let term = (c(0.0, std::f64::consts::PI) * (c(0.0, 1.0) * v * v + v)).exp();
            term * c(0.0, 2.0 * std::f64::consts::PI * v)
        })
        .sum();
    assert!(want.norm() > 0.1);
    assert!((got - want).norm() < 1e-12);
}

#[test]
fn gradient_matches_finite_differences() {
    let cfg = EvalConfig::default();
    let mut r = rng(41);
    let h = 1e-5;
    for s in 0..12 {
        let g = 1 + s % 3;
        let t: RiemannMatrix<f64> = random_tau(g, &mut r).unwrap();
        let ch = if s % 2 == 0 {
            Characteristic::zero(g)
        } else {
            Characteristic::new(g, 4, &vec![1; g], &vec![3; g]).unwrap()
        };
        let z = random_argument(g, 0.3, &mut r);
        let grad = theta_gradient(&ch, &z, &t, &cfg).unwrap();
        for k in 0..g {
            let mut zp = z.clone();
            let mut zm = z.clone();
            zp[k] += h;
            zm[k] -= h;
            let fd = (theta_char(&ch, &zp, &t, &cfg).unwrap() - theta_char(&ch, &zm, &t, &cfg).unwrap())
                / (2.0 * h);
            let scale = grad.iter().map(|x| x.norm()).fold(0.0, f64::max).max(1e-3);
            assert!((fd - grad[k]).norm() < 1e-6 * scale, "sample {s}, k {k}");
        }
    }
}

#[test]
fn null_grid_matches_pointwise_evaluation() {
    let cfg = EvalConfig::default();
    let mut r = rng(77);
    let t: RiemannMatrix<f64> = random_tau(2, &mut r).unwrap();
    for denom in [2u32, 4, 6] {
        let grid = NullGrid::compute(&t, denom, &cfg).unwrap();
        for ch in enumerate_chars(2, denom).unwrap() {
            let want = theta_null(&ch, &t, &cfg).unwrap();
            assert!((grid.get(&ch).unwrap() - want).norm() < 1e-12, "{ch}");
        }
    }
}

#[test]
fn radius_overflow_is_reported() {
    let t = tau1(c(0.0, 1e-4));
    let e = theta_base(&zeros(1), &t, &EvalConfig::default()).unwrap_err();
    assert!(matches!(e, Error::RadiusOverflow { cap: 60, .. }));
    assert!(EvalConfig::new(0.0, 10).is_err());
    assert!(EvalConfig::new(1e-8, 0).is_err());
}

#[test]
fn genus_mismatch_is_reported() {
    let t = tau1(c(0.0, 1.0));
    let e = theta_null(&Characteristic::zero(2), &t, &EvalConfig::default()).unwrap_err();
    assert_eq!(e, Error::GenusMismatch { expected: 1, found: 2 });
}

#[test]
fn single_precision_tracks_double() {
    let cfg = EvalConfig::new(1e-6, 60).unwrap();
    let mut r = rng(4);
    let t: RiemannMatrix<f64> = random_tau(2, &mut r).unwrap();
    let t32: RiemannMatrix<f32> = t.cast().unwrap();
    let ch = Characteristic::new(2, 4, &[1, 2], &[3, 0]).unwrap();
    let z = [c(0.1, 0.05), c(-0.2, 0.1)];
    let z32: Vec<Complex<f32>> = z.iter().map(|x| Complex::new(x.re as f32, x.im as f32)).collect();
    let a = theta_char(&ch, &z, &t, &cfg).unwrap();
    let b = theta_char(&ch, &z32, &t32, &cfg).unwrap();
    assert!((a - c(b.re as f64, b.im as f64)).norm() < 1e-4);
}

#[test]
fn vanishing_orders() {
    let cfg = EvalConfig::default();
    let th = VanishThresholds::default();
    let t = tau1(c(0.0, 1.0));
    assert_eq!(vanishing_order_at(&half("0/0"), &t, th, &cfg).unwrap(), VanishingOrder::Zero);
    assert_eq!(vanishing_order_at(&half("1/1"), &t, th, &cfg).unwrap(), VanishingOrder::One);
    let mut r = rng(12);
    let t3: RiemannMatrix<f64> = random_tau(3, &mut r).unwrap();
    let probe = VanishingProbe::new(&t3, th, cfg).unwrap();
    for m in HalfChar::all(3) {
        let o = probe.order(&Characteristic::from_half(m)).unwrap();
        assert_eq!(o.vanishes(), !m.is_even(), "{m}");
    }
}
