mod common;

use common::{bessel_j, params, REFERENCES};
use hyperbessel::{
    eval_f, eval_j, first_zeros_f_prime, first_zeros_j, log_deriv_f, log_deriv_f_prime,
    starlike_quotient, Error, HyperBesselParams, SeriesConfig,
};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn arb_params() -> impl Strategy<Value = HyperBesselParams> {
    prop::collection::vec(-0.95f64..3.0, 1..=3).prop_map(|a| HyperBesselParams::new(a).unwrap())
}

fn arb_z(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

#[test]
fn d2_value_at_one_against_exact_rationals() {
    // Σ (−1)^n / ((n!)^3 27^n), summed exactly
    let mut sum = BigRational::zero();
    let mut denom = BigInt::one();
    for n in 0..10u32 {
        if n > 0 {
            denom *= BigInt::from(n).pow(3) * BigInt::from(27);
        }
        let term = BigRational::new(BigInt::one(), denom.clone());
        sum = if n % 2 == 0 { sum + term } else { sum - term };
    }
    let exact = sum.to_f64().unwrap();
    let v = eval_j(&params(&[0.0, 0.0]), c(1.0), &cfg()).unwrap().value;
    assert!((v.re - exact).abs() < 1e-15, "{} vs {exact}", v.re);
    assert_eq!(v.im, 0.0);
    assert!((v.re - 0.963_134_2).abs() < 1e-7);
}

#[test]
fn d2_partial_sums_on_a_grid() {
    let p = params(&[0.0, 0.0]);
    for k in 0..=40 {
        let x = 0.1 * k as f64;
        let v = eval_j(&p, c(x), &cfg()).unwrap().value.re;
        let oracle = common::d2_zero_alpha_partial_sum(x, 30);
        assert!((v - oracle).abs() < 1e-14, "x = {x}: {v} vs {oracle}");
    }
}

#[test]
fn closed_forms_at_a_point() {
    let sine = params(&[0.5]);
    assert!(eval_j(&sine, c(std::f64::consts::PI), &cfg()).unwrap().value.norm() < 1e-12);
    let f = eval_f(&sine, c(1.0), &cfg()).unwrap();
    assert!((f.value.re - 1f64.sin()).abs() < 1e-15);
    assert!((f.d1.re - 1f64.cos()).abs() < 1e-15);
    assert!((f.d2.re + 1f64.sin()).abs() < 1e-15);

    let bessel = params(&[0.0]);
    for x in [0.3, 1.0, 2.2, 4.7, 9.0] {
        let j = eval_j(&bessel, c(x), &cfg()).unwrap();
        assert!((j.value.re - bessel_j(0, x)).abs() < 1e-14, "J_0({x})");
        assert!((j.d1.re + bessel_j(1, x)).abs() < 1e-14, "J_0′({x})");
    }
    let f = eval_f(&bessel, c(1.0), &cfg()).unwrap();
    assert!((f.value.re - 0.765_197_7).abs() < 1e-7);
}

#[test]
fn normalization_at_origin() {
    for r in REFERENCES {
        let p = params(r.alphas);
        let j = eval_j(&p, c(0.0), &cfg()).unwrap();
        assert_eq!((j.value, j.d1), (c(1.0), c(0.0)));
        let f = eval_f(&p, c(0.0), &cfg()).unwrap();
        assert_eq!((f.value, f.d1), (c(0.0), c(1.0)));
    }
}

#[test]
fn log_derivative_examples() {
    let sine = params(&[0.5]);
    let bessel = params(&[0.0]);
    assert!((log_deriv_f(&sine, 1e-8, &cfg()).unwrap() - 1.0).abs() < 1e-12);
    assert!(log_deriv_f_prime(&sine, 1e-8, &cfg()).unwrap().abs() < 1e-10);
    assert!((log_deriv_f(&sine, 1.0, &cfg()).unwrap() - 1.0 / 1f64.tan()).abs() < 1e-14);
    assert!((log_deriv_f_prime(&sine, 1.0, &cfg()).unwrap() + 1f64.tan()).abs() < 1e-14);

    let x = log_deriv_f(&bessel, 1.0, &cfg()).unwrap();
    assert!((x - (1.0 - bessel_j(1, 1.0) / bessel_j(0, 1.0))).abs() < 1e-14);
    assert!((x - 0.424_9).abs() < 1e-4);

    // f″ = −J_1 − rJ_0, f′ = J_0 − rJ_1
    let r = 0.5;
    let (j0, j1) = (bessel_j(0, r), bessel_j(1, r));
    let oracle = r * (-j1 - r * j0) / (j0 - r * j1);
    let y = log_deriv_f_prime(&bessel, r, &cfg()).unwrap();
    assert!((y - oracle).abs() < 1e-14);
    assert!((y + 0.435_26).abs() < 1e-5);
}

#[test]
fn log_derivative_errors() {
    let sine = params(&[0.5]);
    for r in [0.0, -1.0, f64::NAN, f64::INFINITY] {
        assert!(matches!(log_deriv_f(&sine, r, &cfg()), Err(Error::Domain(_))), "r = {r}");
        assert!(matches!(log_deriv_f_prime(&sine, r, &cfg()), Err(Error::Domain(_))), "r = {r}");
    }
    let pi = std::f64::consts::PI;
    assert!(matches!(log_deriv_f(&sine, pi, &cfg()), Err(Error::NearPole { .. })));
    assert!(matches!(log_deriv_f_prime(&sine, pi / 2.0, &cfg()), Err(Error::NearPole { .. })));
}

#[test]
fn truncation_failure_reports_terms() {
    let narrow = SeriesConfig::new(1e-16, 2, 4).unwrap();
    let err = eval_j(&params(&[0.0]), c(10.0), &narrow).unwrap_err();
    assert_eq!(err, Error::Truncation { terms_used: 4 });
    assert_eq!(err.code(), "truncation");
}

#[test]
fn config_validation() {
    assert!(SeriesConfig::new(0.0, 8, 500).is_err());
    assert!(SeriesConfig::new(1.0, 8, 500).is_err());
    assert!(SeriesConfig::new(1e-16, 1, 500).is_err());
    assert!(SeriesConfig::new(1e-16, 8, 7).is_err());
    let bad = SeriesConfig { rel_tol: f64::NAN, ..cfg() };
    assert!(matches!(eval_j(&params(&[0.0]), c(1.0), &bad), Err(Error::InvalidConfig(_))));
}

#[test]
fn param_validation_and_serde() {
    assert!(HyperBesselParams::new(vec![]).is_err());
    assert!(HyperBesselParams::new(vec![-1.0]).is_err());
    assert!(HyperBesselParams::new(vec![0.0, f64::NAN]).is_err());
    let msg = HyperBesselParams::new(vec![-1.5]).unwrap_err().to_string();
    assert!(msg.contains("alpha must exceed -1"), "{msg}");
    assert!(HyperBesselParams::with_dimension(2, vec![0.0]).is_err());

    let p = params(&[0.5, -0.3]);
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, r#"{"d":2,"alphas":[0.5,-0.3]}"#);
    assert_eq!(serde_json::from_str::<HyperBesselParams>(&json).unwrap(), p);
    assert!(serde_json::from_str::<HyperBesselParams>(r#"{"d":1,"alphas":[-2.0]}"#).is_err());
    assert!(serde_json::from_str::<HyperBesselParams>(r#"{"d":3,"alphas":[0.0]}"#).is_err());
}

#[test]
fn log_derivatives_decrease_on_grids() {
    for r in REFERENCES {
        let p = params(r.alphas);
        let j1 = first_zeros_j(&p, 1, &cfg()).unwrap().first();
        let g1 = first_zeros_f_prime(&p, 1, &cfg()).unwrap().first();
        let x: Vec<f64> = (1..=64)
            .map(|k| log_deriv_f(&p, 0.999 * j1 * k as f64 / 65.0, &cfg()).unwrap())
            .collect();
        assert!(x.windows(2).all(|w| w[1] < w[0]), "{:?}", r.alphas);
        assert!(x.iter().all(|&v| v < 1.0));
        let y: Vec<f64> = (1..=64)
            .map(|k| log_deriv_f_prime(&p, 0.999 * g1 * k as f64 / 65.0, &cfg()).unwrap())
            .collect();
        assert!(y.windows(2).all(|w| w[1] < w[0]), "{:?}", r.alphas);
        assert!(y.iter().all(|&v| v < 0.0));
    }
}

proptest! {
    #[test]
    fn f_identities(p in arb_params(), z in arb_z(5.0)) {
        let j = eval_j(&p, z, &cfg()).unwrap();
        let f = eval_f(&p, z, &cfg()).unwrap();
        let d1 = j.value + z * j.d1;
        let d2 = 2.0 * j.d1 + z * j.d2;
        prop_assert!((f.d1 - d1).norm() <= 1e-13 * d1.norm().max(1.0));
        prop_assert!((f.d2 - d2).norm() <= 1e-13 * d2.norm().max(1.0));
        prop_assert!((f.value - z * j.value).norm() <= 1e-13 * f.value.norm().max(1.0));
    }

    #[test]
    fn conjugate_symmetry(p in arb_params(), z in arb_z(8.0)) {
        let a = eval_j(&p, z, &cfg()).unwrap();
        let b = eval_j(&p, z.conj(), &cfg()).unwrap();
        for (u, v) in [(a.value, b.value), (a.d1, b.d1), (a.d2, b.d2)] {
            prop_assert!((u.conj() - v).norm() <= 1e-14 * u.norm().max(1.0));
        }
    }

    #[test]
    fn derivatives_match_finite_differences(p in arb_params(), z in arb_z(3.0)) {
        let h = 1e-6;
        let at = |w: Complex64| eval_j(&p, w, &cfg()).unwrap();
        let j = at(z);
        let (plus, minus) = (at(z + h), at(z - h));
        let fd1 = (plus.value - minus.value) / (2.0 * h);
        let fd2 = (plus.d1 - minus.d1) / (2.0 * h);
        prop_assert!((j.d1 - fd1).norm() < 1e-7, "d1 {} vs {}", j.d1, fd1);
        prop_assert!((j.d2 - fd2).norm() < 1e-7, "d2 {} vs {}", j.d2, fd2);
    }

    #[test]
    fn series_terminates_in_working_range(p in arb_params(), z in arb_z(20.0)) {
        let j = eval_j(&p, z, &cfg()).unwrap();
        prop_assert!(j.terms_used >= cfg().min_terms && j.terms_used < cfg().max_terms);
        prop_assert!(j.value.re.is_finite() && j.value.im.is_finite());
    }

    #[test]
    fn deterministic(p in arb_params(), z in arb_z(10.0)) {
        prop_assert_eq!(eval_j(&p, z, &cfg()).unwrap(), eval_j(&p, z, &cfg()).unwrap());
    }

    #[test]
    fn starlike_quotient_is_real_on_the_axis(p in arb_params(), r in 0.01f64..1.0) {
        let j1 = first_zeros_j(&p, 1, &cfg()).unwrap().first();
        let w = starlike_quotient(&p, c(r * 0.99 * j1), &cfg()).unwrap();
        prop_assert_eq!(w.im, 0.0);
        prop_assert!(w.re < 1.0);
    }
}
