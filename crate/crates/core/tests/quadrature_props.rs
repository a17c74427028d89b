use lerch::gamma::{gamma, ln_gamma};
use lerch::quadrature::recurrence_coefficients;
use lerch::tridiagonal::symmetric_tridiagonal_eigen;
use lerch::{gauss_laguerre, gauss_laguerre_truncated, N_MAX};
use proptest::prelude::*;
use std::f64::consts::PI;

const ALPHAS: [f64; 6] = [-0.8, -0.5, 0.0, 0.5, 3.0, 4.0];

fn log_moment(nodes: &[f64], weights: &[f64], j: usize) -> f64 {
    let logs: Vec<f64> = nodes
        .iter()
        .zip(weights)
        .filter(|(_, w)| **w > 0.0)
        .map(|(x, w)| w.ln() + j as f64 * x.ln())
        .collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    top + logs.iter().map(|l| (l - top).exp()).sum::<f64>().ln()
}

#[test]
fn moments_are_exact_up_to_degree_2n_minus_1() {
    for alpha in ALPHAS {
        for n in 1..=50 {
            let rule = gauss_laguerre(alpha, n).unwrap();
            for j in 0..2 * n {
                let err = (log_moment(rule.nodes(), rule.weights(), j) - ln_gamma(alpha + 1.0 + j as f64)).exp_m1();
                let limit = if j <= n { 1e-10 } else { 1e-8 };
                assert!(err.abs() <= limit, "alpha = {alpha}, n = {n}, j = {j}: {err:e}");
            }
        }
    }
}

#[test]
fn zeroth_moment_to_twelve_digits() {
    for alpha in ALPHAS {
        for n in [1, 2, 7, 30, 100, 300, 700] {
            let rule = gauss_laguerre(alpha, n).unwrap();
            let sum: f64 = rule.weights().iter().sum();
            let rel = (sum / gamma(alpha + 1.0) - 1.0).abs();
            assert!(rel <= 1e-12, "alpha = {alpha}, n = {n}: {rel:e}");
        }
    }
}

#[test]
fn nodes_follow_bessel_asymptotics() {
    // x_k ≈ j_{α,k}² / (4m), m = n + (α + 1)/2, with McMahon's
    // j_{α,k} ≈ β - (4α² - 1)/(8β), β = (k + α/2 - 1/4)π
    for alpha in [-0.5, 0.0, 0.5, 3.0] {
        for n in [30, 60, 150] {
            let rule = gauss_laguerre(alpha, n).unwrap();
            let m = n as f64 + (alpha + 1.0) / 2.0;
            for k in 1..=n / 2 {
                let x = rule.nodes()[k - 1];
                let beta = (k as f64 + alpha / 2.0 - 0.25) * PI;
                let j = beta - (4.0 * alpha * alpha - 1.0) / (8.0 * beta);
                assert!((x - j * j / (4.0 * m)).abs() / x <= 0.15, "alpha = {alpha}, n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn nodes_follow_simplified_asymptotics_at_half() {
    // at α = 1/2 the zeros are exactly kπ and x_k ≈ k²π² / (4m)
    for n in [30, 60, 150] {
        let rule = gauss_laguerre(0.5, n).unwrap();
        let m = n as f64 + 0.75;
        for k in 1..=n / 2 {
            let x = rule.nodes()[k - 1];
            let approx = (k * k) as f64 * PI * PI / (4.0 * m);
            assert!((x - approx).abs() / x <= 0.15, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn weights_decay_like_the_weight_function() {
    for alpha in [-0.5, 0.0, 0.5, 3.0] {
        for n in [20, 50, 120] {
            let rule = gauss_laguerre(alpha, n).unwrap();
            let (x, w) = (rule.nodes(), rule.weights());
            for j in 1..n {
                let bound = 2.0 * (x[j] - x[j - 1]) * x[j].powf(alpha) * (-x[j]).exp();
                assert!(w[j] <= bound, "alpha = {alpha}, n = {n}, j = {j}");
            }
        }
    }
}

#[test]
fn eigen_first_components_agree_with_weights() {
    let (d, e) = recurrence_coefficients(0.5, 12).unwrap();
    let eig = symmetric_tridiagonal_eigen(&d, &e).unwrap();
    let rule = gauss_laguerre(0.5, 12).unwrap();
    let g = gamma(1.5);
    for i in 0..12 {
        assert!((eig.values[i] - rule.nodes()[i]).abs() <= 1e-12 * rule.nodes()[i].max(1.0));
        let w = g * eig.first_components[i].powi(2);
        assert!((w - rule.weights()[i]).abs() <= 1e-10 * rule.weights()[i].max(1e-300));
    }
}

#[test]
fn large_orders() {
    let rule = gauss_laguerre(-0.5, 1500).unwrap();
    assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
    assert!(rule.weights().iter().all(|w| *w >= 0.0));
    assert!(gauss_laguerre(0.0, N_MAX + 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncated_rule_is_an_exact_prefix(alpha in -0.95f64..5.0, n in 1usize..120, frac in 0.0f64..1.0) {
        let k = 1 + ((n - 1) as f64 * frac) as usize;
        let full = gauss_laguerre(alpha, n).unwrap();
        let trunc = gauss_laguerre_truncated(alpha, n, k).unwrap();
        prop_assert_eq!(trunc.len(), k);
        prop_assert_eq!(trunc.nodes(), &full.nodes()[..k]);
        prop_assert_eq!(trunc.weights(), &full.weights()[..k]);
    }

    #[test]
    fn nodes_increase_and_weights_positive(alpha in -0.95f64..5.0, n in 1usize..150) {
        let rule = gauss_laguerre(alpha, n).unwrap();
        prop_assert!(rule.nodes()[0] > 0.0);
        prop_assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(rule.weights().iter().all(|w| *w > 0.0));
    }
}
