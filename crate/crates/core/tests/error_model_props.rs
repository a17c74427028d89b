use lerch::error_model::{epsilon_n, gn_threshold, kz, plan, pole, r_zero, solve_n};
use lerch::lerch::f_z;
use lerch::{polar_pi, LerchParams};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn kz_bounds_the_integrand_in_every_region() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut per_region = [0usize; 3];
    while per_region.iter().sum::<usize>() < 10_000 {
        // every third draw comes from the small disk |z - 1/2| < 1/2
        let z = if rng.gen_bool(1.0 / 3.0) {
            let (rho, th) = (0.5 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI));
            c(0.5 + rho * th.cos(), rho * th.sin())
        } else {
            c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
        };
        if z.im == 0.0 && z.re >= 1.0 {
            continue;
        }
        let region = if z.re <= 0.0 {
            0
        } else if z.re <= z.norm_sqr() {
            1
        } else {
            2
        };
        per_region[region] += 1;
        let t = rng.gen_range(0.0..50.0);
        let a = rng.gen_range(0.2..4.0);
        assert!(f_z(t, z, a).norm() <= kz(z).unwrap() * (1.0 + 1e-12), "z = {z}, t = {t}");
    }
    assert!(per_region.iter().all(|&k| k > 1000), "{per_region:?}");
}

#[test]
fn kz_cases_meet_on_the_boundary_circle() {
    for i in 0..100 {
        let theta = 2.0 * PI * (i as f64 + 0.5) / 100.0;
        let z = c(0.5 + 0.5 * theta.cos(), 0.5 * theta.sin());
        let case2 = z.norm() / z.im.abs();
        let case3 = 1.0 / (c(1.0, 0.0) - z).norm();
        assert!((case2 - case3).abs() <= 1e-10 * case3);
    }
}

#[test]
fn principal_pole_has_the_smallest_parabola() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let z = polar_pi(rng.gen_range(0.1..5.0), rng.gen_range(-0.99..0.99));
        let a = rng.gen_range(0.2..3.0);
        let r0 = r_zero(pole(z, a, 0).unwrap()).unwrap();
        for k in [-3i64, -2, -1, 1, 2, 3] {
            assert!(r_zero(pole(z, a, k).unwrap()).unwrap() > r0, "z = {z}, k = {k}");
        }
    }
}

#[test]
fn conjugate_poles_on_the_negative_axis() {
    for (r, a) in [(0.5, 1.0), (1.0, 0.5), (3.0, 2.0)] {
        let z = c(-r, 0.0);
        let t0 = pole(z, a, 0).unwrap();
        let tm1 = pole(z, a, -1).unwrap();
        assert!((tm1 - t0.conj()).norm() <= 1e-14 * t0.norm());
        assert!((r_zero(t0).unwrap() - r_zero(tm1).unwrap()).abs() <= 1e-14);
    }
}

#[test]
fn gn_is_continuous_at_one() {
    let g1 = gn_threshold(1.0, 1e-10, 2.0);
    for s in [1.0 - 1e-8, 1.0 + 1e-8] {
        assert!((gn_threshold(s, 1e-10, 2.0) - g1).abs() <= 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn epsilon_decreases_in_m(r in 0.1f64..6.0, tau in -0.99f64..1.0, s in 0.05f64..6.0, a in 0.1f64..4.0, m in 0.5f64..400.0) {
        let p = LerchParams::new(polar_pi(r, tau), s, a).unwrap();
        prop_assert!(epsilon_n(&p, m + 0.5).unwrap() < epsilon_n(&p, m).unwrap());
    }

    #[test]
    fn solve_n_round_trips(r in 0.1f64..6.0, tau in -0.9f64..1.0, s in 0.05f64..6.0, a in 0.1f64..4.0, e in 10f64..14.5) {
        let tol = 10f64.powf(-e);
        let p = LerchParams::new(polar_pi(r, tau), s, a).unwrap();
        let size = match solve_n(&p, tol) {
            Ok(size) => size,
            Err(_) => return Ok(()),
        };
        if size.n > 1 {
            let at_m = epsilon_n(&p, size.m).unwrap();
            prop_assert!((at_m / size.eps_target - 1.0).abs() < 1e-9);
            prop_assert!(epsilon_n(&p, size.n as f64 + s / 2.0).unwrap() <= size.eps_target * (1.0 + 1e-12));
            prop_assert!(epsilon_n(&p, size.m * (1.0 - 1e-6)).unwrap() > size.eps_target);
        }
        let pl = plan(&p, tol).unwrap();
        prop_assert!(pl.kn >= 1 && pl.kn <= pl.n);
        prop_assert!(pl.r0 > 1.0);
        prop_assert!((pl.eps_target - p.normalization() * tol / 2.0).abs() <= 1e-15 * pl.eps_target);
    }
}
