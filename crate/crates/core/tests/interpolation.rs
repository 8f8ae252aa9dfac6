use logperm::derivatives::g_derivatives_from_log;
use logperm::sampling::{
    disc_point, l1_matrix, l1_tensor, matrix_with, real_matrix, real_symmetric, real_tensor,
    symmetric_with, tensor_with,
};
use logperm::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn coefficient_derivatives(p: &UnivariatePolynomial, k_max: usize) -> Vec<Complex> {
    let mut fact = 1.0;
    (0..=k_max)
        .map(|k| {
            if k > 0 {
                fact *= k as f64;
            }
            p.coeff(k) * fact
        })
        .collect()
}

fn assert_rel(x: &[Complex], y: &[Complex], rel: f64, what: &str) {
    assert_eq!(x.len(), y.len());
    for (k, (a, b)) in x.iter().zip(y).enumerate() {
        assert!(
            (a - b).norm() <= rel * b.norm().max(1e-300),
            "{what} k={k}: {a} vs {b}"
        );
    }
}

#[test]
fn tuple_sums_match_full_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for case in 0..25 {
        let n = 1 + case % 6;
        let a = matrix_with(&mut rng, n, |r| disc_point(r, 0.5));
        let full = g_full_expansion_permanent(&a).unwrap();
        let m = 4.min(n);
        assert_rel(
            &g_derivatives_permanent(&a, m).unwrap(),
            &coefficient_derivatives(&full, m),
            1e-9,
            "per",
        );
    }
    for case in 0..25 {
        let half = 1 + case % 4;
        let a = symmetric_with(&mut rng, 2 * half, |r| disc_point(r, 0.5));
        let full = g_full_expansion_hafnian(&a).unwrap();
        let m = 3.min(half);
        assert_rel(
            &g_derivatives_hafnian(&a, m).unwrap(),
            &coefficient_derivatives(&full, m),
            1e-9,
            "haf",
        );
    }
    for case in 0..25 {
        let n = 1 + case % 4;
        let a = tensor_with(&mut rng, 3, n, |r| disc_point(r, 0.27));
        let full = g_full_expansion_tensor(&a).unwrap();
        let m = 3.min(n);
        assert_rel(
            &g_derivatives_tensor(&a, m).unwrap(),
            &coefficient_derivatives(&full, m),
            1e-9,
            "tensor",
        );
    }
}

#[test]
fn log_derivatives_invert() {
    let mut rng = ChaCha8Rng::seed_from_u64(302);
    for _ in 0..25 {
        let a = matrix_with(&mut rng, 5, |r| disc_point(r, 0.5));
        let g = g_derivatives_permanent(&a, 5).unwrap();
        let f = log_derivatives(&g).unwrap();
        let back = g_derivatives_from_log(g[0], &f);
        assert_rel(&back, &g[1..], 1e-10, "round trip");
    }
}

#[test]
fn remainder_never_exceeds_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for case in 0..100 {
        let beta = [1.2, 2.0, 5.0][case % 3];
        let degree = rng.gen_range(1..=8);
        let roots: Vec<Complex> = (0..degree)
            .map(|_| {
                Complex::from_polar(beta * rng.gen_range(1.0001..3.0), rng.gen_range(0.0..TAU))
            })
            .collect();
        let g =
            UnivariatePolynomial::from_roots(Complex::new(rng.gen_range(0.5..3.0), 0.0), &roots);
        let one = Complex::new(1.0, 0.0);
        let exact: Complex = roots.iter().map(|z| (one - one / z).ln()).sum();
        let f = log_derivatives(&coefficient_derivatives(&g, 12)).unwrap();
        let mut partial = Complex::new(0.0, 0.0);
        let mut fact = 1.0;
        for m in 1..=12 {
            fact *= m as f64;
            partial += f[m - 1] / fact;
            let bound = taylor_error_bound(degree, beta, m).unwrap();
            let err = (exact - partial).norm();
            assert!(err <= bound, "beta={beta} m={m}: {err} > {bound}");
        }
    }
}

#[test]
fn phi_maps_discs_into_strip() {
    for rho in [0.1, 0.25, 0.5, 1.0] {
        let phi = build_phi(rho).unwrap();
        let c = phi.constants;
        assert!(phi.degree >= 14);
        assert_eq!(phi.eval(Complex::new(0.0, 0.0)), Complex::new(0.0, 0.0));
        assert!((phi.eval(Complex::new(1.0, 0.0)) - 1.0).norm() < 1e-12);
        let poly = phi.poly();
        for radius in [c.beta, c.beta / 2.0] {
            for w in poly.eval_on_circle(radius, 10_000) {
                assert!(
                    w.re >= -rho - 1e-9 && w.re <= 1.0 + 2.0 * rho + 1e-9,
                    "rho={rho}: {w}"
                );
                assert!(w.im.abs() <= 2.0 * rho + 1e-9, "rho={rho}: {w}");
            }
        }
    }
}

fn ln_exact_per(a: &ComplexMatrix) -> f64 {
    permanent_exact(a).unwrap().re.ln()
}

#[test]
fn disc_pipeline_within_epsilon() {
    let mut rng = ChaCha8Rng::seed_from_u64(304);
    let opts = ApproxOptions::default();
    for _ in 0..5 {
        let a = real_matrix(&mut rng, 7, 0.6, 1.0);
        let r = approx_log_disc(&a, 0.4, 1e-3, &opts).unwrap();
        assert!((r.log_value.re - ln_exact_per(&a)).abs() <= 1e-3);
        assert!(r.log_value.im.abs() < 1e-9);
        assert!(r.error_bound.unwrap() <= 1e-3);
    }
    for _ in 0..3 {
        let a = real_symmetric(&mut rng, 8, 0.6, 1.0);
        let r = approx_log_disc(&a, 0.4, 1e-3, &opts).unwrap();
        assert!((r.log_value.re - hafnian_exact(&a).unwrap().re.ln()).abs() <= 1e-3);
    }
    for _ in 0..3 {
        let a = real_tensor(&mut rng, 3, 3, 0.78, 1.0);
        let r = approx_log_disc(&a, 0.22, 1e-3, &opts).unwrap();
        assert!((r.log_value.re - tensor_permanent_exact(&a).unwrap().re.ln()).abs() <= 1e-3);
    }
}

#[test]
fn complex_disc_input_matches_principal_log() {
    let mut rng = ChaCha8Rng::seed_from_u64(305);
    let opts = ApproxOptions::default();
    for _ in 0..5 {
        let a = matrix_with(&mut rng, 5, |r| disc_point(r, 0.3));
        let r = approx_log_disc(&a, 0.3, 1e-6, &opts).unwrap();
        let exact = permanent_exact(&a).unwrap().ln();
        // Along J + z(A - J) the phase moves continuously from 0, so compare modulo 2 pi i.
        let diff = r.log_value - exact;
        let wrapped = Complex::new(diff.re, diff.im - TAU * (diff.im / TAU).round());
        assert!(wrapped.norm() <= 1e-6, "{diff}");
    }
}

#[test]
fn strip_pipeline_within_epsilon() {
    let mut rng = ChaCha8Rng::seed_from_u64(306);
    let opts = ApproxOptions::default();
    for _ in 0..2 {
        let a = real_matrix(&mut rng, 5, 0.5, 1.0);
        let r = approx_log_strip(&a, 0.5, 0.1, &opts).unwrap();
        assert!((r.log_value.re - ln_exact_per(&a)).abs() <= 0.1);
        assert!(r.log_value.im.abs() < 1e-9);
    }
    let a = real_symmetric(&mut rng, 6, 0.5, 1.0);
    let r = approx_log_strip(&a, 0.5, 0.1, &opts).unwrap();
    assert!((r.log_value.re - hafnian_exact(&a).unwrap().re.ln()).abs() <= 0.1);
}

#[test]
fn slice_sum_pipeline_within_epsilon() {
    let mut rng = ChaCha8Rng::seed_from_u64(307);
    let opts = ApproxOptions::default();
    for _ in 0..5 {
        let a = l1_matrix(&mut rng, 6, 0.05);
        let r = approx_log_l1(&a, 0.05, 1e-3, &opts).unwrap();
        let exact = permanent_exact(&a).unwrap().ln();
        assert!((r.log_value - exact).norm() <= 1e-3);
    }
    for _ in 0..3 {
        let a = l1_tensor(&mut rng, 3, 3, 0.01);
        let r = approx_log_l1(&a, 0.01, 1e-3, &opts).unwrap();
        let exact = tensor_permanent_exact(&a).unwrap().ln();
        assert!((r.log_value - exact).norm() <= 1e-3);
    }
}

#[test]
fn every_truncation_respects_its_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(308);
    let a = real_matrix(&mut rng, 6, 0.6, 1.0);
    let exact = ln_exact_per(&a);
    for m in 0..=6 {
        let opts = ApproxOptions {
            degree: Some(m),
            ..ApproxOptions::default()
        };
        let r = approx_log_disc(&a, 0.4, 1e-3, &opts).unwrap();
        assert_eq!(r.degree_used, m);
        let err = (r.log_value.re - exact).abs();
        assert!(err <= r.error_bound.unwrap(), "m={m}: {err}");
    }
}

#[test]
fn real_inputs_give_real_logs() {
    let mut rng = ChaCha8Rng::seed_from_u64(309);
    let opts = ApproxOptions::default();
    let a = real_matrix(&mut rng, 6, 0.6, 1.4);
    assert!(
        approx_log_disc(&a, 0.4, 1e-4, &opts)
            .unwrap()
            .log_value
            .im
            .abs()
            < 1e-9
    );
    let h = real_symmetric(&mut rng, 6, 0.6, 1.4);
    assert!(
        approx_log_disc(&h, 0.4, 1e-4, &opts)
            .unwrap()
            .log_value
            .im
            .abs()
            < 1e-9
    );
    let t = real_tensor(&mut rng, 3, 3, 0.8, 1.2);
    assert!(
        approx_log_disc(&t, 0.2, 1e-4, &opts)
            .unwrap()
            .log_value
            .im
            .abs()
            < 1e-9
    );
}
