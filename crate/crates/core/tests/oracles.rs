use logperm::exact::{hafnian_naive, permanent_naive};
use logperm::sampling::{matrix_with, symmetric_with, tensor_with};
use logperm::sum::sum_complex;
use logperm::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit_square(rng: &mut ChaCha8Rng) -> Complex {
    Complex::new(rng.gen(), rng.gen())
}

fn close(x: Complex, y: Complex, rel: f64) -> bool {
    (x - y).norm() <= rel * y.norm().max(1e-300)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[test]
fn ryser_agrees_with_permutation_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for case in 0..100 {
        let n = 1 + case % 8;
        let a = matrix_with(&mut rng, n, unit_square);
        let fast = permanent_exact(&a).unwrap();
        let slow = permanent_naive(&a);
        assert!(close(fast, slow, 1e-10), "n={n}: {fast} vs {slow}");
    }
}

#[test]
fn bipartite_hafnian_is_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for n in 1..=6 {
        for _ in 0..5 {
            let a = matrix_with(&mut rng, n, unit_square);
            let h = hafnian_exact(&SymmetricComplexMatrix::bipartite(&a)).unwrap();
            let p = permanent_exact(&a).unwrap();
            assert!(close(h, p, 1e-10), "n={n}: {h} vs {p}");
        }
    }
}

#[test]
fn two_dimensional_tensor_is_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for n in 1..=7 {
        let a = matrix_with(&mut rng, n, unit_square);
        let t = tensor_permanent_exact(&a.to_tensor()).unwrap();
        let p = permanent_exact(&a).unwrap();
        assert!(close(t, p, 1e-10), "n={n}: {t} vs {p}");
    }
}

#[test]
fn hafnian_ignores_simultaneous_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for case in 0..50 {
        let two_n = [2, 4, 6, 8][case % 4];
        let a = symmetric_with(&mut rng, two_n, unit_square);
        let mut perm: Vec<usize> = (0..two_n).collect();
        perm.shuffle(&mut rng);
        let b = a.permuted(&perm).unwrap();
        let x = hafnian_exact(&a).unwrap();
        let y = hafnian_exact(&b).unwrap();
        assert!(close(y, x, 1e-10), "2n={two_n}: {x} vs {y}");
        if two_n <= 8 {
            assert!(close(hafnian_naive(&a), x, 1e-10));
        }
    }
}

#[test]
fn tensor_permanent_expands_over_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for d in [2, 3] {
        for n in 1..=3 {
            for _ in 0..4 {
                let z = tensor_with(&mut rng, d, n, |r| sampling::disc_point(r, 1.5));
                let w = matching_polynomial(&WeightedHypergraph::complete_partite(&z)).unwrap();
                let expansion = sum_complex(
                    w.weights
                        .iter()
                        .enumerate()
                        .map(|(k, &wk)| wk * factorial(n - k).powi(d as i32 - 1)),
                );
                let per = tensor_permanent_exact(&z).unwrap();
                assert!(
                    close(expansion, per, 1e-9),
                    "d={d} n={n}: {expansion} vs {per}"
                );
            }
        }
    }
}

#[test]
fn all_ones_values() {
    for n in 1..=10 {
        let v = permanent_exact(&ComplexMatrix::ones(n)).unwrap();
        assert!(close(v, Complex::new(factorial(n), 0.0), 1e-10));
    }
    for half in 1..=6 {
        let v = hafnian_exact(&SymmetricComplexMatrix::ones(2 * half)).unwrap();
        let expected = factorial(2 * half) / (2f64.powi(half as i32) * factorial(half));
        assert!(close(v, Complex::new(expected, 0.0), 1e-10));
    }
    for n in 1..=5 {
        let v = tensor_permanent_exact(&ComplexTensor::ones(3, n)).unwrap();
        assert!(close(v, Complex::new(factorial(n).powi(2), 0.0), 1e-10));
    }
}

#[test]
fn balanced_phase_matrix_has_zero_permanent() {
    let p = Complex::new(0.5, 0.5);
    let q = Complex::new(0.5, -0.5);
    let a = ComplexMatrix::new(2, vec![p, q, q, p]).unwrap();
    assert!(permanent_exact(&a).unwrap().norm() < 1e-14);
    let report = check_region(&a, &RegionSpec::disc_per(0.5).unwrap()).unwrap();
    assert!(!report.inside);
    assert!((report.worst_value - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
}
