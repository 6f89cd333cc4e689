//! Oracle comparisons over the full validation grid of orders, ratios and scales.

mod common;

use circkr::oracle::{build_dense, circulant_eigenvalue, dense_inverse, dense_solve, spectral_first_row};
use circkr::*;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const VARIANTS: [Variant; 2] = [Variant::Circulant, Variant::Tridiagonal];

#[test]
fn reconstruction_or_structured_overflow() {
    for (n, d, a) in grid() {
        for variant in VARIANTS {
            let spec = spec(n, d, a);
            match decompose_variant(&spec, variant) {
                Ok(fct) => {
                    let rebuilt = reconstruct(&fct).unwrap();
                    let dense = build_dense(&spec, variant).unwrap();
                    let err = rebuilt.max_abs_diff(&dense) / dense.max_abs();
                    assert!(err <= 1e-8, "{n} {d} {a} {variant}: {err:e}");
                    assert!(rebuilt.is_finite());
                    if variant == Variant::Tridiagonal {
                        assert_eq!(rebuilt[(0, n - 1)], 0.0);
                        assert_eq!(rebuilt[(n - 1, 0)], 0.0);
                    }
                }
                Err(Error::Overflow { .. }) => {
                    assert!(!sequence_fits(n + 1, d), "{n} {d}: spurious overflow");
                }
                Err(e) => panic!("{n} {d} {a} {variant}: {e}"),
            }
        }
    }
}

#[test]
fn reconstruction_is_circulant() {
    let fct = decompose(&SystemSpec64::new(8, 7.0, -1.5).unwrap()).unwrap();
    let m = reconstruct(&fct).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            let base = m[(0, (j + 8 - i) % 8)];
            assert!((m[(i, j)] - base).abs() <= 1e-10);
        }
    }
    assert!(m.asymmetry() <= 1e-10);
}

#[test]
fn solves_match_elimination_and_have_small_residual() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, d, a) in grid() {
        for variant in VARIANTS {
            let spec = spec(n, d, a);
            let Ok(fct) = decompose_variant(&spec, variant) else {
                assert!(!sequence_fits(n + 1, d));
                continue;
            };
            let dense = build_dense(&spec, variant).unwrap();
            for _ in 0..5 {
                let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let x = solve(&fct, &b).unwrap();
                let residual = max_abs_diff(&dense.mul_vec(&x).unwrap(), &b);
                assert!(
                    residual <= 1e-8 * dense.inf_norm() * max_abs(&x),
                    "{n} {d} {a} {variant}"
                );
                let reference = dense_solve(&dense, &b).unwrap();
                assert!(max_abs_diff(&x, &reference) <= 1e-8 * max_abs(&reference));
            }
            // known solution
            let x_true: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let x = solve(&fct, &dense.mul_vec(&x_true).unwrap()).unwrap();
            assert!(max_abs_diff(&x, &x_true) <= 1e-8 * max_abs(&x_true));
        }
    }
}

#[test]
fn solve_commutes_with_cyclic_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, d, a) in grid().filter(|&(n, d, _)| sequence_fits(n + 1, d)) {
        let fct = decompose(&spec(n, d, a)).unwrap();
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut shifted = b.clone();
        shifted.rotate_right(1);
        let mut expected = solve(&fct, &b).unwrap();
        expected.rotate_right(1);
        let got = solve(&fct, &shifted).unwrap();
        assert!(max_abs_diff(&got, &expected) <= 1e-8 * max_abs(&expected));
    }
}

#[test]
fn inverses_match_spectral_and_dense_oracles() {
    for (n, d, a) in grid() {
        let spec = spec(n, d, a);
        let Ok(fct) = decompose(&spec) else {
            continue;
        };
        let dense = build_dense(&spec, Variant::Circulant).unwrap();
        let spectral = spectral_first_row(&spec).unwrap();
        let row = inverse_first_row(&fct).unwrap();
        assert!(max_abs_diff(&row, &spectral) <= 1e-8 * max_abs(&spectral), "{n} {d} {a}");
        for j in 1..n {
            assert!((row[j] - row[n - j]).abs() <= 1e-12 * max_abs(&row));
        }

        let inv = inverse_dense(&fct).unwrap();
        assert!(identity_error(&inv.matmul(&dense).unwrap()) <= 1e-8);
        assert!(inv.asymmetry() <= 1e-10);
        for i in 0..n {
            for j in 0..n {
                assert!((inv[(i, j)] - row[(j + n - i) % n]).abs() <= 1e-10 * max_abs(&row).max(1.0));
            }
        }

        // oracle self-consistency
        let by_elimination = dense_solve(&dense, &unit(n, 0)).unwrap();
        assert!(max_abs_diff(&by_elimination, &spectral) <= 1e-10 * max_abs(&spectral).max(1.0));
    }
}

#[test]
fn tridiagonal_inverse_matches_elimination() {
    for (n, d, a) in grid() {
        let spec = spec(n, d, a);
        let Ok(fct) = decompose_tridiagonal(&spec) else {
            continue;
        };
        let dense = build_dense(&spec, Variant::Tridiagonal).unwrap();
        let inv = inverse_dense(&fct).unwrap();
        let reference = dense_inverse(&dense).unwrap();
        assert!(inv.max_abs_diff(&reference) <= 1e-8 * reference.max_abs(), "{n} {d} {a}");
        assert!(identity_error(&inv.matmul(&dense).unwrap()) <= 1e-8);
    }
}

#[test]
fn last_pivot_is_signed_determinant_of_normalized_matrix() {
    // R K Abar = A1^T and det K = prod f_i, so g = (-1)^(n-1) det(Abar).
    for (n, d, _) in grid().filter(|&(n, _, a)| a == 1.0 && n <= 64) {
        let spec = spec(n, d, 1.0);
        let Ok(fct) = decompose(&spec) else {
            continue;
        };
        let det: f64 = (0..n).map(|j| circulant_eigenvalue(&spec, j)).product();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let g = fct.g().unwrap().value();
        assert!((g - sign * det).abs() <= 1e-10 * det.abs(), "{n} {d}: {g} vs {det}");
    }
}

#[test]
fn batched_solve_equals_individual_solves() {
    let fct = decompose(&SystemSpec64::new(64, 5.0, 2.0).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cols: Vec<Vec<f64>> = (0..17)
        .map(|_| (0..64).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect();
    let batched = solve_many(&fct, &cols).unwrap();
    for (b, x) in cols.iter().zip(&batched) {
        assert_eq!(x, &solve(&fct, b).unwrap());
    }
}

#[test]
fn dense_paths_respect_size_guard() {
    let spec = SystemSpec64::new(DENSE_SIZE_LIMIT + 1, 5.0, 2.0001).unwrap();
    assert!(matches!(build_dense(&spec, Variant::Circulant), Err(Error::SizeGuard { .. })));
    let fct = decompose(&SystemSpec64::new(DENSE_SIZE_LIMIT + 1, 2.0001, 1.0).unwrap()).unwrap();
    assert!(matches!(reconstruct(&fct), Err(Error::SizeGuard { .. })));
    assert!(matches!(inverse_dense(&fct), Err(Error::SizeGuard { .. })));
    assert!(matches!(fct.materialize(FactorKind::K), Err(Error::SizeGuard { .. })));
    // the O(n) paths have no guard
    let x = solve(&fct, &vec![2.0001 + 2.0; DENSE_SIZE_LIMIT + 1]).unwrap();
    assert!(x.iter().all(|v| (v - 1.0).abs() < 1e-8));
}
