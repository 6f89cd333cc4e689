#![allow(dead_code)]

use circkr::{DenseMatrix, SystemSpec64};

pub const ORDERS: [usize; 7] = [3, 4, 5, 8, 16, 64, 200];
pub const RATIOS: [f64; 8] = [2.05, -2.05, 2.5, -2.5, 5.0, -5.0, 100.0, -100.0];
pub const SCALES: [f64; 3] = [1.0, -0.5, 3.0];

/// Every (n, d, a) combination of the validation grid.
pub fn grid() -> impl Iterator<Item = (usize, f64, f64)> {
    ORDERS.into_iter().flat_map(|n| {
        RATIOS
            .into_iter()
            .flat_map(move |d| SCALES.into_iter().map(move |a| (n, d, a)))
    })
}

pub fn spec(n: usize, d: f64, a: f64) -> SystemSpec64 {
    SystemSpec64::new(n, d * a, a).unwrap()
}

/// Whether `f_0..f_{n+1}` fits in f64, by direct iteration.
pub fn sequence_fits(n: usize, d: f64) -> bool {
    let (mut prev, mut cur) = (0.0_f64, 1.0_f64);
    for _ in 1..=n {
        let next = -d * cur - prev;
        if !next.is_finite() {
            return false;
        }
        prev = cur;
        cur = next;
    }
    true
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn max_abs_diff(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
}

pub fn unit(n: usize, k: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[k] = 1.0;
    e
}

pub fn identity_error(m: &DenseMatrix<f64>) -> f64 {
    m.max_abs_diff(&DenseMatrix::identity(m.n()))
}
