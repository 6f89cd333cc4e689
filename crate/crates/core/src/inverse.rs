//! Inverse of the matrix, densely or as the first row of the circulant inverse.
//!
//! Multiplying out `A^{-1} = (1/a) (A1^{-1})^T R K` with the structured factors gives every
//! entry in O(1) after an O(n) setup. With `m = max(i, j)`, `l = min(i, j)`:
//!
//! ```text
//! a (A^{-1})_{ij} = -P_m f_l / f_m + u_i u_j / G          (circulant)
//! a (A^{-1})_{ij} = -P_m f_l / f_m                        (band only)
//! ```
//!
//! where `P_m` are the scaled suffix sums of `1 / (f_k f_{k+1})`, `u_k = P_k / f_k + f_k / f_n`,
//! and `G = g / f_n`. All three are ratios of recurrence values, so the assembly stays in
//! range for every order the recurrence itself supports.

use crate::dense::{guard_size, DenseMatrix};
use crate::error::{Error, Result};
use crate::factors::{Factorization, Variant};
use crate::recurrence::{growth_ratio, max_safe_order};
use crate::scalar::Scalar;
use crate::solver::solve;

/// Dense `A^{-1}` in O(n^2).
pub fn inverse_dense<T: Scalar>(fct: &Factorization<T>) -> Result<DenseMatrix<T>> {
    let n = fct.n();
    guard_size(n)?;
    let f = fct.f();
    let inv_a = T::one() / fct.a();
    let tails = fct.scaled_tails();
    let coupling = fct
        .g()
        .map(|g| (fct.corner_weights(&tails), g.value() / f.f(n)));

    let mut out = DenseMatrix::zeros(n);
    for i in 1..=n {
        for j in i..=n {
            // i <= j, so m = j and l = i
            let mut v = -tails[j - 1] * (f.f(i) / f.f(j));
            if let Some((u, big_g)) = &coupling {
                v = v + u[i - 1] * u[j - 1] / *big_g;
            }
            let v = v * inv_a;
            out[(i - 1, j - 1)] = v;
            out[(j - 1, i - 1)] = v;
        }
    }
    if !out.is_finite() {
        return Err(Error::Overflow {
            index: n,
            growth: growth_ratio(fct.spec().d()).as_f64(),
            max_safe_order: max_safe_order(fct.spec().d()).min(n - 1),
        });
    }
    symmetrize(&mut out);
    Ok(out)
}

fn symmetrize<T: Scalar>(m: &mut DenseMatrix<T>) {
    let tol = T::lit(1e-13) * T::one().max(m.max_abs());
    if m.asymmetry() <= tol {
        return;
    }
    let half = T::lit(0.5);
    for i in 0..m.n() {
        for j in i + 1..m.n() {
            let avg = (m[(i, j)] + m[(j, i)]) * half;
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
}

/// First row of the circulant inverse, via one O(n) solve against `e_1`.
///
/// Row `k` of `A^{-1}` is this row rotated right by `k`.
pub fn inverse_first_row<T: Scalar>(fct: &Factorization<T>) -> Result<Vec<T>> {
    if fct.variant() != Variant::Circulant {
        return Err(Error::VariantMismatch {
            expected: Variant::Circulant,
            found: fct.variant(),
        });
    }
    let mut e1 = vec![T::zero(); fct.n()];
    e1[0] = T::one();
    // A is symmetric, so column 1 equals row 1.
    solve(fct, &e1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decompose, decompose_tridiagonal};
    use crate::recurrence::SystemSpec;
    use approx::assert_relative_eq;

    // exact inverse of the worked example: first row (31, -14, 4, 4, -14) / 99
    const WORKED_ROW: [f64; 5] = [31.0 / 99.0, -14.0 / 99.0, 4.0 / 99.0, 4.0 / 99.0, -14.0 / 99.0];

    #[test]
    fn worked_example_first_row() {
        let fct = decompose(&SystemSpec::new(5, 5.0, 2.0).unwrap()).unwrap();
        let row = inverse_first_row(&fct).unwrap();
        for (got, want) in row.iter().zip(WORKED_ROW) {
            assert_relative_eq!(*got, want, max_relative = 1e-13);
        }
        // palindrome: v_j = v_{n+2-j}
        assert_relative_eq!(row[1], row[4], max_relative = 1e-12);
        assert_relative_eq!(row[2], row[3], max_relative = 1e-12);
    }

    #[test]
    fn worked_example_dense_is_circulant() {
        let fct = decompose(&SystemSpec::new(5, 5.0, 2.0).unwrap()).unwrap();
        let inv = inverse_dense(&fct).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let want = WORKED_ROW[(j + 5 - i) % 5];
                assert_relative_eq!(inv[(i, j)], want, max_relative = 1e-13);
            }
        }
        assert_eq!(inv.asymmetry(), 0.0);
    }

    #[test]
    fn small_even_order() {
        // eigenvalues 12, 10, 8, 10
        let fct = decompose(&SystemSpec::new(4, 10.0, 1.0).unwrap()).unwrap();
        let row = inverse_first_row(&fct).unwrap();
        let expected = [
            (1.0 / 12.0 + 0.1 + 0.125 + 0.1) / 4.0,
            (1.0 / 12.0 - 0.125) / 4.0,
            (1.0 / 12.0 - 0.1 + 0.125 - 0.1) / 4.0,
            (1.0 / 12.0 - 0.125) / 4.0,
        ];
        for (got, want) in row.iter().zip(expected) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
        let dense = inverse_dense(&fct).unwrap();
        assert_relative_eq!(dense[(2, 2)], 0.102_083_333_333_333_33, max_relative = 1e-12);
    }

    #[test]
    fn first_row_requires_circulant() {
        let fct = decompose_tridiagonal(&SystemSpec::new(4, 10.0, 1.0).unwrap()).unwrap();
        assert!(matches!(
            inverse_first_row(&fct),
            Err(Error::VariantMismatch { .. })
        ));
    }

    #[test]
    fn tridiagonal_inverse_of_3x3() {
        // [[5,2,0],[2,5,2],[0,2,5]] has determinant 85 and adjugate below.
        let fct = decompose_tridiagonal(&SystemSpec::new(3, 5.0, 2.0).unwrap()).unwrap();
        let inv = inverse_dense(&fct).unwrap();
        let adj = [[21.0, -10.0, 4.0], [-10.0, 25.0, -10.0], [4.0, -10.0, 21.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(inv[(i, j)], adj[i][j] / 85.0, max_relative = 1e-13);
            }
        }
    }
}
