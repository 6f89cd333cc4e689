//! O(n) linear solves.
//!
//! `A x = b` is rewritten as `A1^T x = R K (b / a)`. The upper-triangular `A1^T` has O(1)
//! entries per row plus a last column, so once `x_n` is known each remaining unknown costs
//! O(1):
//!
//! ```text
//! x_n     = y_n / g
//! x_{n-1} = (y_{n-1} - (f_{n-1} + 1) x_n) / (-f_n)
//! x_i     = (y_i - f_i x_{i+1} - x_n) / (-f_{i+1})      i = n-2, ..., 1
//! ```
//!
//! The band-only variant has `R = I` and a bidiagonal `A1^T` with last pivot `-f_{n+1}`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factors::{Factorization, Variant};
use crate::recurrence::{growth_ratio, max_safe_order};
use crate::scalar::Scalar;

fn overflow<T: Scalar>(fct: &Factorization<T>, index: usize) -> Error {
    let d = fct.spec().d();
    Error::Overflow {
        index,
        growth: growth_ratio(d).as_f64(),
        max_safe_order: max_safe_order(d).min(fct.n() - 1),
    }
}

/// Solves `A x = b` for one right-hand side.
pub fn solve<T: Scalar>(fct: &Factorization<T>, b: &[T]) -> Result<Vec<T>> {
    let n = fct.n();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    if let Some(index) = b.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteInput { index });
    }

    let a = fct.a();
    let scaled: Vec<T> = b.iter().map(|&v| v / a).collect();
    let mut y = fct.apply_k(&scaled)?;
    if fct.variant() == Variant::Circulant {
        y = fct.apply_r(&y)?;
    }
    if let Some(i) = y.iter().position(|v| !v.is_finite()) {
        return Err(overflow(fct, i + 1));
    }

    back_substitute(fct, &mut y);

    if let Some(i) = y.iter().position(|v| !v.is_finite()) {
        return Err(overflow(fct, i + 1));
    }
    Ok(y)
}

/// Overwrites `y` with the solution of `A1^T x = y`.
fn back_substitute<T: Scalar>(fct: &Factorization<T>, y: &mut [T]) {
    let n = y.len();
    let f = fct.f();
    // 1-based index i lives at y[i - 1]
    match fct.g() {
        Some(g) => {
            let xn = y[n - 1] / g.value();
            y[n - 1] = xn;
            let mut next = (y[n - 2] - (f.f(n - 1) + T::one()) * xn) / -f.f(n);
            y[n - 2] = next;
            for i in (1..=n - 2).rev() {
                next = (y[i - 1] - f.f(i) * next - xn) / -f.f(i + 1);
                y[i - 1] = next;
            }
        }
        None => {
            let mut next = y[n - 1] / -f.f(n + 1);
            y[n - 1] = next;
            for i in (1..n).rev() {
                next = (y[i - 1] - f.f(i) * next) / -f.f(i + 1);
                y[i - 1] = next;
            }
        }
    }
}

/// Solves for several right-hand sides; columns are independent and run in parallel.
///
/// The first failing column (lowest index) is reported, wrapped in [`Error::Column`].
pub fn solve_many<T: Scalar>(fct: &Factorization<T>, rhs: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    rhs.par_iter()
        .map(|b| solve(fct, b))
        .collect::<Vec<_>>()
        .into_iter()
        .enumerate()
        .map(|(index, res)| {
            res.map_err(|e| Error::Column {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decompose, decompose_tridiagonal};
    use crate::recurrence::SystemSpec;
    use approx::assert_relative_eq;

    fn worked() -> Factorization<f64> {
        decompose(&SystemSpec::new(5, 5.0, 2.0).unwrap()).unwrap()
    }

    #[test]
    fn worked_example_rhs() {
        let x = solve(&worked(), &[19.0, 18.0, 27.0, 36.0, 35.0]).unwrap();
        for (got, want) in x.iter().zip([1.0, 2.0, 3.0, 4.0, 5.0]) {
            assert_relative_eq!(*got, want, max_relative = 1e-13);
        }
    }

    #[test]
    fn homogeneous_system() {
        assert_eq!(solve(&worked(), &[0.0; 5]).unwrap(), vec![0.0; 5]);
    }

    #[test]
    fn constant_rhs_gives_constant_solution() {
        let fct = decompose(&SystemSpec::new(9, -7.5, 1.25).unwrap()).unwrap();
        let x = solve(&fct, &[-7.5 + 2.5; 9]).unwrap();
        for v in x {
            assert_relative_eq!(v, 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn tridiagonal_solve() {
        // [[5,2,0],[2,5,2],[0,2,5]] (1,1,1) = (7,9,7)
        let fct = decompose_tridiagonal(&SystemSpec::new(3, 5.0, 2.0).unwrap()).unwrap();
        let x = solve(&fct, &[7.0, 9.0, 7.0]).unwrap();
        for v in x {
            assert_relative_eq!(v, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn input_validation() {
        let fct = worked();
        assert_eq!(
            solve(&fct, &[1.0; 4]),
            Err(Error::DimensionMismatch {
                expected: 5,
                found: 4
            })
        );
        assert_eq!(
            solve(&fct, &[1.0, f64::NAN, 0.0, 0.0, 0.0]),
            Err(Error::NonFiniteInput { index: 1 })
        );
    }

    #[test]
    fn batched_solves() {
        let fct = worked();
        assert!(solve_many(&fct, &[]).unwrap().is_empty());
        let b = vec![19.0, 18.0, 27.0, 36.0, 35.0];
        assert_eq!(
            solve_many(&fct, std::slice::from_ref(&b)).unwrap(),
            vec![solve(&fct, &b).unwrap()]
        );
        let cols: Vec<Vec<f64>> = (0..5)
            .map(|k| (0..5).map(|i| if i == k { 1.0 } else { 0.0 }).collect())
            .collect();
        let inv = solve_many(&fct, &cols).unwrap();
        let first = [0.3131, -0.1414, 0.0404, 0.0404, -0.1414];
        for (got, want) in inv[0].iter().zip(first) {
            assert!((got - want).abs() < 5e-4);
        }
    }

    #[test]
    fn batched_error_names_column() {
        let fct = worked();
        let err = solve_many(&fct, &[vec![0.0; 5], vec![0.0; 3], vec![f64::INFINITY; 5]]).unwrap_err();
        assert_eq!(
            err,
            Error::Column {
                index: 1,
                source: Box::new(Error::DimensionMismatch {
                    expected: 5,
                    found: 3
                })
            }
        );
        assert_eq!(err.kind(), "DimensionMismatch");
    }
}
