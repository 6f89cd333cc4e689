//! Reference computations that share no code with the structured factors.
//!
//! Dense construction, partial-pivoting Gaussian elimination, and the circulant eigenvalue
//! formula. Intended for tests and for the `check` command; none of these are O(n).

use crate::dense::{guard_size, DenseMatrix};
use crate::error::{Error, Result};
use crate::factors::Variant;
use crate::recurrence::SystemSpec;
use crate::scalar::Scalar;

/// Dense `A`: diagonal `c`, band `a`, and corners `a` (circulant) or `0` (band only).
pub fn build_dense<T: Scalar>(spec: &SystemSpec<T>, variant: Variant) -> Result<DenseMatrix<T>> {
    let n = spec.n();
    guard_size(n)?;
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        m[(i, i)] = spec.c();
        if i + 1 < n {
            m[(i, i + 1)] = spec.a();
            m[(i + 1, i)] = spec.a();
        }
    }
    if variant == Variant::Circulant {
        m[(0, n - 1)] = spec.a();
        m[(n - 1, 0)] = spec.a();
    }
    Ok(m)
}

/// LU factors with row permutation, packed in one matrix.
struct Lu<T> {
    lu: DenseMatrix<T>,
    perm: Vec<usize>,
}

fn lu_factor<T: Scalar>(a: &DenseMatrix<T>) -> Result<Lu<T>> {
    let n = a.n();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let scale = T::one().max(a.max_abs());
    for k in 0..n {
        let (p, pivot) = (k..n)
            .map(|i| (i, lu[(i, k)].abs()))
            .fold((k, T::zero()), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot <= T::epsilon() * scale {
            return Err(Error::Singular { column: k });
        }
        if p != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(p, j)];
                lu[(p, j)] = tmp;
            }
            perm.swap(k, p);
        }
        let pivot = lu[(k, k)];
        for i in k + 1..n {
            let factor = lu[(i, k)] / pivot;
            lu[(i, k)] = factor;
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let v = lu[(k, j)];
                lu[(i, j)] = lu[(i, j)] - factor * v;
            }
        }
    }
    Ok(Lu { lu, perm })
}

impl<T: Scalar> Lu<T> {
    fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.lu.n();
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = self.lu.row(i);
            let s = (0..i).fold(x[i], |s, j| s - row[j] * x[j]);
            x[i] = s;
        }
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let s = (i + 1..n).fold(x[i], |s, j| s - row[j] * x[j]);
            x[i] = s / row[i];
        }
        x
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn dense_solve<T: Scalar>(a: &DenseMatrix<T>, b: &[T]) -> Result<Vec<T>> {
    if b.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.len(),
        });
    }
    Ok(lu_factor(a)?.solve(b))
}

/// `A^{-1}` column by column from one LU factorization.
pub fn dense_inverse<T: Scalar>(a: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let n = a.n();
    let lu = lu_factor(a)?;
    let mut inv = DenseMatrix::zeros(n);
    let mut e = vec![T::zero(); n];
    for j in 0..n {
        e[j] = T::one();
        for (i, v) in lu.solve(&e).into_iter().enumerate() {
            inv[(i, j)] = v;
        }
        e[j] = T::zero();
    }
    Ok(inv)
}

/// `j`-th eigenvalue `c + 2a cos(2 pi j / n)` of the circulant matrix.
pub fn circulant_eigenvalue<T: Scalar>(spec: &SystemSpec<T>, j: usize) -> T {
    let theta = T::lit(2.0) * T::lit(std::f64::consts::PI) * T::from_usize(j).unwrap() / T::from_usize(spec.n()).unwrap();
    spec.c() + T::lit(2.0) * spec.a() * theta.cos()
}

/// `(A^{-1})_{1, 1+k} = (1/n) sum_j cos(2 pi j k / n) / lambda_j` for the circulant matrix.
pub fn spectral_inverse_entry<T: Scalar>(spec: &SystemSpec<T>, k: usize) -> Result<T> {
    let n = spec.n();
    let nn = T::from_usize(n).unwrap();
    let two_pi = T::lit(2.0) * T::lit(std::f64::consts::PI);
    let mut sum = T::zero();
    for j in 0..n {
        let lambda = circulant_eigenvalue(spec, j);
        if lambda.is_zero() {
            return Err(Error::SingularEigenvalue { index: j });
        }
        // reduce j*k mod n first so the angle stays in [0, 2 pi)
        let phase = T::from_usize((j * k) % n).unwrap();
        sum = sum + (two_pi * phase / nn).cos() / lambda;
    }
    Ok(sum / nn)
}

/// Whole first row of the circulant inverse from the spectral formula.
pub fn spectral_first_row<T: Scalar>(spec: &SystemSpec<T>) -> Result<Vec<T>> {
    (0..spec.n()).map(|k| spectral_inverse_entry(spec, k)).collect()
}
