//! Building factorizations and rebuilding the matrix from them.

use crate::dense::{guard_size, DenseMatrix};
use crate::error::Result;
use crate::factors::{FactorKind, Factorization, Variant};
use crate::recurrence::{compute_g, generate_f, generate_r, SystemSpec};
use crate::scalar::Scalar;

/// Factors the circulant matrix `A = a K^{-1} R^{-1} A1^T` in O(n) time and storage.
pub fn decompose<T: Scalar>(spec: &SystemSpec<T>) -> Result<Factorization<T>> {
    let n = spec.n();
    let f = generate_f(spec.d(), n + 1, spec.mode())?;
    let r = generate_r(&f, n)?;
    let g = compute_g(&f, &r, n)?;
    Ok(Factorization::circulant(*spec, f, r, g))
}

/// Factors the band-only matrix (no corner entries), where `R` is the identity and
/// `A = a K^{-1} A1^T` with a bidiagonal `A1`.
pub fn decompose_tridiagonal<T: Scalar>(spec: &SystemSpec<T>) -> Result<Factorization<T>> {
    let f = generate_f(spec.d(), spec.n() + 1, spec.mode())?;
    Ok(Factorization::tridiagonal(*spec, f))
}

/// Rebuilds the dense matrix from its factors.
///
/// Each column is `a K^{-1} R^{-1}` applied to one column of `A1^T`, so the whole
/// product costs O(n^2).
pub fn reconstruct<T: Scalar>(fct: &Factorization<T>) -> Result<DenseMatrix<T>> {
    let n = fct.n();
    guard_size(n)?;
    let a1 = fct.materialize(FactorKind::A1)?;
    let mut out = DenseMatrix::zeros(n);
    for j in 0..n {
        let mut col = a1.row(j).to_vec();
        if fct.variant() == Variant::Circulant {
            col = fct.apply_r_inverse(&col)?;
        }
        let col = fct.apply_k_inverse(&col)?;
        for (i, v) in col.into_iter().enumerate() {
            out[(i, j)] = fct.a() * v;
        }
    }
    Ok(out)
}
