//! Implicit factors of the normalized matrix.
//!
//! With `Abar = A / a`, the circulant matrix factors as
//!
//! ```text
//! Abar = K^{-1} R^{-1} A1^T        (so R K Abar = A1^T is upper triangular)
//! ```
//!
//! * `K` is lower triangular with every entry of column `j` equal to `f_j`, so `K^{-1}` is
//!   lower bidiagonal with diagonal `1/f_i` and subdiagonal `-1/f_i`.
//! * `R` is the identity with last row `(r_1, ..., r_{n-1}, 1)`; `R^{-1}` negates the `r_j`.
//! * `A1` is lower triangular with diagonal `(-f_2, ..., -f_n, g)`, subdiagonal
//!   `(i+1, i) = f_i` for `i <= n-2`, and a last row of ones ending in `f_{n-1} + 1, g`.
//!
//! For the plain tridiagonal matrix (no corner entries) `R = I`, and `A1` reduces to a lower
//! bidiagonal with diagonal `(-f_2, ..., -f_{n+1})` and subdiagonal `f_1, ..., f_{n-1}`.
//!
//! Only the recurrence values are stored; dense matrices exist only when asked for through
//! [`Factorization::materialize`].

use std::fmt;

use crate::dense::{guard_size, DenseMatrix};
use crate::error::{Error, Result};
use crate::recurrence::{FSequence, GScalar, RCoefficients, SystemSpec};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Band plus the two corner entries.
    Circulant,
    /// Band only.
    Tridiagonal,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Circulant => "circulant",
            Variant::Tridiagonal => "tridiagonal",
        })
    }
}

/// Selects one factor for dense materialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    K,
    KInverse,
    R,
    RInverse,
    A1,
    A1Inverse,
}

impl FactorKind {
    pub const ALL: [FactorKind; 6] = [
        FactorKind::K,
        FactorKind::KInverse,
        FactorKind::R,
        FactorKind::RInverse,
        FactorKind::A1,
        FactorKind::A1Inverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FactorKind::K => "K",
            FactorKind::KInverse => "K_inv",
            FactorKind::R => "R",
            FactorKind::RInverse => "R_inv",
            FactorKind::A1 => "A1",
            FactorKind::A1Inverse => "A1_inv",
        }
    }
}

/// O(n) description of all factors for one system.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<T> {
    spec: SystemSpec<T>,
    f: FSequence<T>,
    r: RCoefficients<T>,
    g: Option<GScalar<T>>,
    variant: Variant,
}

impl<T: Scalar> Factorization<T> {
    pub(crate) fn circulant(
        spec: SystemSpec<T>,
        f: FSequence<T>,
        r: RCoefficients<T>,
        g: GScalar<T>,
    ) -> Self {
        debug_assert_eq!(f.max_index(), spec.n() + 1);
        debug_assert_eq!(r.len(), spec.n() - 1);
        Factorization {
            spec,
            f,
            r,
            g: Some(g),
            variant: Variant::Circulant,
        }
    }

    pub(crate) fn tridiagonal(spec: SystemSpec<T>, f: FSequence<T>) -> Self {
        debug_assert_eq!(f.max_index(), spec.n() + 1);
        Factorization {
            spec,
            f,
            r: RCoefficients::empty(),
            g: None,
            variant: Variant::Tridiagonal,
        }
    }

    pub fn spec(&self) -> &SystemSpec<T> {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// Scale factor applied once at the boundary of every normalized computation.
    pub fn a(&self) -> T {
        self.spec.a()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn f(&self) -> &FSequence<T> {
        &self.f
    }

    /// Empty for the tridiagonal variant.
    pub fn r(&self) -> &RCoefficients<T> {
        &self.r
    }

    /// Absent for the tridiagonal variant.
    pub fn g(&self) -> Option<&GScalar<T>> {
        self.g.as_ref()
    }

    /// Last diagonal entry of `A1`: `g` for the circulant variant, `-f_{n+1}` otherwise.
    pub fn last_pivot(&self) -> T {
        match &self.g {
            Some(g) => g.value(),
            None => -self.f.f(self.n() + 1),
        }
    }

    fn check_len(&self, v: &[T]) -> Result<()> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn require_circulant(&self) -> Result<()> {
        if self.variant != Variant::Circulant {
            return Err(Error::VariantMismatch {
                expected: Variant::Circulant,
                found: self.variant,
            });
        }
        Ok(())
    }

    /// `K x`: prefix sums `y_i = sum_{j <= i} f_j x_j`.
    pub fn apply_k(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x)?;
        let mut acc = T::zero();
        Ok(x
            .iter()
            .enumerate()
            .map(|(col, &xj)| {
                acc = acc + self.f.f(col + 1) * xj;
                acc
            })
            .collect())
    }

    /// `K^{-1} y`: `x_1 = y_1 / f_1`, `x_i = (y_i - y_{i-1}) / f_i`.
    pub fn apply_k_inverse(&self, y: &[T]) -> Result<Vec<T>> {
        self.check_len(y)?;
        let mut prev = T::zero();
        Ok(y
            .iter()
            .enumerate()
            .map(|(row, &yi)| {
                let xi = (yi - prev) / self.f.f(row + 1);
                prev = yi;
                xi
            })
            .collect())
    }

    fn last_row_update(&self, x: &[T], sign: T) -> Result<Vec<T>> {
        self.require_circulant()?;
        self.check_len(x)?;
        let n = self.n();
        let dot = self.r.as_slice().iter().zip(&x[..n - 1]).fold(T::zero(), |acc, (&r, &v)| acc + r * v);
        let mut out = x.to_vec();
        out[n - 1] = x[n - 1] + sign * dot;
        Ok(out)
    }

    /// `R x`: identity except `y_n = x_n + sum_j r_j x_j`.
    pub fn apply_r(&self, x: &[T]) -> Result<Vec<T>> {
        self.last_row_update(x, T::one())
    }

    /// `R^{-1} y`: identity except `x_n = y_n - sum_j r_j y_j`.
    pub fn apply_r_inverse(&self, y: &[T]) -> Result<Vec<T>> {
        self.last_row_update(y, -T::one())
    }

    /// Scaled suffix sums `P_m = f_m^2 * sum_{l=m}^{L} 1 / (f_l f_{l+1})` for `m = 1..=n`,
    /// returned zero-based, where `L = n - 1` for the circulant variant and `L = n` otherwise.
    ///
    /// Evaluated as `P_m = q_m + q_m^2 P_{m+1}` with `q_m = f_m / f_{m+1}`, `|q_m| < 1`, so
    /// nothing overflows or underflows even when `f_m^2` would.
    pub(crate) fn scaled_tails(&self) -> Vec<T> {
        let n = self.n();
        let f = &self.f;
        let last = if self.g.is_some() { n - 1 } else { n };
        let mut tails = vec![T::zero(); n];
        let mut next = T::zero();
        for m in (1..=last).rev() {
            let q = f.f(m) / f.f(m + 1);
            next = q + q * q * next;
            tails[m - 1] = next;
        }
        tails
    }

    /// Weights `u_k = P_k / f_k + f_k / f_n` (with `u_n = 1`) coupling each unknown to the
    /// last pivot; circulant variant only.
    pub(crate) fn corner_weights(&self, tails: &[T]) -> Vec<T> {
        let n = self.n();
        let f = &self.f;
        (1..=n)
            .map(|k| tails[k - 1] / f.f(k) + f.f(k) / f.f(n))
            .collect()
    }

    /// Last row of `A1^{-1}` in O(n).
    ///
    /// Rows `1..n-1` of `A1^{-1}` have the closed form `-f_j / (f_i f_{i+1})`. The last row
    /// follows from one forward-substitution step against the last row of `A1`, which
    /// collapses to `u_j / g` with `u` from the scaled suffix sums.
    pub fn a1_inverse_last_row(&self) -> Vec<T> {
        let n = self.n();
        let f = &self.f;
        match &self.g {
            None => (1..=n).map(|j| -f.f(j) / f.f(n) / f.f(n + 1)).collect(),
            Some(g) => {
                let tails = self.scaled_tails();
                self.corner_weights(&tails)
                    .into_iter()
                    .map(|u| u / g.value())
                    .collect()
            }
        }
    }

    /// Dense realization of one factor.
    pub fn materialize(&self, which: FactorKind) -> Result<DenseMatrix<T>> {
        let n = self.n();
        guard_size(n)?;
        let f = &self.f;
        let mut m = DenseMatrix::zeros(n);
        match which {
            FactorKind::K => {
                for i in 0..n {
                    for j in 0..=i {
                        m[(i, j)] = f.f(j + 1);
                    }
                }
            }
            FactorKind::KInverse => {
                for i in 0..n {
                    let inv = T::one() / f.f(i + 1);
                    m[(i, i)] = inv;
                    if i > 0 {
                        m[(i, i - 1)] = -inv;
                    }
                }
            }
            FactorKind::R | FactorKind::RInverse => {
                self.require_circulant()?;
                let sign = if which == FactorKind::R { T::one() } else { -T::one() };
                m = DenseMatrix::identity(n);
                for (j, &r) in self.r.as_slice().iter().enumerate() {
                    m[(n - 1, j)] = sign * r;
                }
            }
            FactorKind::A1 => {
                for i in 0..n {
                    m[(i, i)] = -f.f(i + 2);
                    if i > 0 {
                        m[(i, i - 1)] = f.f(i);
                    }
                }
                if let Some(g) = &self.g {
                    for j in 0..n - 2 {
                        m[(n - 1, j)] = T::one();
                    }
                    m[(n - 1, n - 2)] = f.f(n - 1) + T::one();
                    m[(n - 1, n - 1)] = g.value();
                }
            }
            FactorKind::A1Inverse => {
                // closed-form rows: 1-based (i, j) = -f_j / (f_i f_{i+1}), j <= i
                let closed_rows = if self.g.is_some() { n - 1 } else { n };
                for i in 0..closed_rows {
                    let (lo, hi) = (f.f(i + 1), f.f(i + 2));
                    for j in 0..=i {
                        m[(i, j)] = -f.f(j + 1) / lo / hi;
                    }
                }
                if self.g.is_some() {
                    for (j, v) in self.a1_inverse_last_row().into_iter().enumerate() {
                        m[(n - 1, j)] = v;
                    }
                }
            }
        }
        Ok(m)
    }
}
