//! The three-term recurrence behind every factor.
//!
//! A symmetric circulant tridiagonal matrix with diagonal `c` and band/corner value `a`
//! is handled in normalized form `A = a * Abar`, where `Abar` has diagonal `d = c / a`
//! and ones on the band. Every factor entry is a ratio or product of the sequence
//!
//! ```text
//! f_0 = 0,  f_1 = 1,  f_{i+1} = -d * f_i - f_{i-1}
//! ```
//!
//! together with the last-row coefficients `r_j = f_n f_1 / (f_{j+1} f_j)` and one
//! extra pivot `g`. For `|d| > 2` the sequence grows geometrically with ratio
//! `(|d| + sqrt(d^2 - 4)) / 2`, which bounds the order that fits in a given float type.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How strictly the diagonal dominance condition `|c| > 2|a|` is enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Reject `|d| <= 2`.
    #[default]
    Strict,
    /// Accept any finite ratio and fail only if a pivot actually vanishes.
    Permissive,
}

/// The triple `(n, c, a)` describing the matrix, plus the derived ratio `d = c / a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemSpec<T> {
    n: usize,
    c: T,
    a: T,
    d: T,
    mode: Mode,
}

impl<T: Scalar> SystemSpec<T> {
    pub fn new(n: usize, c: T, a: T) -> Result<Self> {
        Self::with_mode(n, c, a, Mode::Strict)
    }

    pub fn permissive(n: usize, c: T, a: T) -> Result<Self> {
        Self::with_mode(n, c, a, Mode::Permissive)
    }

    pub fn with_mode(n: usize, c: T, a: T, mode: Mode) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("order n = {n} must be at least 3")));
        }
        if !c.is_finite() || !a.is_finite() {
            return Err(Error::InvalidSpec(format!("c = {c} and a = {a} must be finite")));
        }
        if a.is_zero() {
            return Err(Error::InvalidSpec("off-diagonal value a must be nonzero".into()));
        }
        if mode == Mode::Strict && c.abs() <= T::lit(2.0) * a.abs() {
            return Err(Error::InvalidSpec(format!(
                "|c| > 2|a| is required (c = {c}, a = {a}, |d| = {})",
                (c / a).abs()
            )));
        }
        let d = c / a;
        if !d.is_finite() {
            return Err(Error::InvalidSpec(format!("ratio c / a = {d} is not finite")));
        }
        Ok(SystemSpec { n, c, a, d, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn a(&self) -> T {
        self.a
    }

    /// Normalized diagonal `c / a`.
    pub fn d(&self) -> T {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

/// Asymptotic per-step growth `|f_{i+1} / f_i|` of the recurrence.
///
/// Equals 1 for `|d| <= 2`, where the sequence oscillates instead of growing.
pub fn growth_ratio<T: Scalar>(d: T) -> T {
    let two = T::lit(2.0);
    let ad = d.abs();
    if ad <= two {
        T::one()
    } else {
        (ad + (ad * ad - two * two).sqrt()) / two
    }
}

/// Largest matrix order whose sequence `f_0..f_{n+1}` stays below the overflow threshold.
pub fn max_safe_order<T: Scalar>(d: T) -> usize {
    let rho = growth_ratio(d).as_f64();
    if rho <= 1.0 {
        return usize::MAX;
    }
    let limit = T::max_value().as_f64().ln() / rho.ln();
    (limit.floor() as usize).saturating_sub(2)
}

fn overflow_at<T: Scalar>(d: T, index: usize, max_safe_order: usize) -> Error {
    Error::Overflow {
        index,
        growth: growth_ratio(d).as_f64(),
        max_safe_order,
    }
}

/// Recurrence values `f_0..f_m` for one ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct FSequence<T> {
    d: T,
    values: Vec<T>,
}

impl<T: Scalar> FSequence<T> {
    pub fn d(&self) -> T {
        self.d
    }

    /// `f_i`.
    #[inline]
    pub fn f(&self, i: usize) -> T {
        self.values[i]
    }

    /// Highest index `m` held.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn as_slice(&self) -> &[T] {
        &self.values
    }
}

/// Generates `f_0..f_m` for ratio `d`.
///
/// In strict mode `|d| > 2` is required. Permissive mode accepts any finite `d` but
/// fails with [`Error::ZeroPivot`] when some `f_i` (`i >= 1`) vanishes.
pub fn generate_f<T: Scalar>(d: T, m: usize, mode: Mode) -> Result<FSequence<T>> {
    if m < 1 {
        return Err(Error::InvalidSpec("recurrence needs at least f_0 and f_1".into()));
    }
    if !d.is_finite() {
        return Err(Error::InvalidSpec(format!("ratio d = {d} is not finite")));
    }
    if mode == Mode::Strict && d.abs() <= T::lit(2.0) {
        return Err(Error::InvalidSpec(format!(
            "|d| > 2 is required in strict mode (d = {d})"
        )));
    }

    let mut values = Vec::with_capacity(m + 1);
    values.push(T::zero());
    values.push(T::one());
    let zero_tol = T::epsilon() * T::lit(64.0);
    for i in 1..m {
        let (prev, cur) = (values[i - 1], values[i]);
        let next = -d * cur - prev;
        if !next.is_finite() {
            return Err(overflow_at(d, i + 1, i.saturating_sub(1)));
        }
        // Exact cancellation leaves rounding residue, so "zero" is judged against the
        // magnitude of the terms that produced it.
        if next.abs() <= zero_tol * ((d * cur).abs() + prev.abs()) {
            return Err(Error::ZeroPivot { index: i + 1 });
        }
        debug_assert!(
            mode == Mode::Permissive || next.abs() >= (d.abs() - T::one()) * cur.abs(),
            "geometric growth violated at index {}",
            i + 1
        );
        values.push(next);
    }
    Ok(FSequence { d, values })
}

/// Last-row coefficients `r_1..r_{n-1}` of the circulant correction factor.
#[derive(Debug, Clone, PartialEq)]
pub struct RCoefficients<T> {
    values: Vec<T>,
}

impl<T: Scalar> RCoefficients<T> {
    pub(crate) fn empty() -> Self {
        RCoefficients { values: Vec::new() }
    }

    /// `r_j` for `1 <= j <= n - 1`.
    #[inline]
    pub fn r(&self, j: usize) -> T {
        self.values[j - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `r_1..r_{n-1}` as a zero-based slice.
    pub fn as_slice(&self) -> &[T] {
        &self.values
    }
}

/// Computes `r_j = f_n f_1 / (f_{j+1} f_j)` for `j = 1..n-1`.
///
/// Divides one factor at a time; the product `f_{j+1} f_j` alone overflows long before
/// the quotient does.
pub fn generate_r<T: Scalar>(f: &FSequence<T>, n: usize) -> Result<RCoefficients<T>> {
    if n < 2 || f.max_index() < n {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: f.max_index() + 1,
        });
    }
    let top = f.f(n) * f.f(1);
    let mut values = Vec::with_capacity(n - 1);
    for j in 1..n {
        let (lo, hi) = (f.f(j), f.f(j + 1));
        if lo.is_zero() || hi.is_zero() {
            return Err(Error::ZeroPivot {
                index: if lo.is_zero() { j } else { j + 1 },
            });
        }
        let r = top / hi / lo;
        if !r.is_finite() {
            return Err(overflow_at(f.d(), j, max_safe_order(f.d()).min(n - 1)));
        }
        values.push(r);
    }
    Ok(RCoefficients { values })
}

/// The last pivot `g_{n+1}` of the transposed third factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GScalar<T> {
    value: T,
    sum_form: T,
}

impl<T: Scalar> GScalar<T> {
    /// Value from `1 - f_{n+1} + sum r_j + r_{n-1} f_{n-1}`.
    pub fn value(&self) -> T {
        self.value
    }

    /// Value from `1 + f_1 - f_{n+1} + sum r_j f_1`, computed as a cross-check.
    pub fn sum_form(&self) -> T {
        self.sum_form
    }
}

/// Evaluates `g_{n+1}` by both closed forms and insists they agree.
pub fn compute_g<T: Scalar>(f: &FSequence<T>, r: &RCoefficients<T>, n: usize) -> Result<GScalar<T>> {
    if f.max_index() < n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 2,
            found: f.max_index() + 1,
        });
    }
    if n < 2 || r.len() != n - 1 {
        return Err(Error::DimensionMismatch {
            expected: n.saturating_sub(1),
            found: r.len(),
        });
    }
    let one = T::one();
    let f1 = f.f(1);
    let fnp1 = f.f(n + 1);

    let r_sum = r.as_slice().iter().fold(T::zero(), |acc, &x| acc + x);
    let r_abs_sum = r.as_slice().iter().fold(T::zero(), |acc, &x| acc + x.abs());
    let value = one - fnp1 + r_sum + r.r(n - 1) * f.f(n - 1);
    let sum_form = one + f1 - fnp1 + r.as_slice().iter().fold(T::zero(), |acc, &x| acc + x * f1);

    if !value.is_finite() || !sum_form.is_finite() {
        return Err(overflow_at(f.d(), n + 1, max_safe_order(f.d()).min(n - 1)));
    }

    // Both forms are sums of the same large terms, so agreement and singularity are
    // judged against the magnitude of those terms rather than against g itself.
    let scale = T::lit(2.0) + fnp1.abs() + r_abs_sum;
    if (value - sum_form).abs() > T::identity_tol() * scale {
        return Err(Error::Inconsistency {
            first: value.as_f64(),
            second: sum_form.as_f64(),
        });
    }
    if value.is_zero() || value.abs() <= T::epsilon() * T::lit(16.0) * scale {
        return Err(Error::SingularPivot { value: value.as_f64() });
    }
    Ok(GScalar { value, sum_form })
}
