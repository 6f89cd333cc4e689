//! Scalar abstraction shared by every factor and solver routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Real floating-point scalar the structured factors are computed in.
///
/// Blanket-implemented for anything that behaves like an IEEE float, so `f32`,
/// `f64` and instrumented wrappers all work without extra glue.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal. Panics only if the type cannot represent finite `f64`s at all.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("scalar type must accept f64 literals")
    }

    /// Relative tolerance for algebraic identities among freshly computed scalars.
    ///
    /// 4096 ulps: about 9.1e-13 for `f64`, tighter than the 1e-12 contract.
    #[inline]
    fn identity_tol() -> Self {
        Self::epsilon() * Self::lit(4096.0)
    }

    /// Lossy view as `f64`, used for error payloads and reporting.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
