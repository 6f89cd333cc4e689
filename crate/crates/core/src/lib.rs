//! Analytical factorization, inverse, and O(n) solve for symmetric circulant tridiagonal
//! matrices
//!
//! ```text
//!     [ c a       a ]
//!     [ a c a       ]
//! A = [   . . .     ]      |c| > 2|a|,  a != 0
//!     [       a c a ]
//!     [ a       a c ]
//! ```
//!
//! The matrix is normalized to `Abar = A / a` with diagonal `d = c / a` and factored as
//! `A = a K^{-1} R^{-1} A1^T`, where every factor is described by a single three-term
//! recurrence `f_{i+1} = -d f_i - f_{i-1}`. Factors are kept implicit (O(n) storage);
//! solves are O(n) per right-hand side and the dense inverse is assembled in O(n^2).
//!
//! Everything is generic over [`Scalar`]; the `*64` aliases pin the common `f64` case.
//!
//! ```
//! use circkr::{decompose, solve, SystemSpec64};
//!
//! let spec = SystemSpec64::new(5, 5.0, 2.0).unwrap();
//! let fct = decompose(&spec).unwrap();
//! let x = solve(&fct, &[19.0, 18.0, 27.0, 36.0, 35.0]).unwrap();
//! assert!((x[4] - 5.0).abs() < 1e-12);
//! ```

pub mod decomposition;
pub mod dense;
pub mod error;
pub mod factors;
pub mod inverse;
pub mod oracle;
pub mod recurrence;
pub mod scalar;
pub mod solver;

pub use decomposition::{decompose, decompose_tridiagonal, reconstruct};
pub use dense::{guard_size, DenseMatrix, DENSE_SIZE_LIMIT};
pub use error::{Error, Result};
pub use factors::{FactorKind, Factorization, Variant};
pub use inverse::{inverse_dense, inverse_first_row};
pub use recurrence::{
    compute_g, generate_f, generate_r, growth_ratio, max_safe_order, FSequence, GScalar, Mode,
    RCoefficients, SystemSpec,
};
pub use scalar::Scalar;
pub use solver::{solve, solve_many};

pub type SystemSpec64 = SystemSpec<f64>;
pub type FSequence64 = FSequence<f64>;
pub type RCoefficients64 = RCoefficients<f64>;
pub type GScalar64 = GScalar<f64>;
pub type Factorization64 = Factorization<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;

pub type SystemSpec32 = SystemSpec<f32>;
pub type Factorization32 = Factorization<f32>;
pub type DenseMatrix32 = DenseMatrix<f32>;

/// Decomposes either variant.
pub fn decompose_variant<T: Scalar>(
    spec: &SystemSpec<T>,
    variant: Variant,
) -> Result<Factorization<T>> {
    match variant {
        Variant::Circulant => decompose(spec),
        Variant::Tridiagonal => decompose_tridiagonal(spec),
    }
}
