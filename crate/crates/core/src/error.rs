use thiserror::Error;

use crate::factors::Variant;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid system: {0}")]
    InvalidSpec(String),

    /// A recurrence value or derived quantity left the representable range.
    ///
    /// `max_safe_order` is the largest matrix order `n` that still factors at this ratio.
    #[error(
        "non-finite value at index {index} (growth ratio {growth:.6} per step); \
         largest safe order is n = {max_safe_order}"
    )]
    Overflow {
        index: usize,
        growth: f64,
        max_safe_order: usize,
    },

    /// Some `f_i` with `i >= 1` vanished, so the recurrence cannot serve as a pivot sequence.
    #[error("recurrence value f_{index} is zero; the factorization does not exist for this ratio")]
    ZeroPivot { index: usize },

    #[error("the two closed forms of the last pivot disagree: {first} vs {second}")]
    Inconsistency { first: f64, second: f64 },

    #[error("last pivot is zero ({value}); the matrix is singular")]
    SingularPivot { value: f64 },

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires the {expected} variant, factorization is {found}")]
    VariantMismatch { expected: Variant, found: Variant },

    #[error("dense materialization of order {n} exceeds the limit of {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("input entry {index} is not finite")]
    NonFiniteInput { index: usize },

    /// Dense elimination met a zero pivot after partial pivoting.
    #[error("dense elimination found a zero pivot in column {column}")]
    Singular { column: usize },

    #[error("circulant eigenvalue {index} is zero")]
    SingularEigenvalue { index: usize },

    #[error("right-hand side {index}: {source}")]
    Column {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable short name, used as the `ERROR <kind>` tag by the command-line frontend.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::Overflow { .. } => "Overflow",
            Error::ZeroPivot { .. } => "ZeroPivot",
            Error::Inconsistency { .. } => "Inconsistency",
            Error::SingularPivot { .. } => "SingularPivot",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::VariantMismatch { .. } => "VariantMismatch",
            Error::SizeGuard { .. } => "SizeGuard",
            Error::NonFiniteInput { .. } => "NonFiniteInput",
            Error::Singular { .. } => "Singular",
            Error::SingularEigenvalue { .. } => "SingularEigenvalue",
            Error::Column { source, .. } => source.kind(),
        }
    }

    /// Strips any per-column wrapping.
    pub fn root(&self) -> &Error {
        match self {
            Error::Column { source, .. } => source.root(),
            other => other,
        }
    }
}
