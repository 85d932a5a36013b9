//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative error bound")]
    NegativeErrorBound,

    #[error("finite continued fraction exhausted at {at}")]
    CfExhausted { at: usize },

    #[error("stream exhausted at index {at}")]
    StreamExhausted { at: usize },

    #[error("continued-fraction element {index} is not positive")]
    NonPositiveElement { index: usize },

    #[error("continued-fraction element {index} is not an integer")]
    NonIntegralElement { index: usize },

    #[error("scale factor {index} is not positive")]
    NonPositiveScale { index: usize },

    #[error("sequence violates '{requirement}' at index {index}")]
    Monotonicity {
        index: usize,
        requirement: &'static str,
    },

    /// A stream term would need roughly `digits` decimal digits, over the
    /// configured cap. Raised instead of exhausting memory on
    /// double-exponential towers.
    #[error("term {index} needs about {digits} decimal digits, over the cap of {cap}")]
    DigitCapExceeded { index: usize, digits: u64, cap: u64 },

    #[error("{0}")]
    InvalidInput(String),

    #[error("unknown catalog name {name:?}; known names: {known}")]
    UnknownCatalog { name: String, known: String },

    /// An identity the construction guarantees failed at runtime. Seeing
    /// this means a bug, not bad input.
    #[error("internal identity failed: {0}")]
    InternalIdentity(String),
}
