//! Exact arithmetic for alternating series and continued fractions.
//!
//! The crate converts alternating series of two shapes into equivalent
//! continued fractions (ones whose convergents equal the partial sums),
//! builds the classical families around Sylvester's sequence — Cahen-type
//! and Kellogg–Curtiss-type constants, the Davison–Shallit constant,
//! Pierce expansions — and verifies the identities, hypothesis checks,
//! digit strings, and irrationality-measure certificates these
//! constructions support, all in exact rational arithmetic.
//!
//! Everything is deterministic and exact: no floating point anywhere.

pub mod analysis;
pub mod confrac;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod series;
pub mod stream;

pub use error::Error;
pub use exact::{floor_int, rat_normalize, ratio, render_decimal, CertifiedDecimal, Rat, Sign};

pub use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;
