//! Catalan numbers, Catalan–Qi functions, and the second-kind Catalan–Qi
//! numbers, each computable by several mutually independent routes:
//!
//! * exact closed forms in big-rational and ℚ(√b) arithmetic,
//! * generating-series coefficient extraction,
//! * numerical quadrature of their integral representations.
//!
//! The crate also ships an identity-verification harness that checks every
//! discrete identity relating these quantities and reports the outcome in a
//! machine-readable form.

pub mod bell;
pub mod catalan;
pub mod error;
pub mod exact;
pub mod gamma;
pub mod identities;
pub mod quad;
pub mod second_kind;

pub use error::{Error, Result};
