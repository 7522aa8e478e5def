//! Harder-Narasimhan invariants of linear codes and matroids over small
//! finite fields, with executable checks of the duality and tensor product
//! theorems that govern them.

pub mod algebra;
pub mod catalog;
pub mod check;
pub mod code;
pub mod error;
pub mod format;
pub mod hn;
pub mod matroid;
pub mod rr;
pub mod tensor;

pub use error::{Error, Result};

/// Exact rational numbers used for slopes, rates and polygon vertices.
pub type Rational = num_rational::Ratio<i64>;
