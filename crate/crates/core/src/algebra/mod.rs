//! Finite-field scalars and dense matrices.

mod field;
mod matrix;
pub mod subsets;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
