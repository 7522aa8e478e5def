//! Linear codes, subcodes and coordinate supports.

mod linear;
mod support;

pub(crate) use linear::{left_kernel, row_support};
pub use linear::{hierarchy_from_dlp, LinearCode, Subcode, DEFAULT_ENUM_LIMIT};
pub use support::SupportSet;
