//! Command implementations behind the `hn-codes` binary.

pub mod commands;
pub mod report;
pub mod selftest;
pub mod svg;
