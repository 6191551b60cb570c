//! File formats and the `covarray` command line on top of `covarray-core`.

pub mod cli;
mod error;
pub mod format;
pub mod tables;

pub use error::{Error, Result};
