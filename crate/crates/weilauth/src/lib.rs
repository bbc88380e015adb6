//! Command-line front end and parallel drivers for `weilauth-core`.

pub mod cli;
pub mod error;
pub mod golden;
pub mod parallel;
pub mod render;

pub use error::{AppError, Result};
