//! Exact enumeration and identity checking for parking functions, unit
//! interval parking functions, Cayley permutations and labeled rooted forests.

pub mod cli;
pub mod combin;
pub mod error;
pub mod expectations;
pub mod forests;
pub mod qalgebra;
pub mod report;
pub mod symfunc;
pub mod parking;
pub mod words;

pub use error::{Error, Result};
