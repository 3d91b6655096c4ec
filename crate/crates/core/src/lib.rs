pub mod adversary;
pub mod error;
pub mod format;
pub mod gen;
pub mod harness;
pub mod model;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
