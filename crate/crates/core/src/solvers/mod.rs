//! Exact oracles and randomized antichain search.

pub mod brute;
pub mod sac;
pub mod witness;

pub use brute::*;
pub use sac::*;
pub use witness::*;
