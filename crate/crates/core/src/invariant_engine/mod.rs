//! Evaluation and numeric certification of Hilbert bases.

pub mod checks;
pub mod pfaffian;

pub use checks::*;
