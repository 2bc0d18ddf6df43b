//! Exact computation of hyperfibonacci and hyperlucas sequences, the
//! square/domino board and bracelet tilings that realize them, and a
//! registry of machine-checkable identities relating them.
//!
//! Everything is integer-exact: sequence values are arbitrary-precision
//! naturals, identity checks compare signed big integers, and golden-ratio
//! comparisons are decided by integer sign tests instead of floating point.

pub mod bfile;
pub mod error;
pub mod identity;
pub mod sequence;
pub mod tiling;

pub use error::Error;
pub use sequence::{Engine, Int, Nat};
