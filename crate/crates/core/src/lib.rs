//! Exact computer algebra for trigonometric and rational shuffle algebras of
//! types C and D.

pub mod scalars;
pub mod error;
pub mod polyvars;
pub mod roots;
pub mod shuffle;
pub mod rootvec;
pub mod specmaps;
pub mod yangian;

pub use error::{Error, Result};
