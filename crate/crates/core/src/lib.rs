//! Exact enumeration of the cell decompositions of totally nonnegative
//! Springer fibres and their partial-flag analogues.

pub mod adjoint;
pub mod coxeter;
pub mod doc;
pub mod flag;
pub mod parabolic;
pub mod selftest;
pub mod springer;
pub mod subexpr;
pub mod error;

pub use error::{Error, Result};
