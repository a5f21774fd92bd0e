//! Exact link-pattern representations of Temperley–Lieb algebras of types A, B, C, D
//! and polynomial solutions of the associated level-one qKZ systems.

pub mod algebra;
pub mod arith;
pub mod eigen;
mod error;
pub mod limits;
pub mod oracle;
pub mod patterns;
pub mod qkz;
pub mod rmatrix;
pub mod serial;

pub use error::{Error, Result};
