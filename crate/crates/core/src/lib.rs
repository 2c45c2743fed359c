//! Exact-arithmetic computer algebra for anti-associative algebras,
//! Jacobi-Jordan algebras, and the operads governing them.
//!
//! Everything is computed over the rationals with arbitrary precision;
//! there are no floating-point numbers anywhere in this crate.

pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod free;
pub mod homology;
pub mod io;
pub mod jj;
pub mod matrix;
pub mod multilinear;
pub mod operads;
pub mod operators;
pub mod polar;
pub mod rat;
pub mod series;
pub mod subspace;

pub use error::CoreError;
pub use rat::Rat;
