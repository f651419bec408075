//! Exact computation on the variety of two-dimensional real associative
//! algebras: classification, orbit dimensions, deformations and
//! contractions.

pub mod algebra;
pub mod classify;
pub mod contraction;
pub mod deformation;
pub mod error;
pub mod io;
pub mod linalg;
pub mod scalars;

pub use error::{Error, Result};
