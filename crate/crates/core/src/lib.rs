//! Exact rational computation with corings, comodules, comatrix corings and
//! Galois comodules over finite-dimensional algebras.

pub mod algebra;
pub mod axioms;
pub mod coring;
pub mod error;
pub mod galois;
pub mod linalg;

pub use error::{Error, Result};
