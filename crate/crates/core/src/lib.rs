//! Combinatorics of Auslander-Reiten quivers: translation-quiver windows,
//! knitting, Dynkin/Euclidean classification, Coxeter and translation-matrix
//! calculus, tube constructions and finiteness analysis.

// indexed loops mirror the matrix and path-count notation
#![allow(clippy::needless_range_loop)]

pub mod arquiver;
pub mod batch;
pub mod coxeter;
pub mod degrees;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod iso;
pub mod knitting;
pub mod matrix;
pub mod quiver;
pub mod rng;
pub mod sectional;
pub mod translation;
pub mod tubes;

pub use error::{Error, Result};
