//! Exact arithmetic for generalised Markov numbers: continuants, LLS
//! sequences, quadratic forms, sails, the Perron identity, triple-graphs and
//! the classical Markov tree.
//!
//! Heavy loops take an [`Exec`] strategy. With the default `parallel` feature
//! [`Exec::Parallel`] runs on rayon; without it every strategy runs
//! sequentially and produces identical results.

pub mod arith;
pub mod classical;
pub mod error;
pub mod exec;
pub mod matform;
pub mod perron;
pub mod sail;
pub mod seq;
pub mod surd;
pub mod triple;

pub use error::{Error, Result};
pub use exec::Exec;
pub use matform::{Mat2, QuadForm, RadicalRatio};
pub use seq::Seq;
pub use surd::Surd;
