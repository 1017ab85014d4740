//! Ranks, border ranks and certified bounds for symmetric tensors,
//! viewed as homogeneous polynomials.
#![no_std]
extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod aggregate;
pub mod binary;
pub mod bounds;
pub mod cubic;
pub mod decomp;
pub mod detperm;
pub mod error;
pub mod flatten;
pub mod limits;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod scalar;
pub mod strata;
pub mod unipoly;

pub use error::{Error, Result};
