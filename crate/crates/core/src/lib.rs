//! Irreducible cyclic codes, minimal linear codes, and Massey secret sharing
//! on their duals.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod arith;
mod bits;
pub mod error;
pub mod galois;
pub mod lincode;
pub mod matrix;
pub mod minimality;
mod poly;
pub mod sss;

pub use error::{Error, Result};
pub use galois::{Elem, Field, Fq, Symbol};
pub use lincode::{Codeword, LinearCode, Provenance, WeightDistribution};
pub use minimality::{Certificate, Method, Theorem, Verdict};
pub use sss::{AccessStructure, ShareDeal};
