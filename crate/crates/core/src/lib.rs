//! Exact algebra for additive and linear codes over GF(4) and the asymmetric
//! quantum codes built from nested pairs of them.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod aqecc;
pub mod codes;
pub mod constructions;
pub mod fields;
pub mod spectrum;

pub use fields::{F4Poly, F4Vec, F4};
