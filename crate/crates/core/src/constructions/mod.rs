//! Code families: cyclic, BCH, circulant developments, MacDonald, repetition, dodecacode.

mod circulant;
mod cyclic;
mod cyclotomic;
mod misc;

use core::fmt;

pub use circulant::{
    bordered_four_circulant_code, circulant_code, four_circulant_code, CirculantSpec,
};
pub use cyclic::{bch_bound, bch_code, cyclic_code, CyclicCode};
pub use cyclotomic::{factor_xn_minus_1, CyclotomicCosets, Factorization};
pub use misc::{dodecacode, identity_code, macdonald_code, repetition_code};

use crate::codes::CodeError;
use crate::fields::FieldError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    EvenLength(usize),
    NotDivisor,
    InvalidDelta { n: usize, delta: usize },
    BadLength { expected: usize, found: usize },
    MacDonaldParams { k: usize, u: usize },
    Field(FieldError),
    Code(CodeError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::EvenLength(n) => write!(f, "length {n} must be odd"),
            ConstructionError::NotDivisor => write!(f, "generator does not divide x^n - 1"),
            ConstructionError::InvalidDelta { n, delta } => {
                write!(f, "designed distance {delta} outside 2..={n}")
            }
            ConstructionError::BadLength { expected, found } => {
                write!(
                    f,
                    "generating vector has length {found}, expected {expected}"
                )
            }
            ConstructionError::MacDonaldParams { k, u } => {
                write!(f, "MacDonald parameters need k > u > 0 (got k={k}, u={u})")
            }
            ConstructionError::Field(e) => write!(f, "{e}"),
            ConstructionError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<FieldError> for ConstructionError {
    fn from(e: FieldError) -> Self {
        ConstructionError::Field(e)
    }
}

impl From<CodeError> for ConstructionError {
    fn from(e: CodeError) -> Self {
        ConstructionError::Code(e)
    }
}
