//! Arithmetic over GF(4), its vectors and polynomials, and extension fields.

mod ext;
mod f4;
mod poly;
mod vector;

use core::fmt;

pub use ext::{ext_field, is_irreducible_f2, minimal_polynomial, ord4, ExtField, MAX_EXT_M};
pub use f4::{f4_conj, f4_mul, F4};
pub use poly::F4Poly;
pub use vector::{hermitian_ip, trace_hermitian_ip, F4Vec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    BadSymbol(char),
    BadToken,
    LengthMismatch { left: usize, right: usize },
    DivisionByZero,
    InexactDivision,
    ExtDegree(u32),
    NoModulus(u32),
    FactorBudget(u32),
    Embedding,
    NotInSubfield,
    NoRootOfUnity { n: usize, m: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::BadSymbol(c) => {
                write!(f, "invalid GF(4) symbol {c:?} (expected 0, 1, w or W)")
            }
            FieldError::BadToken => write!(f, "expected a single GF(4) symbol"),
            FieldError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            FieldError::DivisionByZero => write!(f, "division by the zero polynomial"),
            FieldError::InexactDivision => write!(f, "polynomial division leaves a remainder"),
            FieldError::ExtDegree(m) => write!(f, "extension degree m={m} outside 1..={MAX_EXT_M}"),
            FieldError::NoModulus(m) => {
                write!(f, "no irreducible modulus of degree {} found", 2 * m)
            }
            FieldError::FactorBudget(d) => write!(f, "could not factor 2^{d}-1 within budget"),
            FieldError::Embedding => write!(f, "embedded omega fails w^2 + w + 1 = 0"),
            FieldError::NotInSubfield => write!(f, "coefficient outside the GF(4) subfield"),
            FieldError::NoRootOfUnity { n, m } => {
                write!(f, "GF(4^{m}) has no primitive {n}-th root of unity")
            }
        }
    }
}

impl core::error::Error for FieldError {}
