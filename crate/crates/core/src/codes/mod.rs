//! Additive and linear codes over GF(4).

mod additive;
mod linear;

use core::fmt;

pub use additive::{f2_row_reduce, AdditiveCode, RowSelection, SelfDualType};
pub use linear::LinearCode;

use crate::fields::{F4Vec, FieldError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    RowOutOfRange {
        index: usize,
        rows: usize,
    },
    NotSelfDual,
    /// The Hermitian dual disagreed with the trace dual of the additive view.
    DualMismatch,
    NotContained {
        witness: F4Vec,
    },
    Field(FieldError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::LengthMismatch { expected, found } => {
                write!(
                    f,
                    "vector length {found} does not match code length {expected}"
                )
            }
            CodeError::RowOutOfRange { index, rows } => {
                write!(
                    f,
                    "row index {index} out of range for {rows} generator rows"
                )
            }
            CodeError::NotSelfDual => write!(f, "code is not self-dual"),
            CodeError::DualMismatch => write!(
                f,
                "Hermitian dual differs from the trace dual of the additive view"
            ),
            CodeError::NotContained { witness } => {
                write!(f, "row ({witness}) is not contained in the outer code")
            }
            CodeError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CodeError {}

impl From<FieldError> for CodeError {
    fn from(e: FieldError) -> Self {
        CodeError::Field(e)
    }
}
