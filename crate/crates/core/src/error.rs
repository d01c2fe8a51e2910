use std::fmt;

use crate::complex::EigenResult;

/// Errors produced by the quaternion and complex linear algebra routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    ShapeMismatch(String),
    /// Inverse of the zero quaternion.
    DivisionByZero,
    /// Input has no well-defined result (e.g. axis of a real quaternion).
    DegenerateInput(String),
    /// The supplied axis pair is not orthogonal.
    InvalidAxes,
    /// A pivot fell below the singularity threshold.
    SingularMatrix,
    /// The QR eigensolver hit its iteration limit; carries the partial result.
    NoConvergence(Box<EigenResult>),
    /// A complex matrix does not have the block structure of an adjoint embedding.
    NotInEmbeddingImage,
    /// A matrix entry is not inside the required complex subfield.
    EntriesOutsideSubfield { row: usize, col: usize },
    /// The eigenvector matrix is numerically singular or the spectrum cannot be paired.
    DefectiveOrAmbiguous(String),
    /// Matrix exceeds the configured size limit of an algorithm.
    SizeLimit { size: usize, limit: usize },
    /// Malformed scalar or matrix text.
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for failures caused by the numerics rather than by malformed input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularMatrix | Error::NoConvergence(_) | Error::DefectiveOrAmbiguous(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::DivisionByZero => write!(f, "division by zero quaternion"),
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::InvalidAxes => write!(f, "axes are not orthogonal pure unit quaternions"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NoConvergence(partial) => {
                let done = partial.converged.iter().filter(|c| **c).count();
                write!(
                    f,
                    "eigen iteration did not converge ({done} of {} values converged)",
                    partial.values.len()
                )
            }
            Error::NotInEmbeddingImage => {
                write!(f, "complex matrix is not in the image of the adjoint embedding")
            }
            Error::EntriesOutsideSubfield { row, col } => {
                write!(f, "entry ({row}, {col}) lies outside the complex subfield")
            }
            Error::DefectiveOrAmbiguous(msg) => write!(f, "defective or ambiguous spectrum: {msg}"),
            Error::SizeLimit { size, limit } => {
                write!(f, "matrix size {size} exceeds the limit of {limit}")
            }
            Error::Parse { line, msg } => write!(f, "parse error on line {line}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
