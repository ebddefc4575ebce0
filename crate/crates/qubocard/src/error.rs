//! Error type shared across the crate.

/// Errors reported by constructors, transforms, solvers and file I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A matrix row had the wrong length, or the input was not square.
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NonSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A matrix entry was NaN or infinite.
    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    /// A vector element was NaN or infinite.
    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },

    /// Symmetry violated at construction. Route the input through
    /// `SymmetricMatrix::symmetrize` to repair it explicitly.
    #[error("matrix is not symmetric: max |a[i][j] - a[j][i]| = {max_abs_diff:e}")]
    NotSymmetric { max_abs_diff: f64 },

    /// A bit outside {0, 1}.
    #[error("bit at index {index} must be 0 or 1, got {value}")]
    InvalidBit { index: usize, value: u8 },

    /// A spin outside {-1, +1}.
    #[error("spin at index {index} must be -1 or +1, got {value}")]
    InvalidSpin { index: usize, value: i8 },

    /// An argument violated a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A size guard tripped (problem too large for the requested method).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Malformed matrix file. Lines are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
