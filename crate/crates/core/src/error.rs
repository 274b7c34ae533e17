//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, analysis, and I/O operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported column weight {0}: supported values are 7 and 8")]
    UnsupportedColumnWeight(u32),

    #[error("row weight {l} is too small for column weight {j}: L > J is required")]
    RowWeightTooSmall { j: u32, l: u64 },

    #[error("row weight {0} is outside the overflow-safe range")]
    RowWeightTooLarge(u64),

    #[error("integer overflow while forming exponent matrix entries")]
    IntegerOverflow,

    #[error("constructions {parent} and {child} are not adjacent in a derivation chain at consecutive row weights")]
    ChainMismatch { parent: String, child: String },

    #[error("invalid cycle half-length {0}: must be 2, 3, or 4")]
    InvalidHalfLength(u32),

    #[error("circulant size {0} is too small: P >= 2 is required")]
    CirculantTooSmall(u64),

    #[error("circulant size {0} is outside the supported range")]
    CirculantTooLarge(u64),

    #[error("girth cap {0} is not one of 4, 6, 8, 10")]
    InvalidGirthCap(u32),

    #[error(
        "degenerate triple [{0}, {1}, {2}]: entries must be non-negative and strictly increasing"
    )]
    DegenerateTriple(i64, i64, i64),

    #[error("cannot apply reflection to [{0}, {1}, {2}]: first entry must be zero")]
    ReflectNeedsZeroBase(i64, i64, i64),

    #[error("divisor {d} does not divide every entry of [{a0}, {a1}, {a2}]")]
    DivisorDoesNotDivide { d: i64, a0: i64, a1: i64, a2: i64 },

    #[error("divisor {d} is not coprime with circulant size {p}")]
    DivisorNotCoprime { d: i64, p: u64 },

    #[error("divisor must be positive, got {0}")]
    NonPositiveDivisor(i64),

    #[error("empty scan range [{from}, {to}]")]
    EmptyRange { from: u64, to: u64 },

    #[error("exponent matrix must be a non-empty rectangle")]
    MalformedExponentMatrix,

    #[error("LLR vector length {got} does not match code length {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid simulation config: {0}")]
    InvalidSimConfig(String),

    #[error("alist parse error at line {line}: {message}")]
    AlistParse { line: usize, message: String },

    #[error("alist weight inconsistency: {0}")]
    AlistWeightInconsistency(String),

    #[error("exponent matrix parse error at line {line}: {message}")]
    MatrixParse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
