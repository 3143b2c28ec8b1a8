use thiserror::Error;

use crate::fock::FockBasis;

/// Errors shared across the crate.
///
/// Contract violations (mixing bases, building an operator on a basis kind
/// that does not support it) and domain errors (labels or parameters outside
/// the valid range) are kept as distinct variants so callers can tell a
/// programming error from bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: FockBasis, right: FockBasis },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("quantum number {n} outside basis range {min}..={max}")]
    LabelOutOfRange { n: i64, min: i64, max: i64 },

    #[error("{op} is not defined on {basis}: {rule}")]
    IncompatibleOperator {
        op: &'static str,
        basis: FockBasis,
        rule: &'static str,
    },

    #[error("expected a {expected} basis, got {got}")]
    WrongBasisKind {
        expected: &'static str,
        got: FockBasis,
    },

    #[error("excluded row {row} outside 0..{dim}")]
    ExcludedRowOutOfRange { row: usize, dim: usize },

    #[error(
        "truncation loss too large: kept norm {norm} < 0.999; use dimension >= {required_dim}"
    )]
    TruncationLoss { norm: f64, required_dim: usize },

    #[error("photon-number context {n} must lie below the truncation boundary (max {max})")]
    ContextAtBoundary { n: i64, max: i64 },

    #[error("range {lo}..={hi} touches the basis boundary; allowed {min}..={max}")]
    RangeTouchesBoundary { lo: i64, hi: i64, min: i64, max: i64 },

    #[error("need at least 4 bins, got {0}")]
    TooFewBins(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
