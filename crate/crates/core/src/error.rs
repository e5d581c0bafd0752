//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tangent vector must be nonzero")]
    ZeroVector,

    #[error("point {point:?} lies outside the working domain")]
    OutsideDomain { point: Vec<f64> },

    #[error("|s| = {s} reaches the admissibility radius b0 = {b0}")]
    AdmissibilityExceeded { s: f64, b0: f64 },

    #[error("phi '{name}' has no even + linear split")]
    NotDecomposable { name: String },

    #[error("phi is inadmissible: {0}")]
    Inadmissible(String),

    #[error("fundamental tensor is not positive-definite (min eigenvalue {eigenvalue:e})")]
    NotPositiveDefinite { eigenvalue: f64 },

    #[error("fundamental tensor is numerically singular")]
    SingularTensor,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    #[error("solver did not converge: {0}")]
    NoConvergence(String),

    #[error("distances do not form a metric: {0}")]
    NotAMetric(String),

    #[error("f is not 1-Lipschitz at pair ({i}, {j}): |f[{i}] - f[{j}]| = {delta} > d = {dist}")]
    LipschitzViolation {
        i: usize,
        j: usize,
        delta: f64,
        dist: f64,
    },

    #[error("weight axiom cannot be satisfied: {0}")]
    NotWeightable(String),

    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
