//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("matrix is not symmetric: max |H - Hᵀ| = {defect:e}")]
    NotSymmetric { defect: f64 },

    #[error("quadrature did not converge: residual estimate {residual:e}")]
    QuadratureNotConverged { residual: f64 },

    #[error("hierarchy enumeration overflow: {terms} terms at depth {depth}")]
    HierarchyOverflow { terms: usize, depth: usize },

    #[error(
        "estimated memory {required_bytes} B exceeds the cap of {cap_bytes} B \
         ({n_matrices} matrices of dimension {dim})"
    )]
    MemoryLimit {
        required_bytes: u64,
        cap_bytes: u64,
        n_matrices: usize,
        dim: usize,
    },

    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },

    #[error("time integral did not decay; extend the grid beyond {reached_fs} fs")]
    IntegralNotDecayed { reached_fs: f64 },

    #[error("missing response components: {0}")]
    MissingComponents(String),

    #[error("config parse error at line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    #[error("task error: {0}")]
    Task(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code classification: 1 for input/validation problems,
    /// 2 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_)
            | Error::Dimension { .. }
            | Error::NotSymmetric { .. }
            | Error::ConfigParse { .. }
            | Error::MemoryLimit { .. } => 1,
            _ => 2,
        }
    }
}
