use thiserror::Error;

/// Errors produced by the phase-space, QFI, optimizer and Fock routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("structure violation: {0}")]
    Structure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    #[error("decomposition failed: {0}")]
    DecompositionFailure(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("degenerate energy budget: {0}")]
    DegenerateBudget(String),

    #[error("no interior optimum in [{lo}, {hi}]: residual does not change sign")]
    NoInteriorOptimum { lo: f64, hi: f64 },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("Fock cutoff {cutoff} too small: trace leakage {leakage:e}")]
    CutoffTooSmall { cutoff: usize, leakage: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
