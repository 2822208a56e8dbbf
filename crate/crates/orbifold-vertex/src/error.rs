use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("cell ({i},{j}) is not in the partition")]
    CellOutside { i: u32, j: u32 },
    #[error("series arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("series cannot be inverted: constant term is not a unit")]
    NonUnitConstant,
    #[error("non-convergent specialization: {0}")]
    NonConvergent(String),
    #[error("slice family violates the required interlacing")]
    InterlacingViolated,
    #[error("result changed when the window was enlarged: {0}")]
    NonStabilizing(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
