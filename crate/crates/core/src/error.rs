use thiserror::Error;

/// Errors raised by graph construction, spectral computation and the checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}; multigraphs are loopless")]
    Loop(usize),
    #[error("multiplicity overflow on pair ({0}, {1})")]
    MultiplicityOverflow(usize, usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph needs at least {required} vertices, got {n}")]
    TooFewVertices { n: usize, required: usize },
    #[error("graph has {n} vertices; exact search supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("negative discriminant {0} in quotient closed form")]
    NegativeDiscriminant(f64),
    #[error("configuration model gave up after {0} loop-rejected pairings")]
    ResampleLimit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
