use thiserror::Error;

/// Errors shared by all shiftlab operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("edge endpoint {endpoint} out of range 1..={n}")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("graph is not shifted")]
    NotShifted,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("shift step requires 1 <= i < j <= n, got ({i},{j}) with n = {n}")]
    InvalidStep { i: usize, j: usize, n: usize },
    #[error("invalid m-profile: {0}")]
    InvalidProfile(String),
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("operation limited to n <= {max}, got n = {n}")]
    SizeGuard { n: usize, max: usize },
    #[error("state limit of {limit} graphs exceeded during enumeration")]
    StateGuard { limit: usize },
    #[error("column counts differ: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },
    #[error("invalid generic config: {0}")]
    InvalidConfig(String),
    #[error(
        "rank profile failed validation after {attempts} sampling rounds; raise bound or repeats"
    )]
    GenericityFailure { attempts: u32 },
    #[error("symmetric profile changed under isolated-vertex padding (pad {pad} vs {pad_alt})")]
    PadMismatch { pad: usize, pad_alt: usize },
}

pub type Result<T> = std::result::Result<T, ShiftError>;
