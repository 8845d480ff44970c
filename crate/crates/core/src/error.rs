use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("element {0:?} is not a valid element of the group")]
    InvalidElement(Vec<u64>),

    #[error("group mismatch: {0:?} vs {1:?}")]
    GroupMismatch(Vec<u64>, Vec<u64>),

    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid connection set: {0}")]
    InvalidConnection(String),

    #[error("graph too large: {order} vertices exceeds bound {bound}")]
    TooLarge { order: usize, bound: usize },

    #[error("vertices must be distinct")]
    SameVertex,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
