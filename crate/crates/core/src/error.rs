use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("basis label `{label}` at position {position} must have 4 characters from {{0,1}}")]
    BasisLabel { label: String, position: usize },

    #[error("the zero vector is not a valid input here")]
    ZeroState,

    #[error("invalid qubit permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("state is not permutation-symmetric")]
    NotSymmetric,

    #[error("tolerance must be finite and positive, got {0}")]
    InvalidTolerance(f64),

    #[error("sample count must be at least 1")]
    EmptySampleCount,

    #[error("random SL(2,C) sampling gave up after {0} redraws")]
    SamplingFailed(usize),

    #[error("Dicke excitation number {0} is outside 0..=4")]
    DickeOutOfRange(i64),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("entry `{entry}`: {reason}")]
    InvalidParameter { entry: String, reason: String },

    #[error("invalid state file: {0}")]
    StateFile(String),
}
