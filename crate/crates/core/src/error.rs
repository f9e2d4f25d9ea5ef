use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u8, right: u8 },

    #[error("group rank {0} exceeds the supported maximum of 30")]
    RankTooLarge(u32),

    #[error("index {index} is outside [1, {rank}]")]
    IndexOutOfRange { index: u32, rank: u8 },

    #[error("trivial character cannot appear in an isotropy representation")]
    TrivialFactor,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("stationary set not finite: character {0} occurs twice")]
    StationarySetNotFinite(String),

    #[error("invalid flag data: {0}")]
    InvalidFlag(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid fixed-point model: {0}")]
    InvalidModel(String),

    #[error("{0} requires a space with a conjugation")]
    NotConjugation(&'static str),

    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("arity violation: {0}")]
    Arity(String),
}

impl Error {
    pub(crate) fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
