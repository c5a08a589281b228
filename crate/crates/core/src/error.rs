use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("non-unit total class: degree-0 coefficient is {0}")]
    NonUnit(String),
    #[error("non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("class truncated at degree {have}, need degree {needed}")]
    TruncationTooSmall { needed: usize, have: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("unsupported rank {0} (at most 4)")]
    UnsupportedRank(usize),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("inconsistent model: {0}")]
    InconsistentModel(String),
    #[error("invalid Hodge diamond: {}", .0.join("; "))]
    InvalidDiamond(Vec<String>),
    #[error("not a surface: {0}")]
    NotASurface(String),
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error in {source_name}: {message}")]
    Parse {
        source_name: String,
        message: String,
    },
    #[error("record rejected: {}", .0.join("; "))]
    Rejected(Vec<String>),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
