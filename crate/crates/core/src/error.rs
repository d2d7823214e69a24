use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part values must be at least 1")]
    NonPositivePart,

    #[error("overpartition has more than one overlined copy of {0}")]
    RepeatedOverline(u32),

    #[error("cannot parse partition spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },

    #[error("{map} is not defined on {input}: {reason}")]
    OutsideDomain {
        map: &'static str,
        input: String,
        reason: &'static str,
    },

    #[error("n = {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: u32, ceiling: u32 },

    #[error("n = {n} exceeds the series truncation {truncation}")]
    TruncationExceeded { n: u32, truncation: usize },

    #[error("series truncations differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),

    #[error("series with constant term {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("{0}")]
    Unsupported(String),
}
