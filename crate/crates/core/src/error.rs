use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range (group has {count} generators)")]
    InvalidGenerator { index: u64, count: u64 },

    #[error("group index {0} out of range")]
    InvalidGroup(usize),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("family enumerator failed at group {index}: {reason}")]
    Enumerator { index: usize, reason: String },

    #[error("undecidable configuration: {0}")]
    Undecidable(String),

    #[error("ball search capped after {} elements", partial.len())]
    BallCapped { partial: Vec<Word> },

    #[error("geodesic search capped; length is at least {lower_bound}")]
    SearchCapped { lower_bound: u32 },

    #[error("enumeration budget exhausted: {0}")]
    Budget(String),

    #[error("cancelled")]
    Cancelled,

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for outcomes that mean "ran out of resources", as opposed to a
    /// definite answer or malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BallCapped { .. }
                | Error::SearchCapped { .. }
                | Error::Budget(_)
                | Error::Cancelled
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGenerator { .. } => "invalid_generator",
            Error::InvalidGroup(_) => "invalid_group",
            Error::UnknownGroup(_) => "unknown_group",
            Error::InvalidParams { .. } => "invalid_params",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "parse",
            Error::Enumerator { .. } => "enumerator",
            Error::Undecidable(_) => "undecidable_configuration",
            Error::BallCapped { .. } => "ball_capped",
            Error::SearchCapped { .. } => "search_capped",
            Error::Budget(_) => "budget",
            Error::Cancelled => "cancelled",
            Error::Config(_) => "config",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
