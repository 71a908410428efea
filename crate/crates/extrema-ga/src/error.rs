use thiserror::Error;

/// Errors surfaced by configuration validation and operator contracts.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("genome length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("genome of length {len} is too short for this operator (needs at least {min})")]
    GenomeTooShort { len: usize, min: usize },

    #[error("tournament group size {group} exceeds population size {pop}")]
    TournamentGroupTooLarge { group: usize, pop: usize },

    #[error("x = {x} lies outside the search interval [{lo}, {hi}]")]
    OutOfInterval { x: f64, lo: f64, hi: f64 },

    #[error("invalid interval: lo = {lo} must be strictly below hi = {hi}")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown operator name `{name}`; valid names: {valid}")]
    UnknownOperator { name: String, valid: String },
}

pub type Result<T> = std::result::Result<T, Error>;
