use thiserror::Error;

/// A syntax error in a textual element, with the byte offset it was found at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the twisting parameter mu must be nonzero")]
    ZeroMu,
    #[error("overlap precondition violated: {0}")]
    OverlapPrecondition(String),
    #[error(
        "degree-zero reduction needs a homogeneous degree-0 element, found a word of degree {0}"
    )]
    NonzeroDegree(i64),
    #[error("pi image component has sigma power {sigma} but charge {charge}")]
    ChargeMismatch { sigma: i64, charge: i64 },
    #[error("form on degree-matched words returned a non-constant vector")]
    NonConstantForm,
    #[error("vector mixes charges {0} and {1}; split it before applying delta")]
    MixedCharge(i64, i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
