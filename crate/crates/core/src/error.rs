use thiserror::Error;

/// Errors produced by the measure computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Thue-Morse index exceeds the generation cap.
    #[error("index {n} exceeds cap {cap}")]
    Capacity { n: u32, cap: u32 },

    /// A symbol outside `{a, b}` was found where a binary word is required.
    #[error("symbol {symbol:#04x} at position {position} is not 'a' or 'b'")]
    Alphabet { symbol: u8, position: usize },

    /// An argument is outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// An attractor position lies outside `1..=length`.
    #[error("position {position} is out of range 1..={length}")]
    PositionOutOfRange { position: usize, length: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
