use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("character {value} at position {position} is outside the alphabet [1, {sigma}]")]
    CharacterOutOfAlphabet { position: usize, value: u32, sigma: u32 },

    #[error("alphabet size {sigma} is invalid for a sequence of length {len}")]
    InvalidAlphabet { sigma: u32, len: usize },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("fragment overflows string: start {start}, length {len}, string length {n}")]
    FragmentOverflow { start: usize, len: usize, n: usize },

    #[error("odd square length {0}")]
    OddLength(usize),

    #[error("input length {len} exceeds the cap of {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("report serialization failed: {0}")]
    Report(String),
}

pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        detail: detail.into(),
    }
}
