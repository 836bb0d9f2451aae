use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("board length {n} exceeds the enumeration cap of {cap} cells (raise it with COMB_ENUM_CAP)")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("invalid omino tiling: {0}")]
    InvalidOminoTiling(String),

    #[error("board lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("tile set must be non-empty and drawn from {{h, f, c}}: {0:?}")]
    InvalidTileSet(String),

    #[error("signature digits must be distinct, got {0}{0}")]
    RepeatedDigit(u8),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{id}` cannot be cross-checked against enumeration")]
    NotCrossCheckable { id: String },

    #[error("metatile length must be at least 1")]
    EmptyMetatile,

    #[error("invalid input: {0}")]
    Parse(String),
}
