use thiserror::Error;

/// Errors surfaced by carrier construction, parsing and module arithmetic.
#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier mismatch: operands belong to different semigroups")]
    CarrierMismatch,

    #[error("closure exceeded cap: reached {reached} elements without closing")]
    ClosureCapExceeded { reached: usize },

    #[error("invalid partial bijection: {0}")]
    InvalidPartialBijection(String),

    #[error("invalid semigroup tables: {0}")]
    InvalidTables(String),

    #[error("unknown element name `{0}`")]
    UnknownElement(String),

    #[error("unknown character code `{0}`")]
    UnknownCharacter(String),

    #[error("`{0}` is not an idempotent")]
    NotIdempotent(String),

    #[error("operation requires the chain-with-symmetry family")]
    WrongFamily,

    #[error("norm refused: <phi_{g}, phi_{h}> has a discontinuous supremum at {witness}; run the degeneration report")]
    DiscontinuousEntry {
        g: String,
        h: String,
        witness: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
