use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("position {position} out of range 1..={strands}")]
    PositionOutOfRange { position: usize, strands: usize },

    #[error("braid word is not positive (letter {letter} at index {index})")]
    NotPositive { letter: i32, index: usize },

    #[error("operation needs at least {required} strands, braid has {strands}")]
    TooFewStrands { required: usize, strands: usize },

    #[error("invalid link spec: {0}")]
    InvalidSpec(String),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("unknown component id {0}")]
    UnknownComponent(usize),

    #[error("cannot delete every component of the closure")]
    DeleteAll,

    #[error("oracle bound exceeded: {0}")]
    OracleBound(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
