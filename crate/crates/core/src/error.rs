use thiserror::Error;

/// Errors surfaced by parsers, automaton operations and the virtually
/// abelian machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet rank {0} out of range (expected 1..=26)")]
    BadRank(u8),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("letter '{letter}' outside alphabet of rank {rank}")]
    LetterOutOfRange { letter: char, rank: u8 },

    #[error("operands use different alphabets (rank {0} vs rank {1})")]
    AlphabetMismatch(u8, u8),

    #[error("state id {state} out of range (automaton has {count} states)")]
    InvalidState { state: usize, count: usize },

    #[error("{0} is not reduced: a word of the left operand ends with '{1}' while a word of the right operand starts with '{2}'")]
    NotReduced(&'static str, char, char),

    #[error("growth window [{0}, {1}] is invalid or hits a zero cumulative count")]
    BadWindow(usize, usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not invertible over the integers (determinant {0})")]
    NotUnimodular(i64),

    #[error("line {line}: {msg}")]
    FileFormat { line: usize, msg: String },
}

impl Error {
    pub fn syntax(pos: usize, msg: impl Into<String>) -> Error {
        Error::Syntax { pos, msg: msg.into() }
    }

    pub fn file(line: usize, msg: impl Into<String>) -> Error {
        Error::FileFormat { line, msg: msg.into() }
    }
}
