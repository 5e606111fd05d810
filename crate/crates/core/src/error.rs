use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A tree mentions `R_index` but that grammar has not been built yet.
    #[error("grammar R_{0} has not been constructed")]
    MissingGrammar(usize),

    #[error(
        "grammars are built in index order: next is R_{expected}, got request for R_{requested}"
    )]
    OutOfOrder { expected: usize, requested: usize },

    #[error("tree `{0}` is not normal")]
    NotNormal(String),

    #[error("{0}")]
    Usage(String),
}
