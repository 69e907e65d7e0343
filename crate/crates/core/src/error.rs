use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("seed out of range: node {node} not in graph with {n} nodes")]
    SeedOutOfRange { node: usize, n: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("balance constraint infeasible: block limit {limit}, total weight {total}")]
    BalanceInfeasible { limit: i64, total: i64 },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
