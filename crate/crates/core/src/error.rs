use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid stamp set: {0}")]
    InvalidSet(String),

    #[error("{x} is not a {m}-gap of this set")]
    NotAnMGap { x: u64, m: u32 },

    #[error("algorithms A and B disagree on {set}: {detail}")]
    Disagreement { set: String, detail: String },

    #[error("unsupported scan parameters: {0}")]
    UnsupportedJob(String),

    #[error("corrupt checkpoint {path}: {reason}")]
    CorruptCheckpoint { path: PathBuf, reason: String },

    #[error("malformed record on line {line}: {reason}")]
    MalformedRecord { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
