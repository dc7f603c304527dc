use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q={q}, t={t}")]
    Pole { q: String, t: String },
    #[error("coefficient of u^{m} is outside the exact window [{lo}, {hi}]")]
    Window { m: i64, lo: i64, hi: String },
    #[error("{0}")]
    Unsupported(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("I/O error at {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cache format error at {path}: {msg}")]
    CacheFormat { path: PathBuf, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
