use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("node count r = {0} is outside the supported range 1..=8")]
    NodeCountOutOfRange(usize),
    #[error("locus X_{0} is only supported for i in 2..=4")]
    UnsupportedLocus(usize),
    #[error("y({a},{b},{c}) has negative grade")]
    NegativeGrade { a: u16, b: u16, c: u16 },
    #[error("count is not an integer: {0}")]
    NonIntegralCount(String),
    #[error("node count {delta} is out of range for irreducible curves of degree {d}")]
    NodesOutOfRange { d: u32, delta: u32 },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("cache file {path}: {msg}")]
    Cache { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
