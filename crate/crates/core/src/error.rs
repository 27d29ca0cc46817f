//! One error type for the whole crate. Every failure is a precondition
//! violation of some operation; nothing here is recoverable state.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("the Dixmier automorphism needs a nonzero parameter")]
    ZeroDixmierParameter,

    #[error("contraction constant vanished for bipartition {0}")]
    ZeroContraction(String),

    #[error("bidegree mismatch: {0}")]
    BidegreeMismatch(String),

    #[error("exponent {exponent} escapes the window [{lo}, {hi}]")]
    WindowOverflow { exponent: i64, lo: i64, hi: i64 },

    #[error("level {level} exceeds the truncation depth {depth}")]
    DepthOverflow { level: i64, depth: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
