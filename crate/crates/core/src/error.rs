use thiserror::Error;

use crate::shape::{Box, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position} (token `{token}`): {reason}")]
    Parse {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("rows of lengths {0:?} do not form a Young diagram")]
    RaggedRows(Vec<usize>),

    #[error("entry {entry} is outside the alphabet (m = {m}, n = {n})")]
    EntryOutOfRange { entry: String, m: u32, n: u32 },

    #[error("alphabet requires m >= 1")]
    BadAlphabet,

    #[error("tableau is not a valid spo-tableau")]
    InvalidTableau,

    #[error("tableau contains circled entries")]
    CircledEntry,

    #[error("box {0} is not an outer corner")]
    NotOuterCorner(Box),

    #[error("box {0} lies outside the shape")]
    OutsideShape(Box),

    #[error("empty box {0} is an outer corner; no slide applies")]
    HoleAtCorner(Box),

    #[error("malformed one-row word: {0}")]
    MalformedWord(String),

    #[error("polynomials live in different variable sets ({0:?} vs {1:?})")]
    VariableMismatch((usize, usize), (usize, usize)),

    #[error("not a valid spo-bumping sequence: {0}")]
    InvalidSequence(String),

    #[error("not a valid sp-bumping triple: {0}")]
    InvalidTriple(String),

    #[error("tableau and sequence are inconsistent: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, position: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            position,
            reason: reason.into(),
        }
    }
}
