use thiserror::Error;

use crate::words::{Kind, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid letter: {0}")]
    InvalidLetter(String),

    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: Kind, found: Kind },

    #[error("label {0} is not in the strand set")]
    LabelNotInSupport(Label),

    #[error("words are over different strand sets")]
    SupportMismatch,

    #[error("word is not in good condition: {0} occurs an odd number of times")]
    NotGoodCondition(String),

    #[error("{relation} move not applicable at position {position}: {reason}")]
    MoveNotApplicable {
        relation: &'static str,
        position: usize,
        reason: String,
    },

    #[error("free-product words over different complement sets")]
    ComplementMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
