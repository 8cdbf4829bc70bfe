use thiserror::Error;

use crate::quiver::DimVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver is not symmetric: arrows[{row}][{col}] = {forward} but arrows[{col}][{row}] = {backward}")]
    Asymmetric {
        row: usize,
        col: usize,
        forward: u32,
        backward: u32,
    },

    #[error("dimension vector has {got} entries but the quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector length {got} does not match the {expected} slots of the dimension vector")]
    LengthMismatch { expected: usize, got: usize },

    #[error("dimension vector is zero")]
    ZeroDimension,

    #[error("{what} = {value} exceeds the cutoff {limit} (use --force to override)")]
    CutoffExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("cocharacter is not antidominant")]
    NotAntidominant,

    #[error("quiver is outside the families with a closed-form partition set")]
    NoClosedForm,

    #[error("invalid block table: {0}")]
    InvalidBlockTable(String),

    #[error("no block dimension supplied for part {0}")]
    MissingBlock(DimVector),

    #[error("nontrivial monodromy requires the invariant dimension to be supplied")]
    MissingInvariants,

    #[error("indicator and LP membership disagree at {0}")]
    MembershipDisagreement(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
