use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("scalar field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("field cannot split {group}: cyclotomic order {needed} required")]
    Realizability { group: String, needed: usize },
    #[error("cocycle condition fails: {0}")]
    Cocycle(String),
    #[error("endomorphism algebra of {0} is not the base field (dim {1})")]
    NotSplit(String, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("R-pair membership fails: {0}")]
    Membership(String),
    #[error("no quasi-R-matrix convention passes the intertwiner test")]
    Convention,
    #[error("invalid search strategy: {0}")]
    Strategy(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
