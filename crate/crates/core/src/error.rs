use thiserror::Error;

use crate::model::Str;

/// Errors raised across the workbench. Variant names mirror the error codes
/// exposed in reports and by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DOMAIN_MISMATCH: {0}")]
    DomainMismatch(String),
    #[error("EQUAL_INPUT: {0} compared with itself")]
    EqualInput(Str),
    #[error("NOT_A_CODE: {0} is not a string code")]
    NotACode(String),
    #[error("NO_CERTIFICATE: {0}")]
    NoCertificate(String),
    #[error("INFINITE_BRANCHING: node {node} has {children} children (bound {bound})")]
    InfiniteBranching {
        node: Str,
        children: usize,
        bound: usize,
        /// The children of the offending node, a computable antichain.
        antichain: Vec<Str>,
    },
    #[error("UNMAPPED_NODE: {0} has no image")]
    UnmappedNode(Str),
    #[error("NOT_COMPLETELY_BRANCHING: sibling of {0} is missing")]
    NotCompletelyBranching(Str),
    #[error("BAD_CODE: {0}")]
    BadCode(String),
    #[error("AMBIGUOUS_AT_HORIZON: {0}")]
    AmbiguousAtHorizon(String),
    #[error("NOT_TRANSITIVE: triple ({0}, {1}, {2})")]
    NotTransitive(u64, u64, u64),
    #[error("NOT_HOMOGENEOUS: pair ({0}, {1})")]
    NotHomogeneous(u64, u64),
    #[error("NOT_SEMI_HEREDITARY: triple ({0}, {1}, {2})")]
    NotSemiHereditary(u64, u64, u64),
    #[error("NOT_SEMI_HEREDITARY_ON_H: triple ({0}, {1}, {2})")]
    NotSemiHereditaryOnH(u64, u64, u64),
    #[error("NOT_SEMI_ANCESTRAL: triple ({0}, {1}, {2})")]
    NotSemiAncestral(u64, u64, u64),
    #[error("NOT_WEAKLY_HOMOGENEOUS: consecutive pair ({0}, {1})")]
    NotWeaklyHomogeneous(u64, u64),
    #[error("INVALID_SOLUTION: {0}")]
    InvalidSolution(String),
    #[error("SIZE_LIMIT: {size} nodes exceed the exact-search limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("BUDGET_EXHAUSTED: {0}")]
    BudgetExhausted(String),
    #[error("NOT_ENUMERATED: {0} never appears before the horizon")]
    NotEnumerated(Str),
    #[error("HORIZON_TOO_SMALL: {0}")]
    HorizonTooSmall(String),
    #[error("UNKNOWN_FAMILY: {0}")]
    UnknownFamily(String),
    #[error("BAD_PARAMS: {0}")]
    BadParams(String),
    #[error("TYPE_MISMATCH: {0}")]
    TypeMismatch(String),
    #[error("UNSOUND: {0}")]
    Unsound(String),
    #[error("PARSE_ERROR: line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("INVALID_INSTANCE: {0}")]
    InvalidInstance(String),
    #[error("IO: {0}")]
    Io(String),
}

impl Error {
    /// Stable upper-case code used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DomainMismatch(_) => "DOMAIN_MISMATCH",
            Error::EqualInput(_) => "EQUAL_INPUT",
            Error::NotACode(_) => "NOT_A_CODE",
            Error::NoCertificate(_) => "NO_CERTIFICATE",
            Error::InfiniteBranching { .. } => "INFINITE_BRANCHING",
            Error::UnmappedNode(_) => "UNMAPPED_NODE",
            Error::NotCompletelyBranching(_) => "NOT_COMPLETELY_BRANCHING",
            Error::BadCode(_) => "BAD_CODE",
            Error::AmbiguousAtHorizon(_) => "AMBIGUOUS_AT_HORIZON",
            Error::NotTransitive(..) => "NOT_TRANSITIVE",
            Error::NotHomogeneous(..) => "NOT_HOMOGENEOUS",
            Error::NotSemiHereditary(..) => "NOT_SEMI_HEREDITARY",
            Error::NotSemiHereditaryOnH(..) => "NOT_SEMI_HEREDITARY_ON_H",
            Error::NotSemiAncestral(..) => "NOT_SEMI_ANCESTRAL",
            Error::NotWeaklyHomogeneous(..) => "NOT_WEAKLY_HOMOGENEOUS",
            Error::InvalidSolution(_) => "INVALID_SOLUTION",
            Error::SizeLimit { .. } => "SIZE_LIMIT",
            Error::BudgetExhausted(_) => "BUDGET_EXHAUSTED",
            Error::NotEnumerated(_) => "NOT_ENUMERATED",
            Error::HorizonTooSmall(_) => "HORIZON_TOO_SMALL",
            Error::UnknownFamily(_) => "UNKNOWN_FAMILY",
            Error::BadParams(_) => "BAD_PARAMS",
            Error::TypeMismatch(_) => "TYPE_MISMATCH",
            Error::Unsound(_) => "UNSOUND",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::InvalidInstance(_) => "INVALID_INSTANCE",
            Error::Io(_) => "IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
