use std::error::Error;
use std::fmt;

/// Parameters outside the domain an operation is defined on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainError {
    pub op: &'static str,
    pub msg: String,
}

impl DomainError {
    pub fn new(op: &'static str, msg: impl Into<String>) -> Self {
        DomainError { op, msg: msg.into() }
    }
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.op, self.msg)
    }
}

impl Error for DomainError {}

pub type DomainResult<T> = Result<T, DomainError>;
