use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid walk at step {index}: {reason}")]
    InvalidWalk { index: usize, reason: String },
    #[error("dimension mismatch: walk has dimension {walk}, domain expects {domain}")]
    DimensionMismatch { walk: usize, domain: usize },
    #[error("walk leaves the domain {domain} after {steps} steps")]
    NotInDomain { domain: String, steps: usize },
    #[error("diagram contains a {0}-crossing")]
    CrossingTooLarge(usize),
    #[error("diagram contains a {0}-nesting")]
    NestingTooLarge(usize),
    #[error("not an axis-walk: {0}")]
    NotAnAxisWalk(String),
    #[error("forbidden open arc insertion at {location}: creates a {crossing}-crossing")]
    ForbiddenInsertion { location: usize, crossing: usize },
    #[error("invalid arc diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid mark: {0}")]
    InvalidMark(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid Schnyder wood: {0}")]
    InvalidWood(String),
    #[error("tableau height {height} exceeds {max}")]
    HeightTooLarge { height: usize, max: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
