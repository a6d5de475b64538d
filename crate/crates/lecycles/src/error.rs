use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("frame matrix is singular")]
    SingularFrame,
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("infinite local length: {0}")]
    InfiniteLength(String),
    #[error("frame not admissible: {0}")]
    Admissibility(String),
    #[error("no admissible frame after {0} attempts")]
    NoAdmissibleFrame(usize),
    #[error("inconsistent criteria: {0}")]
    InconsistentCriteria(String),
    #[error("sample point lies on Y: {0}")]
    SampleOnY(String),
    #[error("negative intersection number: {0}")]
    NegativeResult(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}
