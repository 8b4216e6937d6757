use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),
    #[error("run is not a path of the automaton")]
    NotAPath,
    #[error("cycle set is empty")]
    EmptyCycleSet,
    #[error("budget exceeded: gcd {gcd}, bound {bound} above limit {limit}")]
    BudgetExceeded { gcd: u64, bound: u128, limit: u128 },
    #[error("size limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}
