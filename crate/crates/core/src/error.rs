use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error in `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("group data mismatch: {0}")]
    Mismatch(String),

    #[error("parabolic is not stable under the involution: {0}")]
    NotThetaStable(String),

    #[error("budget exceeded: {needed} points required, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
