use thiserror::Error;

/// Error categories, aligned with the process exit codes of the CLI:
/// usage/precondition problems exit 2, failed mathematical checks exit 1,
/// resource-cap violations exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("mathematical check failed: {0}")]
    MathCheck(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn usage<S: Into<String>>(s: S) -> Self {
        Error::Usage(s.into())
    }
    pub fn pre<S: Into<String>>(s: S) -> Self {
        Error::Precondition(s.into())
    }
    pub fn math<S: Into<String>>(s: S) -> Self {
        Error::MathCheck(s.into())
    }
    pub fn resource<S: Into<String>>(s: S) -> Self {
        Error::Resource(s.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Precondition(_) => 2,
            Error::MathCheck(_) => 1,
            Error::Resource(_) => 3,
        }
    }
}
