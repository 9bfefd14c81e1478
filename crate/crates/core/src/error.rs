use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// The variants line up with the command-line exit codes: validation
/// problems are the caller's fault, verification failures mean a checked
/// property did not hold, resource errors mean an enumeration would be too
/// large, and domain errors mean a numeric input fell outside the region
/// where the computation is defined.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Domain(_) => 2,
            Error::Verification(_) | Error::Consistency(_) => 3,
            Error::Resource(_) => 4,
        }
    }
}
