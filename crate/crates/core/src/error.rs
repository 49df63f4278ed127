use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum DsdError {
    /// A numeric argument fell outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A distribution failed its construction invariants.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// A distortion failed its construction invariants, or an operation
    /// received a distortion it cannot accept (e.g. a non-unit one).
    #[error("invalid distortion: {0}")]
    InvalidDistortion(String),

    /// The operation's precondition does not hold for these arguments.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The operation is not defined for this representation.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A distribution or distortion spec failed to parse.
    #[error("spec error: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, DsdError>;
