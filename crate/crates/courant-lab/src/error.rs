use thiserror::Error;

#[derive(Debug, Error)]
pub enum CourantError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{operation} is not available for the {domain} domain")]
    Unsupported {
        operation: &'static str,
        domain: crate::DomainKind,
    },

    #[error("nodal count unstable: {coarse} domains at resolution {resolution}, {fine} at {}", 2 * resolution)]
    Unstable {
        resolution: usize,
        coarse: usize,
        fine: usize,
    },

    /// A bracketing root search found no sign change where one must exist.
    #[error("no sign change bracketing the root of {0}")]
    NoBracket(&'static str),

    #[error("refinement of {0} did not reach the required residual")]
    NotConverged(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CourantError>;

pub(crate) fn invalid(msg: impl Into<String>) -> CourantError {
    CourantError::InvalidArgument(msg.into())
}
