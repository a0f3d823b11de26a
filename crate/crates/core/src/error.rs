use thiserror::Error;

/// Failure modes of the numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a documented precondition.
    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// A numerical procedure failed (non-finite values, non-convergence, overflow).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// The propagated wave packet reached the Dirichlet walls.
    #[error(
        "wave packet touched the domain boundary at t = {time} (edge amplitude {amplitude:e})"
    )]
    BoundaryContact { time: f64, amplitude: f64 },
}

impl Error {
    pub(crate) fn parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn numeric(reason: impl Into<String>) -> Self {
        Error::Numeric(reason.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
