use thiserror::Error;

/// Errors raised while validating inputs or running the numerics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("degenerate polynomial: {0}")]
    DegeneratePolynomial(&'static str),

    #[error("singular Lyapunov system (drift matrix is marginally stable)")]
    SingularLyapunov,

    #[error("non-physical covariance matrix: {0}")]
    NonPhysical(String),

    #[error("invalid config: {0}")]
    Config(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    /// True for failures of the numerics (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularLyapunov | Error::NonPhysical(_) | Error::DegeneratePolynomial(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
