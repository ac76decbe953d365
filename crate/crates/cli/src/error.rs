use cartan_limits::limits::UnknownClass;
use cartan_limits::linalg::LinalgError;
use cartan_limits::numeric::NumericError;
use cartan_limits::sl2::Sl2Error;
use cartan_limits::triangle::TriangleError;
use cartan_limits::{LimitsError, NonArchError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot parse entry {entry:?}: {source}")]
    Entry { entry: String, source: NonArchError },
    #[error("unreachable: {to} is not a limit of {from}")]
    Unreachable { from: String, to: String },
    #[error(transparent)]
    Class(#[from] UnknownClass),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 2,
            _ => 1,
        }
    }
}

impl From<LimitsError> for CliError {
    fn from(e: LimitsError) -> Self {
        match e {
            LimitsError::InvariantViolation(m) => CliError::Internal(m),
            LimitsError::Triangle(TriangleError::InvariantViolation(m)) => CliError::Internal(m),
            LimitsError::ShadowNotDecomposable => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<TriangleError> for CliError {
    fn from(e: TriangleError) -> Self {
        LimitsError::from(e).into()
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<NonArchError> for CliError {
    fn from(e: NonArchError) -> Self {
        CliError::Input(e.to_string())
    }
}
