use serde_json::json;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed input file {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] theta_core::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use theta_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Json { .. } => "malformed_input",
            CliError::Core(e) => match e {
                E::GuardExceeded(_) => "guard_exceeded",
                E::QuadratureNonConvergence { .. } => "quadrature_non_convergence",
                E::ThetaNullTestFailed(_) => "theta_null_test_failed",
                E::InconsistentDetection(_) => "inconsistent_detection",
                E::RadiusOverflow { .. } => "radius_overflow",
                E::Parse(_) => "parse",
                _ => "invalid_input",
            },
        }
    }

    /// 1 for numerical or verification failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        use theta_core::Error as E;
        match self {
            CliError::Core(
                E::QuadratureNonConvergence { .. } | E::ThetaNullTestFailed(_) | E::InconsistentDetection(_),
            ) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
