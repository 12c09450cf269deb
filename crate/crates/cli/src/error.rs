use thiserror::Error;

/// Anything that stops a campaign before it produces a verdict. All of these
/// map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] hrlab::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}
