use thiserror::Error;

/// Errors across the crate, grouped by how the CLI maps them to exit codes:
/// parameter/domain/parse errors are usage errors (exit 2), capability
/// errors mark inputs beyond the tool's supported scale (exit 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("capability limit: {0}")]
    Capability(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
