//! Error type shared across the pipeline.

use thiserror::Error;

/// All failures the library surfaces.
///
/// The variants map onto the CLI exit codes: config errors exit 1, data
/// errors exit 2, contract/internal invariant failures exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad or inconsistent configuration (unknown key, invalid value, empty
    /// input where content is required).
    #[error("config error: {0}")]
    Config(String),

    /// Problems with input data: unreadable files, malformed corpus lines.
    #[error("data error: {0}")]
    Data(String),

    /// Shape or dimension mismatch in a tensor operation. Names the
    /// operation and the offending shapes.
    #[error("dimension error in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    /// Out-of-range index (embedding id, sequence position).
    #[error("index error in {op}: {detail}")]
    Index { op: &'static str, detail: String },

    /// A caller broke an API contract (non-scalar loss, missing gradient,
    /// mismatched lengths).
    #[error("contract error: {0}")]
    Contract(String),

    /// An internal invariant failed; always a bug, never user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            Error::Data(_) => 2,
            Error::Shape { .. } | Error::Index { .. } | Error::Contract(_) | Error::Internal(_) => {
                3
            }
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Data(format!("io: {e}"))
    }
}
