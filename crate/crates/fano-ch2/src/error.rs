//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two cycle classes live on different modeled spaces.
    #[error("space mismatch: `{0}` vs `{1}`")]
    SpaceMismatch(String, String),

    /// Codimensions do not line up for the requested operation.
    #[error("codimension mismatch: {0}")]
    CodimMismatch(String),

    /// The model does not carry a basis in this codimension (truncated model).
    #[error("codimension {codim} is not supported on `{space}`")]
    UnsupportedCodim { space: String, codim: usize },

    /// A constructor precondition was violated.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The construction is outside the catalog.
    #[error("unsupported construction: {0}")]
    Unsupported(String),

    /// Space-spec text did not parse.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A cone description is too degenerate to decide membership.
    #[error("indeterminate verdict: {0}")]
    Indeterminate(String),

    /// An internal invariant failed (a bug, not a user error).
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 parse, 2 unsupported/parameter, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 1,
            Error::Parameter(_) | Error::Unsupported(_) => 2,
            _ => 3,
        }
    }
}
