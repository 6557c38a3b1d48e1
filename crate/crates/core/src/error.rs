use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by state construction, register addressing, and analysis
/// preconditions. Every variant names the violated invariant so the CLI can
/// surface it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("layout conflict: duplicate subsystem label `{0}`")]
    LayoutConflict(String),

    #[error("addressing error: unknown subsystem label `{0}`")]
    UnknownLabel(String),

    #[error("label sets must be disjoint; `{0}` appears in more than one set")]
    OverlappingLabelSets(String),

    #[error("label set must be nonempty")]
    EmptyLabelSet,

    #[error("dimension mismatch: expected {expected}, got {actual} ({context})")]
    DimensionMismatch {
        expected: usize,
        actual: usize,
        context: String,
    },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("symbol count {0} exceeds the supported cap of {1}")]
    SymbolCapExceeded(usize, usize),

    #[error("amplification basis is not orthonormal (max deviation {0:.3e})")]
    NonOrthonormalBasis(f64),

    #[error("side-channel precondition failed: {0}")]
    SideChannel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit status the CLI maps this error to: 2 for validation failures
    /// (bad input, violated invariant), 1 for internal/environment errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
