use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// No usable pivot in the given (1-based) column.
    #[error("singular matrix: no pivot in column {column}")]
    Singular { column: usize },

    /// A size or range precondition was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The parameters are in range but describe a degenerate walk
    /// (disconnected matching, vanishing denominator, ...).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("infinite hitting time: target {target} is unreachable from vertices {starts:?}")]
    Unreachable { target: usize, starts: Vec<usize> },

    #[error("step cap of {cap} exceeded in trial {trial}")]
    StepCapExceeded { cap: u64, trial: u64 },

    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a degenerate (but well-formed) input, as
    /// opposed to a malformed request.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::Degenerate(_)
                | Error::Unreachable { .. }
                | Error::Singular { .. }
                | Error::StepCapExceeded { .. }
        )
    }
}
