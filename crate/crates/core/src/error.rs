use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Element counts or matrix dimensions do not fit together.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A mode or index is out of range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input lies outside the domain of the operation (e.g. a zero tensor).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input violates a precondition that had to be checked numerically.
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// Eigensolver failure while computing the factor of one mode.
    #[error("mode {mode}: {source}")]
    Mode {
        mode: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numerical kernel (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::NoConvergence { .. } => true,
            Error::Mode { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
