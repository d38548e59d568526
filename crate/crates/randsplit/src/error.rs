use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while building discretizations or running experiments.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violated its documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The nonlinear or linear solve did not reach its tolerance.
    #[error("solver did not converge at step {step}: residual {residual:.3e} after {iters} iterations")]
    NonConvergence {
        step: usize,
        iters: usize,
        residual: f64,
    },

    /// A NaN or infinity appeared in an iterate.
    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },

    /// A Monte Carlo realization failed; the whole record is rejected so the
    /// estimator is not silently biased.
    #[error("realization {realization} failed: {source}")]
    Realization {
        realization: u32,
        #[source]
        source: Box<Error>,
    },

    /// Experiment configuration could not be parsed or validated.
    #[error("config error: {0}")]
    Config(String),

    /// Not enough usable data points for a convergence fit.
    #[error("fit error: {0}")]
    Fit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
