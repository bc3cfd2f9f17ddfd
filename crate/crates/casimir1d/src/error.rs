use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on an operation argument was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Cavity geometry is degenerate (partition outside the box or too
    /// close to a wall for the near-wall guard).
    #[error("invalid cavity: length={length}, partition={partition}")]
    InvalidCavity { length: f64, partition: f64 },

    /// Cutoff weight underflows for every mode; the regularized sum is
    /// meaningless at this lambda.
    #[error("degenerate cutoff: lambda={lambda} too large for length={length}")]
    DegenerateCutoff { lambda: f64, length: f64 },

    /// A mode sum failed to terminate within the hard term cap.
    #[error("mode sum did not converge within {terms} terms")]
    NoConvergence { terms: u64 },

    /// Successive ladder extrapolants diverge instead of settling.
    #[error("ill-conditioned extrapolation ladder")]
    IllConditionedLadder,

    /// A bundled report violated the first law beyond tolerance.
    #[error("first-law consistency violation: |dF - (dU - T dS)| = {residual:e}")]
    ConsistencyViolation { residual: f64 },

    /// Bad run configuration (CLI or maxent config validation).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Figure index outside 1..=7.
    #[error("no such figure: {0} (expected 1..=7)")]
    FigureIndex(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
