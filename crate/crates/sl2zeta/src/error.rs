//! Error type shared by the numerical layers.
//!
//! Errors split into two families: *domain* errors (bad arguments, malformed
//! input — the caller asked for something outside a contract) and *numerical
//! contract* errors (the requested accuracy or decay could not be certified).
//! The CLI maps the first family to exit code 2 and the second to exit code 3.

use thiserror::Error;

/// Library-wide error enum.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid argument or unsupported parameter combination.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at (or numerically indistinguishable from) a pole.
    #[error("pole at {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    /// An iterative scheme failed to reach its stopping criterion.
    #[error("series/iteration did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    /// A quadrature or summation finished but could not certify the requested
    /// tolerance; the achieved estimate is attached.
    #[error("tolerance not met: requested {requested:.3e}, achieved {achieved:.3e}")]
    ToleranceNotMet { requested: f64, achieved: f64 },

    /// The node budget of a quadrature spec was exhausted.
    #[error("node budget exhausted ({budget} nodes)")]
    NodeBudget { budget: usize },

    /// Sampled data were given on incompatible grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A truncated spectral integral has a tail too large for the tolerance.
    #[error("insufficient decay: estimated tail {tail_estimate:.3e} exceeds tolerance")]
    InsufficientDecay { tail_estimate: f64 },

    /// The multiplier is not holomorphic on the strip required by p.
    #[error("strip too narrow: holomorphic halfwidth {halfwidth:.6} < required {required:.6}")]
    StripTooNarrow { halfwidth: f64, required: f64 },

    /// Derivatives of the requested order are not available for this multiplier.
    #[error("derivative of order {order} unavailable")]
    DerivativeUnavailable { order: u8 },

    /// The integrand tail did not exhibit a resolvable decay on the grid.
    #[error("tail not resolved: fitted decay rate {rate:.3e} is not positive")]
    TailNotResolved { rate: f64 },

    /// A matrix failed the unimodularity (det = 1) contract.
    #[error("not unimodular: det = {det:.17e}")]
    NotUnimodular { det: f64 },

    /// Malformed textual input (CLI arguments, table files, config files).
    #[error("parse error: {0}")]
    Parse(String),

    /// I/O failure while reading or writing tables.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that signal a violated numerical contract rather than
    /// a malformed request.
    pub fn is_numerical(&self) -> bool {
        !matches!(
            self,
            Error::Domain(_) | Error::Parse(_) | Error::Io(_) | Error::GridMismatch(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
