use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Bisection was asked for a root on an interval without a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// An iterative routine hit its iteration budget before converging.
    #[error("{what}: exceeded {max_iter} iterations")]
    MaxIterExceeded { what: &'static str, max_iter: usize },

    /// A root bracket for an exponent equation failed its sign check.
    #[error("root bracket failed for {0}")]
    RootBracket(String),

    /// An invalid simulation or sweep configuration.
    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
