use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The formula has a pole at the requested point (e.g. a turning point).
    #[error("singular point: {0}")]
    Singular(String),

    /// A quantity expected to be real carries a non-negligible imaginary part.
    #[error("result is not real: imaginary residue {residue:e} exceeds tolerance")]
    NotReal { residue: f64 },

    /// A series or iteration did not converge within its budget.
    #[error("no convergence after {terms} terms: {what}")]
    Convergence { what: String, terms: usize },

    /// The result does not fit the floating-point range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// The zero scan found a different number of sign changes than expected.
    #[error("found {found} zeros, expected {expected}")]
    ZeroCount { found: usize, expected: usize },

    /// The phase equation has no sign change on (-pi/2, pi/2) for this index.
    #[error("no bracket for the phase equation at l = {l}")]
    NoBracket { l: i64 },

    /// Two approximate zeros were matched to the same exact zero.
    #[error("pairing conflict: exact zero {exact} claimed twice")]
    Pairing { exact: f64 },

    /// A configuration value violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// True for failures of the numerics (as opposed to bad arguments).
    pub fn is_numeric_failure(&self) -> bool {
        !matches!(self, Error::Domain(_) | Error::InvalidConfig(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
