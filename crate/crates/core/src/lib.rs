//! Charlier polynomials C_n(x; a): an extended-precision reference evaluator,
//! the region-wise asymptotic approximations, their large-n reduced forms,
//! and exact/approximate zeros.
//!
//! The crate is organised by role:
//!
//! * [`oracle`] — exact evaluation (hypergeometric sum, three-term recurrence),
//!   Krawtchouk polynomials, orthogonality and the Krawtchouk→Charlier limit.
//! * [`asym`] — turning points, region classification and the approximations
//!   `f1`..`f11`.
//! * [`largen`] — reduced large-n forms of the oscillatory and transition
//!   approximations.
//! * [`zeros`] — exact zeros by bracketing and the closed-form approximations.
//! * [`specfun`] — log-Gamma, Hermite, Airy and parabolic cylinder functions.

pub mod asym;
pub mod bigreal;
pub mod cli;
pub mod error;
pub mod largen;
pub mod oracle;
pub mod scaled;
pub mod specfun;
pub mod zeros;

pub use bigreal::BigReal;
pub use error::{Error, Result};
pub use oracle::Params;
pub use scaled::{ScaledComplex, ScaledReal};
