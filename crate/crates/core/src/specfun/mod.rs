//! Special functions used by the approximations: log-Gamma/Gamma, Hermite
//! polynomials, Airy functions and the parabolic cylinder function D_ν.

mod airy;
mod gamma;
mod hermite;
mod pcf;

pub use airy::{airy, airy_ai, airy_bi, AiryValues, AIRY_SWITCH};
pub use gamma::{gamma, gamma_times_sin_pi, log_gamma};
pub use hermite::hermite;
pub use pcf::pcf_d;

use crate::error::{Error, Result};

/// Truncation controls for the series-based functions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecFunConfig {
    /// Relative size of the last retained term (0 < tol < 1e-6).
    pub series_tol: f64,
    /// Hard cap on the number of series terms (≥ 50).
    pub max_terms: usize,
}

impl SpecFunConfig {
    pub fn new(series_tol: f64, max_terms: usize) -> Result<Self> {
        if !(series_tol > 0.0 && series_tol < 1e-6) {
            return Err(Error::InvalidConfig(format!(
                "series_tol must lie in (0, 1e-6), got {series_tol}"
            )));
        }
        if max_terms < 50 {
            return Err(Error::InvalidConfig(format!(
                "max_terms must be at least 50, got {max_terms}"
            )));
        }
        Ok(SpecFunConfig { series_tol, max_terms })
    }
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        SpecFunConfig { series_tol: 1e-16, max_terms: 2000 }
    }
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round(); // r in [-1, 1]
    if r == r.trunc() {
        return 0.0;
    }
    (std::f64::consts::PI * r).sin()
}

/// cos(πx) with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if (r - 0.5).abs() == 0.0 || (r + 0.5).abs() == 0.0 {
        return 0.0;
    }
    (std::f64::consts::PI * r).cos()
}
