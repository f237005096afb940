//! Large-n reduced forms g3, g4, g7, g9, g10, g11.
//!
//! These are the leading-order simplifications of the F-forms when n → ∞ at
//! fixed a, each written in its own scaled coordinate. They are evaluated
//! independently of the F-forms so that the two can be cross-checked.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::asym::ScaledCoordinate;
use crate::error::{Error, Result};
use crate::oracle::Params;
use crate::scaled::{ScaledComplex, ScaledReal};
use crate::specfun::{airy, airy_ai, cos_pi, sin_pi, SpecFunConfig};

/// A complex value with a separate exponential scale.
pub type ComplexValue = ScaledComplex;

fn parity(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn require_positive_degree(params: Params, what: &str) -> Result<()> {
    if params.n == 0 {
        return Err(Error::Domain(format!("{what} needs n ≥ 1")));
    }
    Ok(())
}

/// Upper limit (exclusive) of the fraction u = x/n accepted by [`g7`], i.e. X⁻/n.
pub fn g7_u_limit(params: Params) -> f64 {
    let r = params.a / params.nf();
    1.0 - 2.0 * r.sqrt() + r
}

/// g7 at x = u·n, 0 ≤ u < X⁻/n:
/// cos(unπ)/√(1−u)·exp{[u ln(n/a) + (u−1)ln(1−u) − u]n + au/(u−1)}
/// − 2 sin(unπ)√(u/(1−u))·exp{[ln(n/a) + (1−u)ln(1−u) + u ln u − 1]n + a/(1−u)}.
pub fn g7(params: Params, u_frac: f64) -> Result<ScaledReal> {
    require_positive_degree(params, "g7")?;
    let limit = g7_u_limit(params);
    if !(u_frac >= 0.0 && u_frac < limit) {
        return Err(Error::Domain(format!("g7 needs 0 ≤ u < {limit}, got {u_frac}")));
    }
    let (n, a, u) = (params.nf(), params.a, u_frac);
    let lr = (n / a).ln();
    let l1u = (1.0 - u).ln();
    let first = ScaledReal::new(
        cos_pi(u * n) / (1.0 - u).sqrt(),
        (u * lr + (u - 1.0) * l1u - u) * n + a * u / (u - 1.0),
    );
    let s = sin_pi(u * n);
    if s == 0.0 {
        return Ok(first);
    }
    let second = ScaledReal::new(
        -2.0 * s * (u / (1.0 - u)).sqrt(),
        (lr + (1.0 - u) * l1u + u * u.ln() - 1.0) * n + a / (1.0 - u),
    );
    Ok(first + second)
}

/// Common prefactor of g9 and g11: √(2π) a^{−1/6} n^{1/3} exp[(x+n)/2·ln(n/a) − n + 3a/2].
fn airy_prefactor(params: Params, x: f64) -> ScaledReal {
    let (n, a) = (params.nf(), params.a);
    ScaledReal::new(
        (2.0 * PI).sqrt() * a.powf(-1.0 / 6.0) * n.powf(1.0 / 3.0),
        (x + n) / 2.0 * (n / a).ln() - n + 1.5 * a,
    )
}

/// g9 at x = X⁻ + t·n^{1/6}: the prefactor times cos(πx)Ai(−t a^{−1/6}) − sin(πx)Bi(−t a^{−1/6}).
pub fn g9(params: Params, t: f64, cfg: &SpecFunConfig) -> Result<ScaledReal> {
    require_positive_degree(params, "g9")?;
    let x = ScaledCoordinate::x_of_t(params, t);
    let arg = -t * params.a.powf(-1.0 / 6.0);
    let s = sin_pi(x);
    let bracket = if s == 0.0 {
        cos_pi(x) * airy_ai(arg, cfg)?
    } else {
        let v = airy(arg, cfg)?;
        cos_pi(x) * v.ai - s * v.bi
    };
    Ok(airy_prefactor(params, x) * bracket)
}

/// g11 at x = X⁺ + s·n^{1/6}: (−1)^n times the prefactor times Ai(s a^{−1/6}).
pub fn g11(params: Params, s: f64, cfg: &SpecFunConfig) -> Result<ScaledReal> {
    require_positive_degree(params, "g11")?;
    let x = ScaledCoordinate::x_of_s(params, s);
    let ai = airy_ai(s * params.a.powf(-1.0 / 6.0), cfg)?;
    Ok(airy_prefactor(params, x) * (parity(params.n) * ai))
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta.abs() < FRAC_PI_2) {
        return Err(Error::Domain(format!("θ must lie in (−π/2, π/2), got {theta}")));
    }
    Ok(())
}

/// g3 (sign = +1) or g4 (sign = −1): the two printed forms differ by i → −i.
fn g_oscillatory(params: Params, theta: f64, sign: f64) -> Result<ComplexValue> {
    require_positive_degree(params, "g3/g4")?;
    check_theta(theta)?;
    let (n, a) = (params.nf(), params.a);
    let (s, c) = theta.sin_cos();
    let lr = (n / a).ln();
    let rt = (a * n).sqrt();
    let re = (lr - 1.0) * n + rt * s * lr + a * (1.0 - (2.0 * theta).cos() / 2.0 + lr / 2.0);
    let im = FRAC_PI_4 - rt * (s * (2.0 * theta - PI) + 2.0 * c) - a * ((2.0 * theta).sin() / 2.0 + theta - FRAC_PI_2);
    let pref = parity(params.n) * a.powf(-0.25) * n.powf(0.25) / (2.0 * c).sqrt();
    Ok(ScaledComplex::exp(Complex64::new(re, sign * im)) * Complex64::new(pref, 0.0))
}

/// g3 at x = n + a + 2 sin(θ)√(an).
pub fn g3(params: Params, theta: f64) -> Result<ComplexValue> {
    g_oscillatory(params, theta, 1.0)
}

/// g4 at x = n + a + 2 sin(θ)√(an); the i → −i image of g3.
pub fn g4(params: Params, theta: f64) -> Result<ComplexValue> {
    g_oscillatory(params, theta, -1.0)
}

/// g10, the real cosine form at x = n + a + 2 sin(θ)√(an):
/// (−1)^n √2 a^{−1/4} n^{1/4}/√(cos θ) · exp[(ln(n/a) − 1)n + √(an) sin θ ln(n/a) + a(1 − cos 2θ/2 + ln(n/a)/2)]
/// · cos[√(an)(sin θ(2θ − π) + 2 cos θ) + a(sin 2θ/2 + θ − π/2) − π/4].
pub fn g10(params: Params, theta: f64) -> Result<ScaledReal> {
    require_positive_degree(params, "g10")?;
    check_theta(theta)?;
    let (n, a) = (params.nf(), params.a);
    let (s, c) = theta.sin_cos();
    let lr = (n / a).ln();
    let rt = (a * n).sqrt();
    let exponent = (lr - 1.0) * n + rt * s * lr + a * (1.0 - (2.0 * theta).cos() / 2.0 + lr / 2.0);
    let phase = rt * (s * (2.0 * theta - PI) + 2.0 * c) + a * ((2.0 * theta).sin() / 2.0 + theta - FRAC_PI_2) - FRAC_PI_4;
    let amp = parity(params.n) * 2f64.sqrt() * a.powf(-0.25) * n.powf(0.25) / c.sqrt();
    Ok(ScaledReal::new(amp * phase.cos(), exponent))
}

/// Relative gap |g10 − (g3 + g4)| / |g10|.
pub fn g10_residue(params: Params, theta: f64) -> Result<f64> {
    let real = g10(params, theta)?;
    let sum = g3(params, theta)? + g4(params, theta)?;
    Ok(ScaledComplex::from(real).rel_diff(&sum))
}

/// x at which g9 is evaluated for a given t; re-exported for probe construction.
pub fn x_of_t(params: Params, t: f64) -> f64 {
    ScaledCoordinate::x_of_t(params, t)
}
