use std::f64::consts::{FRAC_PI_4, PI};

use super::SpecFunConfig;
use crate::error::{Error, Result};

/// |x| at which evaluation switches from the Maclaurin series to the
/// asymptotic expansions.
pub const AIRY_SWITCH: f64 = 6.0;

/// Ai(0) = 3^{−2/3}/Γ(2/3).
const AI0: f64 = 0.355_028_053_887_817_239_26;
/// −Ai'(0) = 3^{−1/3}/Γ(1/3).
const AIP0: f64 = 0.258_819_403_792_806_798_41;
const SQRT3: f64 = 1.732_050_807_568_877_293_5;

/// Ai, Ai', Bi, Bi' at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AiryValues {
    pub ai: f64,
    pub ai_prime: f64,
    pub bi: f64,
    pub bi_prime: f64,
}

/// Airy function Ai(x).
pub fn airy_ai(x: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if x.abs() < AIRY_SWITCH {
        return Ok(maclaurin(x, cfg)?.ai);
    }
    Ok(asymptotic(x, cfg, false)?.ai)
}

/// Airy function Bi(x); signals overflow when Bi(x) exceeds the f64 range.
pub fn airy_bi(x: f64, cfg: &SpecFunConfig) -> Result<f64> {
    Ok(airy(x, cfg)?.bi)
}

/// All four Airy values Ai, Ai', Bi, Bi'.
pub fn airy(x: f64, cfg: &SpecFunConfig) -> Result<AiryValues> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("Airy functions need a finite argument, got {x}")));
    }
    if x.abs() < AIRY_SWITCH {
        maclaurin(x, cfg)
    } else {
        asymptotic(x, cfg, true)
    }
}

/// Ai = c1 f − c2 g, Bi = √3 (c1 f + c2 g) with the two power series f, g.
fn maclaurin(x: f64, cfg: &SpecFunConfig) -> Result<AiryValues> {
    let x3 = x * x * x;
    // f, g and their derivatives, all as term recurrences in k.
    let (mut f, mut tf) = (1.0, 1.0);
    let (mut g, mut tg) = (x, x);
    let (mut fp, mut tfp) = (x * x / 2.0, x * x / 2.0);
    let (mut gp, mut tgp) = (1.0, 1.0);
    let mut converged = false;
    for k in 0..cfg.max_terms {
        let k3 = 3.0 * k as f64;
        tf *= x3 / ((k3 + 2.0) * (k3 + 3.0));
        tg *= x3 / ((k3 + 3.0) * (k3 + 4.0));
        tfp *= x3 / ((k3 + 3.0) * (k3 + 5.0));
        tgp *= x3 / ((k3 + 1.0) * (k3 + 3.0));
        f += tf;
        g += tg;
        fp += tfp;
        gp += tgp;
        let small = |t: f64, s: f64| t.abs() <= cfg.series_tol * s.abs().max(1e-300);
        if k > 2 && small(tf, f) && small(tg, g) && small(tfp, fp) && small(tgp, gp) {
            converged = true;
            break;
        }
        if x == 0.0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence { what: format!("Airy series at x = {x}"), terms: cfg.max_terms });
    }
    Ok(AiryValues {
        ai: AI0 * f - AIP0 * g,
        ai_prime: AI0 * fp - AIP0 * gp,
        bi: SQRT3 * (AI0 * f + AIP0 * g),
        bi_prime: SQRT3 * (AI0 * fp + AIP0 * gp),
    })
}

/// Coefficients u_k, v_k of the large-argument expansions, up to `n` terms.
fn uv_coefficients(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..n {
        let kf = k as f64;
        let prev = u[k - 1];
        let uk = prev * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

/// Sum Σ sign(k)·c_k ζ^{-k} over the selected indices with optimal truncation:
/// stop once terms fall below tolerance or start growing.
fn truncated_sum(
    coeffs: &[f64],
    zeta: f64,
    indices: impl Iterator<Item = usize>,
    alternate: bool,
    tol: f64,
) -> f64 {
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    for (j, k) in indices.enumerate() {
        if k >= coeffs.len() {
            break;
        }
        let mut term = coeffs[k] / zeta.powi(k as i32);
        if alternate && j % 2 == 1 {
            term = -term;
        }
        if term.abs() > last {
            break;
        }
        sum += term;
        last = term.abs();
        if term.abs() <= tol * sum.abs() {
            break;
        }
    }
    sum
}

fn asymptotic(x: f64, cfg: &SpecFunConfig, need_bi: bool) -> Result<AiryValues> {
    let n_terms = cfg.max_terms.min(60);
    let (u, v) = uv_coefficients(n_terms);
    let tol = cfg.series_tol;
    let ax = x.abs();
    let zeta = 2.0 / 3.0 * ax * ax.sqrt();
    let q = ax.powf(0.25);
    let sqrt_pi = PI.sqrt();
    if x > 0.0 {
        let all = || 0..n_terms;
        // Σ (−1)^k u_k ζ^{−k} and Σ u_k ζ^{−k}
        let su_alt = truncated_sum(&u, zeta, all(), true, tol);
        let sv_alt = truncated_sum(&v, zeta, all(), true, tol);
        let decay = (-zeta).exp();
        let ai = decay / (2.0 * sqrt_pi * q) * su_alt;
        let ai_prime = -q * decay / (2.0 * sqrt_pi) * sv_alt;
        let (bi, bi_prime) = if need_bi {
            let su = truncated_sum(&u, zeta, all(), false, tol);
            let sv = truncated_sum(&v, zeta, all(), false, tol);
            let grow = zeta.exp();
            if !grow.is_finite() {
                return Err(Error::Overflow(format!("Bi({x}) exceeds the f64 range")));
            }
            (grow / (sqrt_pi * q) * su, q * grow / sqrt_pi * sv)
        } else {
            (f64::NAN, f64::NAN)
        };
        Ok(AiryValues { ai, ai_prime, bi, bi_prime })
    } else {
        let even = || (0..n_terms).step_by(2);
        let odd = || (1..n_terms).step_by(2);
        let p = truncated_sum(&u, zeta, even(), true, tol);
        let qq = truncated_sum(&u, zeta, odd(), true, tol);
        let r = truncated_sum(&v, zeta, even(), true, tol);
        let s = truncated_sum(&v, zeta, odd(), true, tol);
        let phase = zeta + FRAC_PI_4;
        let (sn, cs) = phase.sin_cos();
        let amp = 1.0 / (sqrt_pi * q);
        let damp = q / sqrt_pi;
        Ok(AiryValues {
            ai: amp * (sn * p - cs * qq),
            ai_prime: -damp * (cs * r + sn * s),
            bi: amp * (cs * p + sn * qq),
            bi_prime: damp * (sn * r - cs * s),
        })
    }
}
