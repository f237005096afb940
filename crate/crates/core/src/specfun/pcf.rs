use super::SpecFunConfig;
use crate::bigreal::{BigReal, MIN_DIGITS};
use crate::error::{Error, Result};

/// Parabolic cylinder function D_ν(u) for real order ν and real argument u.
///
/// Uses the even/odd decomposition
///
/// D_ν(u) = 2^{ν/2} e^{−u²/4} [ √π/Γ((1−ν)/2) · M(−ν/2, 1/2, u²/2)
///                              − √(2π) u/Γ(−ν/2) · M((1−ν)/2, 3/2, u²/2) ]
///
/// with Kummer's M. For u > 0 the two halves are of size e^{u²/2} while the
/// result decays like e^{−u²/4}, so the sums (and the Gamma coefficients) are
/// carried in extended precision sized to the expected cancellation.
pub fn pcf_d(order: f64, u: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if !order.is_finite() || !u.is_finite() {
        return Err(Error::Domain(format!("D_{order}({u}) needs finite arguments")));
    }
    let digits = working_digits(order, u, cfg);
    let nu = BigReal::from_f64(order, digits);
    let z = BigReal::from_f64(u, digits);
    let half = BigReal::one(digits) / 2;
    let w = &(&z * &z) / 2; // u²/2

    let pi = BigReal::pi(digits);
    let sqrt_pi = pi.sqrt();
    let sqrt_2pi = (&pi * 2).sqrt();

    let alpha_even = -(&nu / 2);
    let alpha_odd = &(&BigReal::one(digits) - &nu) / 2;
    let c_even = &sqrt_pi * &recip_gamma(&alpha_odd);
    let c_odd = &sqrt_2pi * &recip_gamma(&alpha_even);

    let tol_digits = digits as i32 - 5;
    let m_even = if c_even.is_zero() {
        BigReal::zero(digits)
    } else {
        kummer_m(&alpha_even, &half, &w, tol_digits, cfg.max_terms)?
    };
    let m_odd = if c_odd.is_zero() {
        BigReal::zero(digits)
    } else {
        kummer_m(&alpha_odd, &(&half * 3), &w, tol_digits, cfg.max_terms)?
    };
    let bracket = &(&c_even * &m_even) - &(&(&c_odd * &z) * &m_odd);
    // 2^{ν/2} e^{−u²/4}
    let ln2 = BigReal::from_i64(2, digits).ln();
    let prefactor = (&(&(&nu / 2) * &ln2) - &(&w / 2)).exp();
    Ok((&prefactor * &bracket).to_f64())
}

/// Digits needed: the requested tolerance plus the cancellation between the
/// even and odd parts (≈ (3/4)u² log10 e for u > 0) plus a margin for ν.
fn working_digits(order: f64, u: f64, cfg: &SpecFunConfig) -> u32 {
    let tol_digits = (-cfg.series_tol.log10()).ceil().max(16.0);
    let cancel = if u > 0.0 { 0.75 * u * u * std::f64::consts::LOG10_E } else { 0.0 };
    let extra = 2.0 * order.abs() + 15.0;
    ((tol_digits + cancel + extra).ceil() as u32).max(MIN_DIGITS)
}

/// Kummer M(α, β, w) = Σ (α)_k/(β)_k w^k/k! for w ≥ 0.
fn kummer_m(alpha: &BigReal, beta: &BigReal, w: &BigReal, tol_digits: i32, max_terms: usize) -> Result<BigReal> {
    let digits = alpha.digits();
    let mut sum = BigReal::one(digits);
    let mut term = BigReal::one(digits);
    let tol = BigReal::from_i64(10, digits).powi(-(tol_digits as i64));
    let alpha_abs = alpha.to_f64().abs();
    for k in 0..max_terms {
        let kb = BigReal::from_i64(k as i64, digits);
        term = &(&term * &(&(alpha + &kb) * w)) / &(&(beta + &kb) * &(&kb + 1));
        sum = &sum + &term;
        if term.is_zero() {
            return Ok(sum);
        }
        if (k as f64) > alpha_abs + 1.0 && term.abs() <= &tol * &sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::Convergence { what: "Kummer series for the parabolic cylinder function".into(), terms: max_terms })
}

/// 1/Γ(y) in extended precision; exactly zero at the poles y = 0, −1, −2, ….
fn recip_gamma(y: &BigReal) -> BigReal {
    let digits = y.digits();
    // Shift up: 1/Γ(y) = y (y+1) … (y+m−1) / Γ(y+m) with y + m ≥ 1.
    let mut prod = BigReal::one(digits);
    let mut t = y.clone();
    let one = BigReal::one(digits);
    while t < one {
        prod = &prod * &t;
        if prod.is_zero() {
            return prod;
        }
        t = &t + &one;
    }
    &prod / &gamma_spouge(&(&t - &one))
}

/// Γ(z + 1) for z ≥ 0 by Spouge's approximation, accurate to the precision of `z`.
fn gamma_spouge(z: &BigReal) -> BigReal {
    let target = z.digits();
    // Spouge's relative error is below (2π)^{−(A+1/2)}; the alternating
    // coefficients cost roughly another A·log10(e) digits.
    let a_param = (target as f64 * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI).ln()).ceil() as i64 + 2;
    let work = target + (a_param as f64 * std::f64::consts::LOG10_E).ceil() as u32 + 10;
    let z = z.with_digits(work);
    let one = BigReal::one(work);
    let a = BigReal::from_i64(a_param, work);
    let pi2 = &BigReal::pi(work) * 2;

    let mut sum = pi2.sqrt();
    let mut factorial = BigReal::one(work); // (k−1)!
    for k in 1..a_param {
        if k > 1 {
            factorial = &factorial * (k - 1);
        }
        let amk = BigReal::from_i64(a_param - k, work);
        let half = &one / 2;
        // (a−k)^{k−1/2} e^{a−k} / (k−1)!
        let mag = (&(&(&BigReal::from_i64(k, work) - &half) * &amk.ln()) + &amk).exp();
        let mut c = &mag / &factorial;
        if k % 2 == 0 {
            c = -c;
        }
        sum = &sum + &(&c / &(&z + k));
    }
    let za = &z + &a;
    let power = (&(&(&z + &(&one / 2)) * &za.ln()) - &za).exp();
    (&power * &sum).with_digits(target)
}
