use std::f64::consts::PI;

use super::sin_pi;
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_8;

/// ζ(k) − 1 for k = 2, 3, ….
const ZETA_MINUS_ONE: [f64; 39] = [
    6.44934066848226406066e-01,
    2.02056903159594292152e-01,
    8.23232337111381856642e-02,
    3.69277551433699266492e-02,
    1.73430619844491401560e-02,
    8.34927738192282713203e-03,
    4.07735619794433960111e-03,
    2.00839282608221425530e-03,
    9.94575127818085255593e-04,
    4.94188604119464528625e-04,
    2.46086553308048319906e-04,
    1.22713347578489145439e-04,
    6.12481350587048276653e-05,
    3.05882363070204932689e-05,
    1.52822594086518709648e-05,
    7.63719763789976256827e-06,
    3.81729326499984021842e-06,
    1.90821271655393897155e-06,
    9.53962033872796212006e-07,
    4.76932986787806446824e-07,
    2.38450502727733004353e-07,
    1.19219925965311063718e-07,
    5.96081890512594800969e-08,
    2.98035035146522792822e-08,
    1.49015548283650426809e-08,
    7.45071178983543006094e-09,
    3.72533402478845728320e-09,
    1.86265972351304914216e-09,
    9.31327432419668165620e-10,
    4.65662906503378469150e-10,
    2.32831183367650585284e-10,
    1.16415501727005193112e-10,
    5.82077208790270015770e-11,
    2.91038504449710000529e-11,
    1.45519218910419881253e-11,
    7.27595983505749148979e-12,
    3.63797954737865651722e-12,
    1.81898965030706809020e-12,
    9.09494784026398332299e-13,
];

/// B_{2k} / (2k (2k−1)) for the Stirling series, k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// ln Γ(2 + z) for |z| ≤ 1/2 from its Taylor series about 2.
fn log_gamma_near_two(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zk = z;
    for (i, c) in ZETA_MINUS_ONE.iter().enumerate() {
        zk *= -z;
        let k = (i + 2) as f64;
        sum += c * zk / k;
    }
    -sum + (1.0 - EULER_GAMMA) * z
}

fn log_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in STIRLING {
        series += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + series
}

/// ln Γ(x) for x > 0.
///
/// Small arguments are shifted into [1.5, 2.5] where a Taylor series about 2
/// is used; x ≥ 12 uses the Stirling series.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x >= 12.0 {
        return Ok(log_gamma_stirling(x));
    }
    if x < 1.5 {
        // Γ(x) = Γ(x + m) / (x (x+1) … (x+m−1)).
        if x >= 0.5 {
            // ln Γ(1 + z) = ln Γ(2 + z) − ln(1 + z), z = x − 1 ∈ [−0.5, 0.5].
            let z = x - 1.0;
            return Ok(log_gamma_near_two(z) - z.ln_1p());
        }
        let z = x; // x in (0, 0.5): shift up by two
        return Ok(log_gamma_near_two(z) - (z * (z + 1.0)).ln());
    }
    // 1.5 ≤ x < 12: shift down into [1.5, 2.5].
    let mut y = x;
    let mut prod = 1.0;
    while y > 2.5 {
        y -= 1.0;
        prod *= y;
    }
    Ok(log_gamma_near_two(y - 2.0) + prod.ln())
}

/// Γ(x) for real x, with reflection for x < 1/2. Errors at the poles.
pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.trunc() {
        return Err(Error::Singular(format!("Gamma has a pole at {x}")));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        return Ok(PI / (s * gamma(1.0 - x)?));
    }
    let lg = log_gamma(x)?;
    if lg > 709.0 {
        return Err(Error::Overflow(format!("Gamma({x}) exceeds the f64 range")));
    }
    Ok(lg.exp())
}

/// Γ(x + 1)·sin(πx), continuous across the removable singularities at the
/// negative integers (where it equals −π/Γ(−x)).
pub fn gamma_times_sin_pi(x: f64) -> Result<f64> {
    if x > -0.5 {
        return Ok(gamma(x + 1.0)? * sin_pi(x));
    }
    // Γ(1 + x) Γ(−x) = −π / sin(πx).
    Ok(-PI / gamma(-x)?)
}
