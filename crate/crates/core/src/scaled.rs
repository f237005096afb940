//! Double-precision values with an unbounded exponent.
//!
//! The asymptotic formulas routinely produce magnitudes like e^{700} or
//! e^{-900} at n ≈ 200, well outside the f64 range, while only ~16 significant
//! digits are meaningful. These types keep a double mantissa together with a
//! natural-log scale: value = mantissa · e^{log_scale}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Real number `mantissa · exp(log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledReal {
    pub mantissa: f64,
    pub log_scale: f64,
}

/// Complex number `mantissa · exp(log_scale)` with a real `log_scale`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

/// Largest |log_scale| folded back into the mantissa when normalising.
const FOLD_LIMIT: f64 = 600.0;

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal { mantissa: 0.0, log_scale: 0.0 };
    pub const ONE: ScaledReal = ScaledReal { mantissa: 1.0, log_scale: 0.0 };

    /// Build and normalise: if the value fits comfortably in an f64, the scale
    /// is folded into the mantissa; otherwise the mantissa is kept near unit size.
    pub fn new(mantissa: f64, log_scale: f64) -> Self {
        if mantissa == 0.0 {
            return Self::ZERO;
        }
        let total = mantissa.abs().ln() + log_scale;
        if total.abs() < FOLD_LIMIT {
            ScaledReal { mantissa: mantissa * log_scale.exp(), log_scale: 0.0 }
                .refold(mantissa, log_scale)
        } else {
            let shift = mantissa.abs().ln().trunc();
            ScaledReal { mantissa: mantissa * (-shift).exp(), log_scale: log_scale + shift }
        }
    }

    // `mantissa * exp(log_scale)` may still overflow an intermediate step when
    // the two factors are individually extreme; redo it in two halves then.
    fn refold(self, mantissa: f64, log_scale: f64) -> Self {
        if self.mantissa.is_finite() && self.mantissa != 0.0 {
            return self;
        }
        let half = (log_scale / 2.0).exp();
        ScaledReal { mantissa: mantissa * half * half, log_scale: 0.0 }
    }

    pub fn from_f64(x: f64) -> Self {
        ScaledReal { mantissa: x, log_scale: 0.0 }
    }

    /// `sign · exp(log_abs)`.
    pub fn from_log(sign: f64, log_abs: f64) -> Self {
        Self::new(sign, log_abs)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.mantissa.is_finite() && self.log_scale.is_finite()
    }

    pub fn signum(&self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// Natural log of the absolute value (−∞ for zero).
    pub fn ln_abs(&self) -> f64 {
        self.mantissa.abs().ln() + self.log_scale
    }

    pub fn abs(&self) -> Self {
        ScaledReal { mantissa: self.mantissa.abs(), log_scale: self.log_scale }
    }

    /// Plain f64 (±∞ or 0 when out of range).
    pub fn to_f64(&self) -> f64 {
        if self.log_scale == 0.0 {
            self.mantissa
        } else {
            self.mantissa * self.log_scale.exp()
        }
    }

    /// `self / other` as an f64 (assumed to be of moderate size).
    pub fn ratio(&self, other: &ScaledReal) -> f64 {
        (self.mantissa / other.mantissa) * (self.log_scale - other.log_scale).exp()
    }

    /// Relative deviation |self/reference − 1|.
    pub fn rel_err(&self, reference: &ScaledReal) -> f64 {
        if reference.is_zero() {
            return if self.is_zero() { 0.0 } else { f64::INFINITY };
        }
        (self.ratio(reference) - 1.0).abs()
    }

    /// Scientific notation with 17 significant digits.
    pub fn to_sci_string(&self) -> String {
        if self.log_scale == 0.0 || self.mantissa == 0.0 {
            return format!("{:.16e}", self.mantissa);
        }
        let direct = self.to_f64();
        if direct.is_finite() && direct != 0.0 && direct.abs() >= f64::MIN_POSITIVE {
            return format!("{:.16e}", direct);
        }
        let log10 = self.ln_abs() / std::f64::consts::LN_10;
        let mut exp10 = log10.floor();
        let mut m = 10f64.powf(log10 - exp10);
        if m >= 10.0 {
            m /= 10.0;
            exp10 += 1.0;
        }
        let sign = if self.mantissa < 0.0 { "-" } else { "" };
        format!("{sign}{m:.16}e{}", exp10 as i64)
    }
}

impl fmt::Display for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string())
    }
}

impl Mul for ScaledReal {
    type Output = ScaledReal;
    fn mul(self, rhs: ScaledReal) -> ScaledReal {
        ScaledReal::new(self.mantissa * rhs.mantissa, self.log_scale + rhs.log_scale)
    }
}

impl Mul<f64> for ScaledReal {
    type Output = ScaledReal;
    fn mul(self, rhs: f64) -> ScaledReal {
        ScaledReal::new(self.mantissa * rhs, self.log_scale)
    }
}

impl Neg for ScaledReal {
    type Output = ScaledReal;
    fn neg(self) -> ScaledReal {
        ScaledReal { mantissa: -self.mantissa, log_scale: self.log_scale }
    }
}

impl Add for ScaledReal {
    type Output = ScaledReal;
    fn add(self, rhs: ScaledReal) -> ScaledReal {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let scale = self.log_scale.max(rhs.log_scale);
        let m = self.mantissa * (self.log_scale - scale).exp()
            + rhs.mantissa * (rhs.log_scale - scale).exp();
        ScaledReal::new(m, scale)
    }
}

impl Sub for ScaledReal {
    type Output = ScaledReal;
    fn sub(self, rhs: ScaledReal) -> ScaledReal {
        self + (-rhs)
    }
}

impl ScaledComplex {
    pub fn new(mantissa: Complex64, log_scale: f64) -> Self {
        let norm = mantissa.norm();
        if norm == 0.0 {
            return ScaledComplex { mantissa: Complex64::new(0.0, 0.0), log_scale: 0.0 };
        }
        let total = norm.ln() + log_scale;
        if total.abs() < FOLD_LIMIT && log_scale.abs() < FOLD_LIMIT {
            ScaledComplex { mantissa: mantissa * log_scale.exp(), log_scale: 0.0 }
        } else {
            let shift = norm.ln().trunc();
            ScaledComplex { mantissa: mantissa * (-shift).exp(), log_scale: log_scale + shift }
        }
    }

    /// `exp(z)` without overflow: the real part goes into the scale.
    pub fn exp(z: Complex64) -> Self {
        ScaledComplex::new(Complex64::from_polar(1.0, z.im), z.re)
    }

    pub fn re(&self) -> ScaledReal {
        ScaledReal::new(self.mantissa.re, self.log_scale)
    }

    pub fn im(&self) -> ScaledReal {
        ScaledReal::new(self.mantissa.im, self.log_scale)
    }

    /// Natural log of the modulus.
    pub fn ln_norm(&self) -> f64 {
        self.mantissa.norm().ln() + self.log_scale
    }

    pub fn conj(&self) -> Self {
        ScaledComplex { mantissa: self.mantissa.conj(), log_scale: self.log_scale }
    }

    /// |self − other| / |other|.
    pub fn rel_diff(&self, other: &ScaledComplex) -> f64 {
        let d = *self - *other;
        if d.mantissa.norm() == 0.0 {
            return 0.0;
        }
        (d.ln_norm() - other.ln_norm()).exp()
    }
}

impl Mul for ScaledComplex {
    type Output = ScaledComplex;
    fn mul(self, rhs: ScaledComplex) -> ScaledComplex {
        ScaledComplex::new(self.mantissa * rhs.mantissa, self.log_scale + rhs.log_scale)
    }
}

impl Mul<Complex64> for ScaledComplex {
    type Output = ScaledComplex;
    fn mul(self, rhs: Complex64) -> ScaledComplex {
        ScaledComplex::new(self.mantissa * rhs, self.log_scale)
    }
}

impl Add for ScaledComplex {
    type Output = ScaledComplex;
    fn add(self, rhs: ScaledComplex) -> ScaledComplex {
        if self.mantissa.norm() == 0.0 {
            return rhs;
        }
        if rhs.mantissa.norm() == 0.0 {
            return self;
        }
        let scale = self.log_scale.max(rhs.log_scale);
        let m = self.mantissa * (self.log_scale - scale).exp()
            + rhs.mantissa * (rhs.log_scale - scale).exp();
        ScaledComplex::new(m, scale)
    }
}

impl Sub for ScaledComplex {
    type Output = ScaledComplex;
    fn sub(self, rhs: ScaledComplex) -> ScaledComplex {
        self + ScaledComplex { mantissa: -rhs.mantissa, log_scale: rhs.log_scale }
    }
}

impl From<ScaledReal> for ScaledComplex {
    fn from(r: ScaledReal) -> Self {
        ScaledComplex { mantissa: Complex64::new(r.mantissa, 0.0), log_scale: r.log_scale }
    }
}
