//! Extended-precision real scalar.
//!
//! A thin wrapper around a binary `dashu-float` number that remembers the
//! requested number of significant decimal digits. All arithmetic between two
//! values is carried out at the larger of the two precisions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfAway;
use dashu_float::{Context, FBig};
use dashu_int::{IBig, UBig};

use crate::error::{Error, Result};
use crate::scaled::ScaledReal;

type Float = FBig<HalfAway, 2>;

/// Smallest precision accepted by the public oracle entry points.
pub const MIN_DIGITS: u32 = 50;
/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;

const BITS_PER_DIGIT: f64 = std::f64::consts::LOG2_10;
const GUARD_BITS: usize = 16;

fn bits_for(digits: u32) -> usize {
    (digits as f64 * BITS_PER_DIGIT).ceil() as usize + GUARD_BITS
}

/// Extended-precision real number with a fixed number of decimal digits.
#[derive(Clone, Debug)]
pub struct BigReal {
    value: Float,
    digits: u32,
}

impl BigReal {
    fn wrap(value: Float, digits: u32) -> Self {
        let value = value.with_precision(bits_for(digits)).value();
        BigReal { value, digits }
    }

    /// Check a requested precision against [`MIN_DIGITS`].
    pub fn validate_digits(digits: u32) -> Result<()> {
        if digits < MIN_DIGITS {
            return Err(Error::InvalidConfig(format!(
                "precision must be at least {MIN_DIGITS} digits, got {digits}"
            )));
        }
        Ok(())
    }

    pub fn zero(digits: u32) -> Self {
        Self::wrap(Float::ZERO, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::wrap(Float::ONE, digits)
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(x: f64, digits: u32) -> Self {
        let v = Float::try_from(x).expect("BigReal::from_f64 requires a finite value");
        Self::wrap(v, digits)
    }

    pub fn from_i64(x: i64, digits: u32) -> Self {
        Self::wrap(Float::from(x), digits)
    }

    /// Exact conversion of an arbitrary-size unsigned integer (rounded to the precision).
    pub fn from_ubig(x: UBig, digits: u32) -> Self {
        Self::wrap(Float::from(x), digits)
    }

    /// Parse a decimal literal such as `"2.16564899"` or `"4.1e-17"`.
    pub fn parse(s: &str, digits: u32) -> Result<Self> {
        let v: FBig<HalfAway, 10> = s
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("cannot parse {s:?} as a number")))?;
        let bits = bits_for(digits);
        let v = v.with_base_and_precision::<2>(bits).value();
        Ok(Self::wrap(v, digits))
    }

    pub fn pi(digits: u32) -> Self {
        let v = Context::<HalfAway>::new(bits_for(digits)).pi::<2>(None).value();
        Self::wrap(v, digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Change the tracked precision (rounding if it shrinks).
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::wrap(self.value.clone(), digits)
    }

    pub fn is_zero(&self) -> bool {
        self.value == Float::ZERO
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        match self.value.partial_cmp(&Float::ZERO) {
            Some(Ordering::Greater) => 1,
            Some(Ordering::Less) => -1,
            _ => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn sqrt(&self) -> Self {
        BigReal { value: self.value.sqrt(), digits: self.digits }
    }

    pub fn exp(&self) -> Self {
        BigReal { value: self.value.exp(), digits: self.digits }
    }

    /// Natural logarithm; the argument must be positive.
    pub fn ln(&self) -> Self {
        BigReal { value: self.value.ln(), digits: self.digits }
    }

    pub fn powi(&self, k: i64) -> Self {
        BigReal { value: self.value.powi(IBig::from(k)), digits: self.digits }
    }

    /// Nearest `f64` (may be infinite or zero when out of range).
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Conversion to a range-unlimited double-precision representation.
    pub fn to_scaled(&self) -> ScaledReal {
        let f = self.to_f64();
        if f == 0.0 && self.is_zero() {
            return ScaledReal::ZERO;
        }
        if f.is_finite() && f.abs() >= f64::MIN_POSITIVE * 1e16 {
            return ScaledReal::from_f64(f);
        }
        // Out of the comfortable f64 range: go through the logarithm.
        let log_abs = self.abs().ln();
        let split = log_abs.to_f64().trunc();
        let frac = (&log_abs - &BigReal::from_f64(split, self.digits)).exp().to_f64();
        ScaledReal::new(self.signum() as f64 * frac, split)
    }

    /// Scientific notation with `sig` significant digits, e.g. `4.1229323e-17`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return format!("{:.*}e0", sig - 1, 0.0);
        }
        let dec = self.value.clone().with_base_and_precision::<10>(sig).value();
        let repr = dec.repr();
        let mantissa = repr.significand().clone();
        let negative = mantissa < IBig::ZERO;
        let digits = if negative { (-mantissa).to_string() } else { mantissa.to_string() };
        let mut digits = digits.trim_start_matches('0').to_string();
        let exp10 = repr.exponent() + digits.len() as isize - 1;
        while digits.len() < sig {
            digits.push('0');
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&digits[..1]);
        if sig > 1 {
            out.push('.');
            out.push_str(&digits[1..sig]);
        }
        out.push_str(&format!("e{exp10}"));
        out
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().map(|p| p + 1).unwrap_or(self.digits as usize);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let digits = self.digits.max(rhs.digits);
                BigReal { value: &self.value $op &rhs.value, digits }
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
        impl $tr<i64> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                self.$method(&BigReal::from_i64(rhs, self.digits))
            }
        }
        impl $tr<i64> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { value: -self.value.clone(), digits: self.digits }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { value: -self.value, digits: self.digits }
    }
}
