use std::fmt;
use std::str::FromStr;

use super::geometry::turning_points;
use crate::error::{Error, Result};
use crate::oracle::Params;

/// The eleven asymptotic regions of the (n, x) plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl Region {
    pub const ALL: [Region; 11] = [
        Region::I,
        Region::II,
        Region::III,
        Region::IV,
        Region::V,
        Region::VI,
        Region::VII,
        Region::VIII,
        Region::IX,
        Region::X,
        Region::XI,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Region::I => "I",
            Region::II => "II",
            Region::III => "III",
            Region::IV => "IV",
            Region::V => "V",
            Region::VI => "VI",
            Region::VII => "VII",
            Region::VIII => "VIII",
            Region::IX => "IX",
            Region::X => "X",
            Region::XI => "XI",
        }
    }

    /// 1-based index, so that region k is approximated by formula F_k.
    pub fn index(&self) -> u8 {
        Region::ALL.iter().position(|r| r == self).unwrap() as u8 + 1
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Region {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Region::ALL
            .iter()
            .copied()
            .find(|r| r.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Domain(format!("unknown region {s:?}")))
    }
}

/// Constants of the region decision procedure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifierConfig {
    /// Half-width multiplier of the Airy bands and of the n ≈ a window.
    pub kappa: f64,
    /// |x| below which the near-zero regions V/VI apply.
    pub x_small: f64,
    /// Extra width factor w of the Airy bands.
    pub band_scale: f64,
    /// Degrees up to which the exact low-degree forms I/II are recommended.
    pub n_small: u32,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        ClassifierConfig { kappa: 1.5, x_small: 2.0, band_scale: 1.0, n_small: 1 }
    }
}

impl ClassifierConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.kappa > 0.0 && self.x_small >= 0.0 && self.band_scale > 0.0) {
            return Err(Error::InvalidConfig(format!("{self:?}")));
        }
        Ok(())
    }
}

/// Recommended region plus every region whose side conditions hold.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub recommended: Region,
    pub applicable: Vec<Region>,
}

/// Half-widths of the Airy bands around X⁻ and X⁺.
pub fn airy_band_half_widths(params: Params, cfg: &ClassifierConfig) -> (f64, f64) {
    let (n, a) = (params.nf(), params.a);
    if n == 0.0 {
        return (0.0, 0.0);
    }
    let (sn, sa) = (n.sqrt(), a.sqrt());
    let common = cfg.kappa * (a / n).powf(1.0 / 6.0) * cfg.band_scale;
    (common * (sn - sa).abs().powf(2.0 / 3.0), common * (sn + sa).powf(2.0 / 3.0))
}

/// Assign (n, a, x) to a region.
///
/// Priority, highest first: exact low-degree forms, the n ≈ a corner VI, the
/// near-zero region V, the Airy bands (VIII/IX at X⁻, XI at X⁺), then the
/// interiors III, VII, X and IV.
pub fn classify(params: Params, x: f64, cfg: &ClassifierConfig) -> Classification {
    let (n, a) = (params.nf(), params.a);
    let tp = turning_points(params);
    let (band_minus, band_plus) = airy_band_half_widths(params, cfg);
    let near_zero = x.abs() <= cfg.x_small;
    let mut applicable = Vec::new();

    if params.n <= cfg.n_small || n * n <= a {
        applicable.push(Region::I);
        applicable.push(Region::II);
    }
    if near_zero && (n - a).abs() <= cfg.kappa * a.sqrt() {
        applicable.push(Region::VI);
    }
    if near_zero && n > a {
        applicable.push(Region::V);
    }
    if n != a && n > 0.0 && (x - tp.x_minus).abs() <= band_minus {
        applicable.push(if n < a { Region::VIII } else { Region::IX });
    }
    if n > 0.0 && (x - tp.x_plus).abs() <= band_plus {
        applicable.push(Region::XI);
    }
    if x < tp.x_minus && (n < a || x < 0.0) {
        applicable.push(Region::III);
    }
    if n > a && x > 0.0 && x < tp.x_minus {
        applicable.push(Region::VII);
    }
    if tp.contains(x) {
        applicable.push(Region::X);
    }
    if x > tp.x_plus {
        applicable.push(Region::IV);
    }

    let recommended = if params.n <= cfg.n_small {
        Region::I
    } else {
        applicable
            .iter()
            .copied()
            .find(|r| !matches!(r, Region::I | Region::II))
            .unwrap_or(Region::X)
    };
    if !applicable.contains(&recommended) {
        applicable.push(recommended);
    }
    applicable.sort();
    applicable.dedup();
    Classification { recommended, applicable }
}
