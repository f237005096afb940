//! Region geometry, classification and the asymptotic approximations F1–F11.

mod classify;
mod formulas;
mod geometry;

pub use classify::{airy_band_half_widths, classify, Classification, ClassifierConfig, Region};
pub use formulas::{
    evaluate, f1, f10, f11, f2, f3, f3_complex, f4, f4_complex, f5, f6, f7, f8, f9, Formula, IMAG_RESIDUE_TOL,
};
pub use geometry::{discriminant, turning_points, Discriminant, ScaledCoordinate, TurningPoints};
