//! Zeros of C_n(x; a): exact zeros by extended-precision bracketing, and the
//! closed-form and phase-equation approximations (first zero, near-integer
//! zeros, oscillatory zeros).

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use rayon::prelude::*;

use crate::asym::turning_points;
use crate::bigreal::BigReal;
use crate::error::{Error, Result};
use crate::oracle::{charlier_sum_at, Params};

/// Residual accepted by [`solve_theta`].
pub const THETA_RESIDUAL_TOL: f64 = 1e-12;

/// Which approximation produced a zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroKind {
    /// The exponentially small first zero.
    First,
    /// The zero exponentially close to the integer j.
    NearInteger(u32),
    /// The l-th solution of the phase equation.
    Nontrivial(i64),
    /// An exact zero with no approximation attached (n ≤ a, or unpaired).
    Exact,
}

impl ZeroKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroKind::First => "first",
            ZeroKind::NearInteger(_) => "near_integer",
            ZeroKind::Nontrivial(_) => "nontrivial",
            ZeroKind::Exact => "exact",
        }
    }

    /// j for near-integer zeros, l for nontrivial zeros.
    pub fn index(&self) -> Option<i64> {
        match self {
            ZeroKind::NearInteger(j) => Some(*j as i64),
            ZeroKind::Nontrivial(l) => Some(*l),
            _ => None,
        }
    }
}

impl fmt::Display for ZeroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of a zero table.
#[derive(Clone, Debug)]
pub struct ZeroRecord {
    pub kind: ZeroKind,
    pub exact: Option<BigReal>,
    pub approx: Option<f64>,
    pub rel_err: Option<f64>,
}

impl ZeroRecord {
    fn sort_key(&self) -> f64 {
        self.approx
            .or_else(|| self.exact.as_ref().map(BigReal::to_f64))
            .unwrap_or(f64::NAN)
    }
}

/// A solution of the phase equation for a given l.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaSolution {
    pub l: i64,
    pub theta: f64,
    pub x: f64,
    pub residual: f64,
}

fn require_n_above_a(params: Params, what: &str) -> Result<()> {
    if !(params.nf() > params.a) {
        return Err(Error::Domain(format!(
            "{what} needs n > a, got n = {}, a = {}",
            params.n, params.a
        )));
    }
    Ok(())
}

/// ln of √(2πn)/(n − a) · a^{−n} nⁿ e^{a−n}.
fn first_zero_log_term(params: Params) -> f64 {
    let (n, a) = (params.nf(), params.a);
    0.5 * (2.0 * PI * n).ln() - (n - a).ln() + n * (n / a).ln() + a - n
}

/// The first zero x₀ = 1 / [√(2πn)/(n−a)·a^{−n}nⁿe^{a−n} − ln(n/a − 1)].
pub fn first_zero_approx(params: Params) -> Result<f64> {
    require_n_above_a(params, "the first-zero approximation")?;
    let inv_big = (-first_zero_log_term(params)).exp();
    let log_term = (params.nf() / params.a - 1.0).ln();
    Ok(inv_big / (1.0 - log_term * inv_big))
}

/// Leading form of x₀ for large n: (n − a) e^{n−a} aⁿ n^{−n} / √(2πn).
pub fn first_zero_leading(params: Params) -> Result<f64> {
    require_n_above_a(params, "the first-zero approximation")?;
    Ok((-first_zero_log_term(params)).exp())
}

/// Near-integer zeros x_j = j + exp[−(4/3) a^{−1/4} n^{−1/4} (X⁻ − j)^{3/2}] / (2π), j = 1..⌊X⁻⌋.
pub fn near_integer_zeros(params: Params) -> Result<Vec<(u32, f64)>> {
    require_n_above_a(params, "near-integer zeros")?;
    let (n, a) = (params.nf(), params.a);
    let x_minus = turning_points(params).x_minus;
    let scale = 4.0 / 3.0 * a.powf(-0.25) * n.powf(-0.25);
    Ok((1..=x_minus.floor() as u32)
        .map(|j| {
            let gap = x_minus - j as f64;
            (j, j as f64 + (-scale * gap.powf(1.5)).exp() / (2.0 * PI))
        })
        .collect())
}

/// Left side of the phase equation:
/// √(an)[sin θ (2θ − π) + 2 cos θ] + a[sin 2θ / 2 + θ − π/2] − 3π/4 − πl.
/// It decreases in θ on (−π/2, π/2).
pub fn theta_equation(params: Params, theta: f64, l: i64) -> f64 {
    let (n, a) = (params.nf(), params.a);
    let (s, c) = theta.sin_cos();
    (a * n).sqrt() * (s * (2.0 * theta - PI) + 2.0 * c) + a * ((2.0 * theta).sin() / 2.0 + theta - FRAC_PI_2)
        - 0.75 * PI
        - PI * l as f64
}

/// Upper bound 2√(an) − a − 3/4 on the phase index l.
pub fn theta_index_bound(params: Params) -> f64 {
    2.0 * (params.a * params.nf()).sqrt() - params.a - 0.75
}

/// The admissible phase indices 0..=⌊2√(an) − a − 3/4⌋ (empty when the bound is negative).
pub fn theta_indices(params: Params) -> Vec<i64> {
    let bound = theta_index_bound(params);
    if bound < 0.0 {
        Vec::new()
    } else {
        (0..=bound.floor() as i64).collect()
    }
}

/// Solve the phase equation for θ by bisection and map to x = n + a + 2 sin θ √(an).
pub fn solve_theta(params: Params, l: i64) -> Result<ThetaSolution> {
    let h = |t: f64| theta_equation(params, t, l);
    let (mut lo, mut hi) = (-FRAC_PI_2, FRAC_PI_2);
    if !(h(lo) > 0.0 && h(hi) < 0.0) {
        return Err(Error::NoBracket { l });
    }
    while hi - lo > f64::EPSILON * hi.abs().max(lo.abs()).max(f64::MIN_POSITIVE) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = h(mid);
        if v == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if v > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = if h(lo).abs() <= h(hi).abs() { lo } else { hi };
    let residual = h(theta).abs();
    if residual > THETA_RESIDUAL_TOL {
        return Err(Error::Convergence {
            what: format!("phase equation for l = {l} (residual {residual:e})"),
            terms: 0,
        });
    }
    let x = params.nf() + params.a + 2.0 * theta.sin() * (params.a * params.nf()).sqrt();
    Ok(ThetaSolution { l, theta, x, residual })
}

fn bracket_grid(x_max: f64, geometric_points: usize, step: f64) -> Vec<f64> {
    let (lo, hi) = (1e-25f64, 0.5f64);
    let ratio = (hi / lo).ln() / (geometric_points - 1) as f64;
    let mut grid: Vec<f64> = (0..geometric_points)
        .map(|i| (lo.ln() + ratio * i as f64).exp())
        .collect();
    *grid.last_mut().unwrap() = hi;
    let steps = ((x_max - hi) / step).ceil().max(1.0) as usize;
    grid.extend((1..=steps).map(|k| hi + step * k as f64));
    grid
}

fn bisect(params: Params, mut lo: BigReal, mut hi: BigReal, lo_sign: i32, digits: u32) -> BigReal {
    let tol = BigReal::parse(&format!("1e-{}", digits / 2), digits).expect("valid literal");
    let max_iter = 4 * digits as usize * 4 + 200;
    for _ in 0..max_iter {
        let mid = &(&lo + &hi) / 2;
        let width = &hi - &lo;
        if width <= &tol * &mid.abs() {
            return mid;
        }
        let s = charlier_sum_at(params, &mid, digits).signum();
        if s == 0 {
            return mid;
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    &(&lo + &hi) / 2
}

fn scan(params: Params, grid: &[f64], digits: u32) -> Vec<BigReal> {
    let points: Vec<BigReal> = grid.iter().map(|&x| BigReal::from_f64(x, digits)).collect();
    let signs: Vec<i32> = points
        .par_iter()
        .map(|x| charlier_sum_at(params, x, digits).signum())
        .collect();
    let mut hits: Vec<BigReal> = Vec::new();
    let mut brackets: Vec<(usize, usize)> = Vec::new();
    for i in 0..points.len() {
        if signs[i] == 0 {
            hits.push(points[i].clone());
        } else if i + 1 < points.len() && signs[i + 1] != 0 && signs[i] != signs[i + 1] {
            brackets.push((i, i + 1));
        }
    }
    let mut roots: Vec<BigReal> = brackets
        .par_iter()
        .map(|&(i, j)| bisect(params, points[i].clone(), points[j].clone(), signs[i], digits))
        .collect();
    roots.extend(hits);
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite zeros"));
    roots
}

/// All n zeros of C_n(x; a) on (0, ∞), ascending, each refined to a relative
/// width of 10^{−digits/2}.
///
/// The scan uses 60 geometric points from 1e-25 to 0.5, then a uniform step
/// of 0.05 up to 1.2·X⁺; if fewer than n sign changes are found the grid is
/// refined and extended before giving up.
pub fn exact_zeros(params: Params, digits: u32) -> Result<Vec<BigReal>> {
    BigReal::validate_digits(digits)?;
    let n = params.n as usize;
    if n == 0 {
        return Ok(Vec::new());
    }
    let x_plus = turning_points(params).x_plus;
    let mut found = 0;
    let (mut geometric, mut step, mut x_max) = (60usize, 0.05f64, 1.2 * x_plus);
    for _ in 0..3 {
        let roots = scan(params, &bracket_grid(x_max, geometric, step), digits);
        if roots.len() == n {
            return Ok(roots);
        }
        found = roots.len();
        geometric *= 2;
        step /= 4.0;
        x_max = 1.5 * x_max + 1.0;
    }
    Err(Error::ZeroCount { found, expected: n })
}

/// All approximate zeros for n > a, sorted ascending.
pub fn approximate_zeros(params: Params) -> Result<Vec<(ZeroKind, f64)>> {
    let mut out = vec![(ZeroKind::First, first_zero_approx(params)?)];
    out.extend(
        near_integer_zeros(params)?
            .into_iter()
            .map(|(j, x)| (ZeroKind::NearInteger(j), x)),
    );
    for l in theta_indices(params) {
        let sol = solve_theta(params, l)?;
        out.push((ZeroKind::Nontrivial(l), sol.x));
    }
    out.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(out)
}

/// Pair each approximation with its nearest exact zero. Exact zeros left
/// unclaimed become [`ZeroKind::Exact`] rows.
pub fn pair_zeros(approx: &[(ZeroKind, f64)], exact: &[BigReal]) -> Result<Vec<ZeroRecord>> {
    let exact_f: Vec<f64> = exact.iter().map(BigReal::to_f64).collect();
    let mut claimed = vec![false; exact.len()];
    let mut rows = Vec::with_capacity(exact.len().max(approx.len()));
    for &(kind, x) in approx {
        let nearest = exact_f
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()))
            .map(|(i, _)| i);
        match nearest {
            Some(i) => {
                if claimed[i] {
                    return Err(Error::Pairing { exact: exact_f[i] });
                }
                claimed[i] = true;
                rows.push(ZeroRecord {
                    kind,
                    exact: Some(exact[i].clone()),
                    approx: Some(x),
                    rel_err: Some(((x - exact_f[i]) / exact_f[i]).abs()),
                });
            }
            None => rows.push(ZeroRecord { kind, exact: None, approx: Some(x), rel_err: None }),
        }
    }
    for (i, z) in exact.iter().enumerate() {
        if !claimed[i] {
            rows.push(ZeroRecord { kind: ZeroKind::Exact, exact: Some(z.clone()), approx: None, rel_err: None });
        }
    }
    rows.sort_by(|a, b| a.sort_key().total_cmp(&b.sort_key()));
    Ok(rows)
}

/// Approximate zeros (n > a) paired with exact zeros; for n ≤ a only exact rows.
pub fn zero_table(params: Params, digits: u32) -> Result<Vec<ZeroRecord>> {
    let exact = exact_zeros(params, digits)?;
    let approx = if params.nf() > params.a { approximate_zeros(params)? } else { Vec::new() };
    pair_zeros(&approx, &exact)
}
