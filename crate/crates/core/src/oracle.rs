//! Reference evaluation of Charlier and Krawtchouk polynomials in extended
//! precision, plus orthogonality and Krawtchouk→Charlier limit checks.
//!
//! The Charlier polynomials are
//!
//! C_n(x; a) = Σ_{k=0}^{n} (−n)_k (−x)_k / k! · (−1/a)^k,
//!
//! a terminating sum whose terms can exceed the result by many orders of
//! magnitude. Every routine therefore adds guard digits sized from the
//! largest term (estimated in double-precision logarithms) on top of the
//! requested precision.

use dashu_int::UBig;

use crate::bigreal::BigReal;
use crate::error::{Error, Result};

/// Degree `n` and Charlier parameter `a > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    pub n: u32,
    pub a: f64,
}

impl Params {
    pub fn new(n: u32, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Domain(format!("the Charlier parameter must be positive and finite, got {a}")));
        }
        Ok(Params { n, a })
    }

    pub fn nf(&self) -> f64 {
        self.n as f64
    }
}

/// Scaled variables used when a Krawtchouk polynomial approximates a
/// Charlier polynomial: p = a/N, ε = 1/N, y = εx, z = εn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KrawtchoukScaling {
    pub big_n: u64,
    pub p: f64,
    pub q: f64,
    pub epsilon: f64,
    pub y: f64,
    pub z: f64,
}

impl KrawtchoukScaling {
    pub fn new(n: u32, x: f64, p: f64, big_n: u64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
        }
        if big_n == 0 {
            return Err(Error::Domain("N must be positive".into()));
        }
        let epsilon = 1.0 / big_n as f64;
        Ok(KrawtchoukScaling { big_n, p, q: 1.0 - p, epsilon, y: x * epsilon, z: n as f64 * epsilon })
    }

    /// Scaling matching C_n(x; a): p = a/N.
    pub fn for_charlier(params: Params, x: f64, big_n: u64) -> Result<Self> {
        Self::new(params.n, x, params.a / big_n as f64, big_n)
    }

    /// Whether (y, z) lies in the unit square where the uniform scaling applies.
    pub fn in_unit_scaling(&self) -> bool {
        (0.0..=1.0).contains(&self.y) && (0.0..=1.0).contains(&self.z)
    }
}

/// log10 of the largest term of a terminating ₂F₀/₂F₁-type sum with term
/// ratio |(n−k)(k−x)| / ((k+1)·|d_k|), where d_k is supplied by the caller.
fn max_term_log10(n: u32, x: f64, denom: impl Fn(u32) -> f64) -> f64 {
    let mut log_term = 0.0f64;
    let mut best = 0.0f64;
    for k in 0..n {
        let factor = (n - k) as f64 * (k as f64 - x).abs() / ((k + 1) as f64 * denom(k));
        if factor == 0.0 {
            break;
        }
        log_term += factor.log10();
        best = best.max(log_term);
    }
    best
}

fn guard_digits(max_log10: f64) -> u32 {
    max_log10.max(0.0).ceil() as u32 + 10
}

/// C_n(x) by the hypergeometric sum at `digits` significant digits.
pub fn charlier_sum(params: Params, x: f64, digits: u32) -> Result<BigReal> {
    BigReal::validate_digits(digits)?;
    Ok(charlier_sum_at(params, &BigReal::from_f64(x, digits), digits))
}

/// As [`charlier_sum`], for an extended-precision abscissa.
pub fn charlier_sum_at(params: Params, x: &BigReal, digits: u32) -> BigReal {
    let n = params.n;
    let guard = guard_digits(max_term_log10(n, x.to_f64(), |_| params.a));
    let work = digits + guard;
    let x = x.with_digits(work);
    let a = BigReal::from_f64(params.a, work);
    let mut sum = BigReal::one(work);
    let mut term = BigReal::one(work);
    for k in 0..n as i64 {
        // t_{k+1} = t_k (k−n)(k−x) / ((k+1)(−a))
        let num = &(&BigReal::from_i64(k, work) - &x) * (k - n as i64);
        term = &(&term * &num) / &(&a * (-(k + 1)));
        sum = &sum + &term;
    }
    sum.with_digits(digits)
}

/// C_n(x) by the three-term recurrence
/// a C_{k+1} = (k + a − x) C_k − k C_{k−1}, C_0 = 1, C_1 = 1 − x/a.
pub fn charlier_recurrence(params: Params, x: f64, digits: u32) -> Result<BigReal> {
    BigReal::validate_digits(digits)?;
    Ok(charlier_recurrence_at(params, &BigReal::from_f64(x, digits), digits))
}

/// As [`charlier_recurrence`], for an extended-precision abscissa.
pub fn charlier_recurrence_at(params: Params, x: &BigReal, digits: u32) -> BigReal {
    let guard = guard_digits(max_term_log10(params.n, x.to_f64(), |_| params.a));
    let work = digits + guard;
    let x = x.with_digits(work);
    let a = BigReal::from_f64(params.a, work);
    let mut prev = BigReal::one(work);
    if params.n == 0 {
        return prev.with_digits(digits);
    }
    let mut cur = &(&a - &x) / &a;
    for k in 1..params.n as i64 {
        let kb = BigReal::from_i64(k, work);
        let next = &(&(&(&(&kb + &a) - &x) * &cur) - &(&kb * &prev)) / &a;
        prev = cur;
        cur = next;
    }
    cur.with_digits(digits)
}

fn check_krawtchouk_args(n: u32, p: f64, big_n: u64) -> Result<()> {
    if n as u64 > big_n {
        return Err(Error::Domain(format!("Krawtchouk degree {n} exceeds N = {big_n}")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    Ok(())
}

/// K_n(x; p, N) = Σ_{k=0}^{n} (−n)_k (−x)_k / ((−N)_k k!) · p^{−k}.
pub fn krawtchouk(n: u32, x: f64, p: f64, big_n: u64, digits: u32) -> Result<BigReal> {
    BigReal::validate_digits(digits)?;
    check_krawtchouk_args(n, p, big_n)?;
    let pb = BigReal::from_f64(p, digits);
    Ok(krawtchouk_at(n, &BigReal::from_f64(x, digits), &pb, big_n, digits))
}

/// As [`krawtchouk`] with an extended-precision p (e.g. exactly a/N).
pub fn krawtchouk_at(n: u32, x: &BigReal, p: &BigReal, big_n: u64, digits: u32) -> BigReal {
    let pf = p.to_f64();
    let guard = guard_digits(max_term_log10(n, x.to_f64(), |k| (big_n - k as u64) as f64 * pf));
    let work = digits + guard;
    let x = x.with_digits(work);
    let p = p.with_digits(work);
    let big_n = big_n as i64;
    let mut sum = BigReal::one(work);
    let mut term = BigReal::one(work);
    for k in 0..n as i64 {
        // t_{k+1} = t_k (k−n)(k−x) / ((k−N)(k+1) p)
        let num = &(&BigReal::from_i64(k, work) - &x) * (k - n as i64);
        term = &(&term * &num) / &(&p * ((k - big_n) * (k + 1)));
        sum = &sum + &term;
    }
    sum.with_digits(digits)
}

/// Exact binomial coefficient.
pub fn binomial(big_n: u64, k: u64) -> UBig {
    let k = k.min(big_n - k.min(big_n));
    let mut b = UBig::ONE;
    for i in 0..k {
        b = b * UBig::from(big_n - i) / UBig::from(i + 1);
    }
    b
}

/// k_n(x) = (−p)^n binom(N, n) K_n(x; p, N), binomial taken exactly.
pub fn scaled_krawtchouk(n: u32, x: f64, p: f64, big_n: u64, digits: u32) -> Result<BigReal> {
    let k = krawtchouk(n, x, p, big_n, digits)?;
    let pb = -BigReal::from_f64(p, digits);
    let binom = BigReal::from_ubig(binomial(big_n, n as u64), digits);
    Ok(&(&pb.powi(n as i64) * &binom) * &k)
}

/// Squared norm a^{−n} e^a n! of C_n under the Poisson weight.
fn norm(n: u32, a: &BigReal) -> BigReal {
    let digits = a.digits();
    let mut fact = BigReal::one(digits);
    for k in 2..=n as i64 {
        fact = &fact * k;
    }
    &(&a.exp() * &fact) / &a.powi(n as i64)
}

/// Matrix of orthogonality defects for all degrees 0..=max_degree:
/// |Σ_{j=0}^{j_max} a^j/j! C_n(j) C_m(j) − δ_{nm} h_n| / h_n with h_n = a^{−n} e^a n!.
pub fn orthogonality_matrix(max_degree: u32, a: f64, j_max: u32, digits: u32) -> Result<Vec<Vec<f64>>> {
    BigReal::validate_digits(digits)?;
    Params::new(max_degree, a)?;
    let work = digits + 20;
    let ab = BigReal::from_f64(a, work);
    let size = max_degree as usize + 1;
    let mut sums = vec![vec![BigReal::zero(work); size]; size];
    let mut weight = BigReal::one(work); // a^j / j!
    for j in 0..=j_max as i64 {
        if j > 0 {
            weight = &(&weight * &ab) / j;
        }
        let values = recurrence_table(max_degree, &ab, j, work);
        for n in 0..size {
            let wn = &weight * &values[n];
            for m in n..size {
                sums[n][m] = &sums[n][m] + &(&wn * &values[m]);
            }
        }
    }
    let mut out = vec![vec![0.0; size]; size];
    for n in 0..size {
        let h = norm(n as u32, &ab);
        for m in n..size {
            let mut s = sums[n][m].clone();
            if n == m {
                s = &s - &h;
            }
            let d = (&s / &h).abs().to_f64();
            out[n][m] = d;
            out[m][n] = d;
        }
    }
    Ok(out)
}

/// C_0(j), …, C_{max_degree}(j) at an integer abscissa.
fn recurrence_table(max_degree: u32, a: &BigReal, j: i64, work: u32) -> Vec<BigReal> {
    let x = BigReal::from_i64(j, work);
    let mut values = Vec::with_capacity(max_degree as usize + 1);
    values.push(BigReal::one(work));
    if max_degree == 0 {
        return values;
    }
    values.push(&(a - &x) / a);
    for k in 1..max_degree as i64 {
        let kb = BigReal::from_i64(k, work);
        let next = &(&(&(&(&kb + a) - &x) * &values[k as usize]) - &(&kb * &values[k as usize - 1])) / a;
        values.push(next);
    }
    values
}

/// Orthogonality defect for a single pair (n, m).
pub fn orthogonality_defect(n: u32, m: u32, a: f64, j_max: u32, digits: u32) -> Result<f64> {
    let matrix = orthogonality_matrix(n.max(m), a, j_max, digits)?;
    Ok(matrix[n as usize][m as usize])
}

/// |K_n(x; a/N, N) − C_n(x; a)|, the error of the Krawtchouk→Charlier limit.
pub fn limit_error(n: u32, x: f64, a: f64, big_n: u64, digits: u32) -> Result<f64> {
    Ok(limit_point(n, x, a, big_n, digits)?.1)
}

/// (K_n(x; a/N, N), |K − C|) for one N.
pub fn limit_point(n: u32, x: f64, a: f64, big_n: u64, digits: u32) -> Result<(BigReal, f64)> {
    BigReal::validate_digits(digits)?;
    let params = Params::new(n, a)?;
    if big_n < 10 * n as u64 || big_n == 0 {
        return Err(Error::Domain(format!("N must be at least 10n = {}, got {big_n}", 10 * n)));
    }
    let p = &BigReal::from_f64(a, digits + 10) / &BigReal::from_i64(big_n as i64, digits + 10);
    if !(p.to_f64() < 1.0) {
        return Err(Error::Domain(format!("a/N must be below 1, got {}", p.to_f64())));
    }
    let xb = BigReal::from_f64(x, digits);
    let k = krawtchouk_at(n, &xb, &p, big_n, digits);
    let c = charlier_sum_at(params, &xb, digits);
    let err = (&k - &c).abs().to_f64();
    Ok((k, err))
}
