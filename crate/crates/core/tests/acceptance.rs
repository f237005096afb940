//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness and exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use charlier::asym::{
    discriminant, f1, f10, f2, f3, f3_complex, f4, f4_complex, f5, f6, f7, turning_points, Formula, ScaledCoordinate,
};
use charlier::largen::{g10, g10_residue, g11, g7, g9};
use charlier::oracle::{charlier_recurrence, charlier_sum, limit_error, orthogonality_matrix, Params};
use charlier::specfun::{airy, hermite, pcf_d, SpecFunConfig};
use charlier::zeros::{approximate_zeros, exact_zeros, ZeroKind};
use charlier::ScaledReal;
use rand::{rngs::StdRng, Rng, SeedableRng};

const TABLE_N: u32 = 25;
const TABLE_A: f64 = 2.16564899;
/// Seven significant digits.
const APPROX_ZERO_TOL: f64 = 5e-7;
const APPROX_ZERO_BUDGET: Duration = Duration::from_secs(5);
/// Six significant digits.
const EXACT_ZERO_TOL: f64 = 5e-6;
const EXACT_ZERO_BUDGET: Duration = Duration::from_secs(60);
const ORTHOGONALITY_TOL: f64 = 1e-10;
const ORTHOGONALITY_BUDGET: Duration = Duration::from_secs(30);
const LIMIT_RATIO: (f64, f64) = (0.4, 0.6);
const EXACTNESS_TOL: f64 = 1e-14;
const REGION_TOL: f64 = 0.05;
const LARGE_N_TOL: f64 = 0.05;
const G10_RESIDUE_TOL: f64 = 1e-10;
const RECURRENCE_DIGITS_TOL: f64 = 1e-25;
const WRONSKIAN_TOL: f64 = 1e-8;
const PCF_HERMITE_TOL: f64 = 1e-8;
/// Absolute floor for the D_n/Hermite comparison at zeros of H_n.
const PCF_HERMITE_FLOOR: f64 = 1e-14;
const CONJUGACY_TOL: f64 = 1e-10;
const DIGITS: u32 = 60;

/// (kind, index, approximate, exact) rows of the classical zero table.
const TABLE: [(&str, i64, f64, f64); 25] = [
    ("first", 0, 0.41549221e-16, 0.41229323e-16),
    ("j", 1, 1.0000000, 1.0000000),
    ("j", 2, 2.0000000, 2.0000000),
    ("j", 3, 3.0000001, 3.0000000),
    ("j", 4, 4.0000009, 4.0000000),
    ("j", 5, 5.0000073, 5.0000001),
    ("j", 6, 6.0000507, 6.0000015),
    ("j", 7, 7.0003063, 7.0000227),
    ("j", 8, 8.0015785, 8.0002574),
    ("j", 9, 9.0068260, 9.0021153),
    ("j", 10, 10.024179, 10.012329),
    ("j", 11, 11.067497, 11.050278),
    ("j", 12, 12.137242, 12.147166),
    ("l", 11, 13.334295, 13.330606),
    ("l", 10, 14.560867, 14.615276),
    ("l", 9, 15.899727, 16.007976),
    ("l", 8, 17.350792, 17.514470),
    ("l", 7, 18.921714, 19.142918),
    ("l", 6, 20.626110, 20.905595),
    ("l", 5, 22.484600, 22.820702),
    ("l", 4, 24.527911, 24.915443),
    ("l", 3, 26.803591, 27.232157),
    ("l", 2, 29.391394, 29.842164),
    ("l", 1, 32.446240, 32.883964),
    ("l", 0, 36.379078, 36.717784),
];

type Outcome = Result<String, String>;

fn rel(x: f64, reference: f64) -> f64 {
    ((x - reference) / reference).abs()
}

fn oracle(params: Params, x: f64) -> ScaledReal {
    charlier_sum(params, x, DIGITS).expect("oracle").to_scaled()
}

fn table_approx_column() -> Outcome {
    let params = Params::new(TABLE_N, TABLE_A).unwrap();
    let start = Instant::now();
    let approx = approximate_zeros(params).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if approx.len() != TABLE.len() {
        return Err(format!("{} approximations, expected {}", approx.len(), TABLE.len()));
    }
    let mut worst = 0.0f64;
    for ((kind, x), &(tk, idx, expected, _)) in approx.iter().zip(TABLE.iter()) {
        let kind_ok = match kind {
            ZeroKind::First => tk == "first",
            ZeroKind::NearInteger(j) => tk == "j" && *j as i64 == idx,
            ZeroKind::Nontrivial(l) => tk == "l" && *l == idx,
            ZeroKind::Exact => false,
        };
        if !kind_ok {
            return Err(format!("row {tk}{idx} produced by {kind}"));
        }
        worst = worst.max(rel(*x, expected));
    }
    let detail = format!("max rel err {worst:.2e} (tol {APPROX_ZERO_TOL:e}), {elapsed:?}");
    if worst <= APPROX_ZERO_TOL && elapsed <= APPROX_ZERO_BUDGET {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn table_exact_column() -> Outcome {
    let params = Params::new(TABLE_N, TABLE_A).unwrap();
    let start = Instant::now();
    let zeros = exact_zeros(params, DIGITS).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if zeros.len() != TABLE.len() {
        return Err(format!("{} exact zeros, expected {}", zeros.len(), TABLE.len()));
    }
    let worst = zeros
        .iter()
        .zip(TABLE.iter())
        .map(|(z, row)| rel(z.to_f64(), row.3))
        .fold(0.0, f64::max);
    let detail = format!("max rel err {worst:.2e} (tol {EXACT_ZERO_TOL:e}), {elapsed:?}");
    if worst <= EXACT_ZERO_TOL && elapsed <= EXACT_ZERO_BUDGET {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn orthogonality() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for a in [0.5, 2.0, 5.0] {
        let m = orthogonality_matrix(20, a, 200, DIGITS).map_err(|e| e.to_string())?;
        worst = m.iter().flatten().copied().fold(worst, f64::max);
    }
    let elapsed = start.elapsed();
    let detail = format!("max defect {worst:.2e} (tol {ORTHOGONALITY_TOL:e}), {elapsed:?}");
    if worst <= ORTHOGONALITY_TOL && elapsed <= ORTHOGONALITY_BUDGET {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn limit_relation() -> Outcome {
    let errs: Vec<f64> = [1000u64, 2000, 4000, 8000]
        .iter()
        .map(|&big_n| limit_error(5, 3.7, 2.0, big_n, DIGITS))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let ratios: Vec<f64> = errs.windows(2).map(|w| w[1] / w[0]).collect();
    let detail = format!("ratios {ratios:.4?}");
    if ratios.iter().all(|r| (LIMIT_RATIO.0..=LIMIT_RATIO.1).contains(r)) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn exactness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a = rng.gen_range(0.05..100.0);
        let x = rng.gen_range(-50.0..150.0);
        for n in [0u32, 1] {
            let params = Params::new(n, a).unwrap();
            let exact = oracle(params, x);
            let eta = ScaledCoordinate::eta_of_x(params, x);
            worst = worst.max(f1(params, x).rel_err(&exact)).max(f2(params, eta).rel_err(&exact));
        }
    }
    let detail = format!("max rel err {worst:.2e} over 100 random (a, x) (tol {EXACTNESS_TOL:e})");
    if worst <= EXACTNESS_TOL {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Max |F/C − 1| over a probe set.
fn max_err(params: Params, xs: &[f64], f: &dyn Fn(Params, f64) -> charlier::Result<ScaledReal>) -> Result<f64, String> {
    xs.iter().try_fold(0.0f64, |acc, &x| {
        let v = f(params, x).map_err(|e| format!("x={x}: {e}"))?;
        Ok(acc.max(v.rel_err(&oracle(params, x))))
    })
}

/// Probe sets at degree n (a is chosen per formula).
fn region_errors(n: u32) -> Result<Vec<(Formula, f64)>, String> {
    let cfg = SpecFunConfig::default();
    let nf = n as f64;
    let mut out = Vec::new();

    let p3 = Params::new(n, 50.165184 * nf / 30.0).unwrap();
    let xm = turning_points(p3).x_minus;
    let xs: Vec<f64> = [0.0, 0.2, 0.4, 0.6, 0.8].iter().map(|t| t * xm).collect();
    out.push((Formula::F3, max_err(p3, &xs, &f3)?));

    let p = Params::new(n, 2.165184).unwrap();
    let tp = turning_points(p);
    let xs: Vec<f64> = [1.1, 1.2, 1.3, 1.4, 1.5].iter().map(|t| t * tp.x_plus).collect();
    out.push((Formula::F4, max_err(p, &xs, &f4)?));

    let small_x = [0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0];
    out.push((Formula::F5, max_err(p, &small_x, &f5)?));
    let p6 = Params::new(n, nf + 0.165184).unwrap();
    out.push((Formula::F6, max_err(p6, &small_x, &|q, x| f6(q, x, &cfg))?));

    let xs: Vec<f64> = [0.4, 0.5, 0.6, 0.7, 0.8]
        .iter()
        .map(|t| t * tp.x_minus)
        .filter(|x| (x.fract() - 0.5).abs() > 0.1)
        .collect();
    out.push((Formula::F7, max_err(p, &xs, &f7)?));

    let xs: Vec<f64> = [0.25, 0.375, 0.5, 0.625, 0.75]
        .iter()
        .map(|t| tp.x_minus + t * tp.width())
        .collect();
    out.push((Formula::F10, max_err(p, &xs, &f10)?));
    Ok(out)
}

fn region_accuracy() -> Outcome {
    let at30 = region_errors(30)?;
    let at60 = region_errors(60)?;
    let mut ok = true;
    let mut parts = Vec::new();
    for ((f, e30), (_, e60)) in at30.iter().zip(at60.iter()) {
        let good = *e30 <= REGION_TOL && e60 < e30;
        ok &= good;
        parts.push(format!("{f} {e30:.3}->{e60:.3}{}", if good { "" } else { " !" }));
    }
    let detail = format!("max |F/C-1| at n=30 -> n=60 (tol {REGION_TOL}): {}", parts.join(", "));
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn large_n_consistency() -> Outcome {
    let cfg = SpecFunConfig::default();
    let p = Params::new(200, 2.165184).unwrap();
    let e = |g: charlier::Result<ScaledReal>, f: charlier::Result<ScaledReal>| -> Result<f64, String> {
        let (g, f) = (g.map_err(|e| e.to_string())?, f.map_err(|e| e.to_string())?);
        Ok(g.rel_err(&f))
    };
    let gaps = [
        ("g7", e(g7(p, 0.2), f7(p, 40.0))?),
        ("g9", e(g9(p, 0.5, &cfg), charlier::asym::f9(p, ScaledCoordinate::x_of_t(p, 0.5), &cfg))?),
        ("g10", e(g10(p, 0.2), f10(p, ScaledCoordinate::x_of_theta(p, 0.2)))?),
        ("g11", e(g11(p, 1.0, &cfg), charlier::asym::f11(p, ScaledCoordinate::x_of_s(p, 1.0), &cfg))?),
    ];
    let residue = [-1.0, -0.3, 0.0, 0.3, 1.0]
        .iter()
        .map(|&t| g10_residue(p, t))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?
        .into_iter()
        .fold(0.0, f64::max);
    let ok = gaps.iter().all(|(_, g)| *g <= LARGE_N_TOL) && residue <= G10_RESIDUE_TOL;
    let parts: Vec<String> = gaps.iter().map(|(name, g)| format!("{name} {g:.3}")).collect();
    let detail = format!(
        "|g/F-1| at n=200 (tol {LARGE_N_TOL}): {}; |g10-(g3+g4)| {residue:.1e} (tol {G10_RESIDUE_TOL:e})",
        parts.join(", ")
    );
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn property_suite() -> Outcome {
    let cfg = SpecFunConfig::default();
    let mut failures = Vec::new();

    let p = Params::new(30, 2.165184).unwrap();
    let tp = turning_points(p);
    if [tp.x_minus, tp.x_plus]
        .iter()
        .any(|&x| discriminant(p, x).delta.norm_sqr() > 1e-12 * tp.x_plus * tp.x_plus)
    {
        failures.push("discriminant at turning points");
    }

    let mut conj = 0.0f64;
    for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let x = tp.x_minus + t * tp.width();
        let (g3, g4) = (f3_complex(p, x).unwrap(), f4_complex(p, x).unwrap());
        conj = conj.max(g3.rel_diff(&g4.conj()));
        if f10(p, x).is_err() {
            failures.push("F10 not real");
        }
    }
    if conj > CONJUGACY_TOL {
        failures.push("F3/F4 conjugacy");
    }

    let mut pcf = 0.0f64;
    for n in 0..=10u32 {
        for u in [-5.0f64, -3.3, -1.2, 0.0, 0.7, 2.5, 4.0, 5.0] {
            let expected = 2f64.powf(-(n as f64) / 2.0) * (-u * u / 4.0).exp() * hermite(n, u / 2f64.sqrt());
            let d = pcf_d(n as f64, u, &cfg).unwrap();
            pcf = pcf.max((d - expected).abs() / (PCF_HERMITE_TOL * expected.abs() + PCF_HERMITE_FLOOR));
        }
    }
    if pcf > 1.0 {
        failures.push("D_n vs Hermite");
    }

    let mut wronskian = 0.0f64;
    for k in -20..=20 {
        let v = airy(k as f64 * 0.25, &cfg).unwrap();
        wronskian = wronskian.max((v.ai * v.bi_prime - v.ai_prime * v.bi - 1.0 / PI).abs());
    }
    if wronskian > WRONSKIAN_TOL {
        failures.push("Airy Wronskian");
    }

    let mut cross = 0.0f64;
    for (n, a, x) in [(25u32, TABLE_A, 13.3), (40, 0.7, 55.5), (12, 9.0, -4.25), (30, 50.165184, 1.5)] {
        let params = Params::new(n, a).unwrap();
        let s = charlier_sum(params, x, DIGITS).unwrap();
        let r = charlier_recurrence(params, x, DIGITS).unwrap();
        cross = cross.max((&s - &r).abs().to_f64() / s.abs().to_f64());
    }
    if cross > RECURRENCE_DIGITS_TOL {
        failures.push("sum vs recurrence");
    }

    let mut counts_ok = true;
    for n in 1..=25u32 {
        match exact_zeros(Params::new(n, TABLE_A).unwrap(), DIGITS) {
            Ok(z) if z.len() == n as usize => {}
            _ => counts_ok = false,
        }
    }
    if !counts_ok {
        failures.push("zero counts");
    }

    let detail = format!(
        "conj {conj:.1e}, D_n/He {pcf:.2} of tol, Wronskian {wronskian:.1e}, sum/rec {cross:.1e}, zero counts n<=25 {}",
        if counts_ok { "ok" } else { "bad" }
    );
    if failures.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; failed: {}", failures.join(", ")))
    }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 8] = [
        (1, "zero table, approximate column", table_approx_column),
        (2, "zero table, exact column", table_exact_column),
        (3, "orthogonality", orthogonality),
        (4, "Krawtchouk limit relation", limit_relation),
        (5, "exactness of F1/F2 for n <= 1", exactness),
        (6, "region-interior accuracy", region_accuracy),
        (7, "large-n reduced forms", large_n_consistency),
        (8, "property suite", property_suite),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {id}: PASS - {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id}: FAIL - {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
