//! Command-line interface: point evaluation, sweeps, zero tables and the
//! Krawtchouk limit study. Output is CSV (or JSON for zero tables) with 17
//! significant digits.

use std::io::Write;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::asym::{classify, evaluate, ClassifierConfig, Formula};
use crate::bigreal::BigReal;
use crate::error::Error;
use crate::oracle::{charlier_sum, limit_point, Params};
use crate::scaled::ScaledReal;
use crate::specfun::SpecFunConfig;
use crate::zeros::{zero_table, ZeroRecord};

/// Parameters of the classical zero table.
pub const TABLE1_N: u32 = 25;
pub const TABLE1_A: f64 = 2.16564899;

const SIG_DIGITS: usize = 17;

#[derive(Debug, Parser)]
#[command(name = "charlier", version, about = "Charlier polynomials: exact values, asymptotics and zeros")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate C_n(x; a) at one point.
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// oracle, f1..f11, or auto (classifier-selected formula).
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Significant digits of the extended-precision oracle.
        #[arg(long, default_value_t = 60)]
        digits: u32,
        /// Also print the oracle value and the relative error.
        #[arg(long)]
        check: bool,
    },
    /// Tabulate the oracle and selected formulas on a uniform grid.
    Sweep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Comma-separated list from oracle, f1..f11, auto.
        #[arg(long, value_delimiter = ',', default_value = "auto")]
        formulas: Vec<Method>,
        #[arg(long, default_value_t = 60)]
        digits: u32,
    },
    /// Exact zeros paired with their approximations.
    Zeros {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Convergence of K_n(x; a/N, N) to C_n(x; a) as N grows.
    Limit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Comma-separated list of N values, each at least 10n.
        #[arg(long = "N", value_delimiter = ',', default_value = "1000,2000,4000")]
        big_n: Vec<u64>,
        #[arg(long, default_value_t = 60)]
        digits: u32,
    },
    /// The zero table at n = 25, a = 2.16564899.
    Table1 {
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// An evaluation method: the oracle, a fixed formula, or the classifier's choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Auto,
    Formula(Formula),
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "oracle" => Ok(Method::Oracle),
            "auto" => Ok(Method::Auto),
            other => other
                .parse::<Formula>()
                .map(Method::Formula)
                .map_err(|_| format!("unknown method {s:?}; expected oracle, auto or f1..f11")),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Oracle => f.write_str("oracle"),
            Method::Auto => f.write_str("auto"),
            Method::Formula(x) => write!(f, "{x}"),
        }
    }
}

/// Exit code for a failed command: 2 for bad arguments, 3 for numeric failures.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(e) if !e.is_numeric_failure() => 2,
        Some(_) => 3,
        None => 3,
    }
}

/// Run one command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::Eval { n, a, x, method, digits, check } => {
            cmd_eval(Params::new(*n, *a)?, *x, *method, *digits, *check, out)
        }
        Command::Sweep { n, a, x_min, x_max, steps, formulas, digits } => {
            let spec = SweepSpec::new(Params::new(*n, *a)?, *x_min, *x_max, *steps, formulas.clone(), *digits)?;
            cmd_sweep(&spec, out)
        }
        Command::Zeros { n, a, digits, format } => cmd_zeros(Params::new(*n, *a)?, *digits, *format, out),
        Command::Limit { n, a, x, big_n, digits } => cmd_limit(*n, *a, *x, big_n, *digits, out),
        Command::Table1 { digits, format } => cmd_zeros(Params::new(TABLE1_N, TABLE1_A)?, *digits, *format, out),
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{:.*e}", SIG_DIGITS - 1, x)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

fn oracle_value(params: Params, x: f64, digits: u32) -> crate::error::Result<ScaledReal> {
    Ok(charlier_sum(params, x, digits)?.to_scaled())
}

/// Evaluate one method; returns the value and the formula actually used.
fn evaluate_method(
    params: Params,
    x: f64,
    method: Method,
    digits: u32,
    specfun: &SpecFunConfig,
) -> crate::error::Result<(String, ScaledReal)> {
    match method {
        Method::Oracle => {
            let v = charlier_sum(params, x, digits)?;
            Ok((v.to_sci_string(SIG_DIGITS), v.to_scaled()))
        }
        Method::Formula(f) => evaluate(f, params, x, specfun).map(|v| (v.to_sci_string(), v)),
        Method::Auto => {
            let region = classify(params, x, &ClassifierConfig::default()).recommended;
            evaluate(Formula::for_region(region), params, x, specfun).map(|v| (v.to_sci_string(), v))
        }
    }
}

/// Print `x,value,method,region` (plus `oracle,rel_err` with `check`).
pub fn cmd_eval(params: Params, x: f64, method: Method, digits: u32, check: bool, out: &mut dyn Write) -> anyhow::Result<()> {
    BigReal::validate_digits(digits)?;
    let specfun = SpecFunConfig::default();
    let region = classify(params, x, &ClassifierConfig::default()).recommended;
    let used = match method {
        Method::Auto => Method::Formula(Formula::for_region(region)),
        m => m,
    };
    let (text, value) = evaluate_method(params, x, used, digits, &specfun)?;
    let mut header = String::from("x,value,method,region");
    let mut row = format!("{},{},{},{}", fmt_f64(x), text, used, region);
    if check {
        let reference = oracle_value(params, x, digits)?;
        header.push_str(",oracle,rel_err");
        row.push_str(&format!(",{},{}", reference.to_sci_string(), fmt_f64(value.rel_err(&reference))));
    }
    writeln!(out, "{header}\n{row}")?;
    Ok(())
}

/// A validated sweep request.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub params: Params,
    pub x_min: f64,
    pub x_max: f64,
    pub steps: usize,
    pub formulas: Vec<Method>,
    pub digits: u32,
}

impl SweepSpec {
    pub fn new(params: Params, x_min: f64, x_max: f64, steps: usize, formulas: Vec<Method>, digits: u32) -> crate::error::Result<Self> {
        BigReal::validate_digits(digits)?;
        if steps < 2 {
            return Err(Error::Domain(format!("steps must be at least 2, got {steps}")));
        }
        if !(x_min < x_max) || !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::Domain(format!("need finite x_min < x_max, got {x_min}, {x_max}")));
        }
        let mut unique: Vec<Method> = Vec::new();
        for f in formulas {
            if f != Method::Oracle && !unique.contains(&f) {
                unique.push(f);
            }
        }
        Ok(SweepSpec { params, x_min, x_max, steps, formulas: unique, digits })
    }

    pub fn abscissae(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.x_max
                } else {
                    self.x_min + (self.x_max - self.x_min) * i as f64 / last
                }
            })
            .collect()
    }
}

fn sweep_row(spec: &SweepSpec, x: f64, specfun: &SpecFunConfig) -> String {
    let params = spec.params;
    let mut flags: Vec<String> = Vec::new();
    let oracle = match oracle_value(params, x, spec.digits) {
        Ok(v) => Some(v),
        Err(e) => {
            flags.push(format!("oracle:{}", short_error(&e)));
            None
        }
    };
    let region = classify(params, x, &ClassifierConfig::default()).recommended;
    let mut cells = vec![fmt_f64(x), oracle.map(|v| v.to_sci_string()).unwrap_or_default()];
    for &m in &spec.formulas {
        match evaluate_method(params, x, m, spec.digits, specfun) {
            Ok((text, _)) => cells.push(text),
            Err(e) => {
                flags.push(format!("{m}:{}", short_error(&e)));
                cells.push(String::new());
            }
        }
    }
    let auto = evaluate_method(params, x, Method::Auto, spec.digits, specfun);
    let rel = match (&auto, oracle) {
        (Ok((_, v)), Some(o)) => fmt_f64(v.rel_err(&o)),
        (Err(e), _) if !spec.formulas.contains(&Method::Auto) => {
            flags.push(format!("auto:{}", short_error(e)));
            String::new()
        }
        _ => String::new(),
    };
    cells.push(region.to_string());
    cells.push(rel);
    cells.push(flags.join(";"));
    cells.join(",")
}

fn short_error(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Singular(_) => "singular",
        Error::NotReal { .. } => "not_real",
        Error::Convergence { .. } => "convergence",
        Error::Overflow(_) => "overflow",
        Error::ZeroCount { .. } => "zero_count",
        Error::NoBracket { .. } => "no_bracket",
        Error::Pairing { .. } => "pairing",
        Error::InvalidConfig(_) => "config",
    }
}

/// CSV header and rows for a sweep, computed in parallel and emitted in order.
pub fn cmd_sweep(spec: &SweepSpec, out: &mut dyn Write) -> anyhow::Result<()> {
    let specfun = SpecFunConfig::default();
    let mut header = vec!["x".to_string(), "oracle".to_string()];
    header.extend(spec.formulas.iter().map(|m| m.to_string()));
    header.extend(["recommended_region", "rel_err_auto", "flags"].map(String::from));
    let rows: Vec<String> = spec
        .abscissae()
        .par_iter()
        .map(|&x| sweep_row(spec, x, &specfun))
        .collect();
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonParams {
    n: u32,
    a: f64,
}

#[derive(Serialize)]
struct JsonRow {
    kind: &'static str,
    l_or_j: Option<i64>,
    exact: Option<f64>,
    approx: Option<f64>,
    rel_err: Option<f64>,
}

#[derive(Serialize)]
struct JsonTable {
    params: JsonParams,
    rows: Vec<JsonRow>,
}

/// Render zero records as CSV (`kind,index,exact,approx,rel_err`) or JSON.
pub fn render_zero_table(params: Params, rows: &[ZeroRecord], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Csv => {
            let mut s = String::from("kind,index,exact,approx,rel_err\n");
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.kind,
                    r.kind.index().map(|i| i.to_string()).unwrap_or_default(),
                    r.exact.as_ref().map(|z| z.to_sci_string(SIG_DIGITS)).unwrap_or_default(),
                    fmt_opt(r.approx),
                    fmt_opt(r.rel_err),
                ));
            }
            Ok(s)
        }
        Format::Json => {
            let table = JsonTable {
                params: JsonParams { n: params.n, a: params.a },
                rows: rows
                    .iter()
                    .map(|r| JsonRow {
                        kind: r.kind.as_str(),
                        l_or_j: r.kind.index(),
                        exact: r.exact.as_ref().map(BigReal::to_f64),
                        approx: r.approx,
                        rel_err: r.rel_err,
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&table).context("serialising zero table")?;
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn cmd_zeros(params: Params, digits: u32, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
    let rows = zero_table(params, digits)?;
    out.write_all(render_zero_table(params, &rows, format)?.as_bytes())?;
    Ok(())
}

/// Rows `N,K,abs_err,ratio`, where ratio is the error divided by the previous row's.
pub fn cmd_limit(n: u32, a: f64, x: f64, big_n: &[u64], digits: u32, out: &mut dyn Write) -> anyhow::Result<()> {
    Params::new(n, a)?;
    let points = big_n
        .par_iter()
        .map(|&m| limit_point(n, x, a, m, digits))
        .collect::<crate::error::Result<Vec<_>>>()?;
    writeln!(out, "N,K,abs_err,ratio")?;
    let mut previous: Option<f64> = None;
    for (m, (k, err)) in big_n.iter().zip(points) {
        let ratio = previous.filter(|&p| p > 0.0).map(|p| err / p);
        writeln!(out, "{m},{},{},{}", k.to_sci_string(SIG_DIGITS), fmt_f64(err), fmt_opt(ratio))?;
        previous = Some(err);
    }
    Ok(())
}
