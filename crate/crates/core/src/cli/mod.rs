//! Batch front end behind the `debranges` binary.
//!
//! Every run produces a [`Report`] (JSON) and optionally a plain table (CSV).
//! Exit codes: 0 entire gauge present (or a successful `space`/`jacobi` run),
//! 1 not present, 2 inconclusive, 3 configuration error, 4 parse error,
//! 5 domain error.

pub mod input;

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::criterion::{entire_criterion, CriterionConfig, CriterionError, Overall};
use crate::entire::EntireFunction;
use crate::jacobi::{
    gauge_identity_check, limit_circle_diagnostic, recurrence_eval, truncated_extension_spectra, JacobiError,
    JacobiMatrix,
};
use crate::space::{DeBrangesSpace, SpaceDescriptor, SpaceError};
use crate::zeros::{interlace_check, ZeroSequence};

use input::{load_descriptor, parse_complex, parse_interval, parse_spectrum, parse_tau, read_text, ExtentChoice, InputError};

pub const EXIT_PRESENT: i32 = 0;
pub const EXIT_NOT_PRESENT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;
pub const EXIT_PARSE: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;

/// Environment variable holding the default output directory.
pub const OUT_DIR_ENV: &str = "DEBRANGES_OUT_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(#[from] InputError),
    #[error("domain error: {0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl From<SpaceError> for CliError {
    fn from(e: SpaceError) -> Self {
        match e {
            SpaceError::InvalidDescriptor(_) | SpaceError::Hermite(_) | SpaceError::Function(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<JacobiError> for CliError {
    fn from(e: JacobiError) -> Self {
        match e {
            JacobiError::InvalidMatrix(_) | JacobiError::OrderTooLarge { .. } => CliError::Config(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<CriterionError> for CliError {
    fn from(e: CriterionError) -> Self {
        match e {
            CriterionError::InvalidConfig(_) => CliError::Config(e.to_string()),
            CriterionError::InvalidSpectra(..) => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "debranges", version, about = "De Branges space models and the entire-operator criterion")]
pub struct Cli {
    /// Directory for report files; nothing is written when unset.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out: Option<PathBuf>,
    /// Format printed on stdout.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide from two extension spectra whether an entire gauge exists.
    Criterion(CriterionArgs),
    /// Operations in a de Branges space.
    Space(SpaceArgs),
    /// Jacobi matrix recurrences, gauges and finite-section spectra.
    Jacobi(JacobiArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroAngle {
    Input,
    Input2,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CriterionArgs {
    /// Spectrum file (CSV or JSON) of the extension with angle 0.
    #[arg(long)]
    pub input: PathBuf,
    /// Spectrum file of the second extension.
    #[arg(long)]
    pub input2: PathBuf,
    /// Which of the two files holds the angle-0 spectrum.
    #[arg(long, value_enum, default_value = "input")]
    pub zero_angle: ZeroAngle,
    /// Extent of spectra whose file does not declare one.
    #[arg(long, value_enum, default_value = "auto")]
    pub extent: ExtentChoice,
    #[command(flatten)]
    pub tol: TolArgs,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
}

#[derive(Args, Debug, Clone, Default, Serialize)]
pub struct TolArgs {
    /// Spread allowed over the last (C1) partial sums, default 1e-6.
    #[arg(long, allow_hyphen_values = true)]
    pub tol_c1: Option<f64>,
    /// Relative gap allowed between the two (C2) density limits, default 1e-3.
    #[arg(long, allow_hyphen_values = true)]
    pub tol_c2: Option<f64>,
    /// Cauchy window for the (C3) partial sums, default 1e-8.
    #[arg(long, allow_hyphen_values = true)]
    pub tol_c3: Option<f64>,
    /// Relative tolerance of the real-line quadrature.
    #[arg(long, allow_hyphen_values = true)]
    pub tol_quad: Option<f64>,
}

#[derive(Args, Debug, Clone, Default, Serialize)]
pub struct ScheduleArgs {
    /// First truncation radius.
    #[arg(long, allow_hyphen_values = true)]
    pub schedule_r0: Option<f64>,
    /// Number of radius doublings.
    #[arg(long)]
    pub schedule_doublings: Option<usize>,
    /// Highest extrapolation order.
    #[arg(long)]
    pub schedule_order: Option<usize>,
    /// Largest number of (C3) terms.
    #[arg(long)]
    pub schedule_max_terms: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceOp {
    /// Hermite-Biehler validation report.
    Hermite,
    /// `k(x, x)` at the sample points.
    KernelDiag,
    /// `k(x, w)` at the sample points.
    Kernel,
    /// Zeros of `s_beta`.
    Spectrum,
    /// `(S_beta - w)^{-1} f` at the sample points.
    Resolvent,
    /// Reconstruct `e` from the kernel at `w`.
    EFromKernel,
    /// Pairings of the xi gauge with the kernel function at `i`.
    Xi,
    /// Search for an angle whose `s_gamma` lies in the space.
    DomainComplement,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SpaceArgs {
    /// Space descriptor: inline JSON or a path.
    #[arg(long)]
    pub space: String,
    #[arg(long, value_enum)]
    pub op: SpaceOp,
    /// Extension angle.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// `a,b` for spectrum scans and sample grids.
    #[arg(long, allow_hyphen_values = true)]
    pub interval: Option<String>,
    /// Real sample points, comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub points: Option<Vec<f64>>,
    /// Complex parameter `re,im` (resolvent point, kernel point or reconstruction point).
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Real seed point for the xi gauge.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<f64>,
    /// Function descriptor (inline JSON or path) the resolvent acts on.
    #[arg(long)]
    pub element: Option<String>,
    /// Relative tolerance of the real-line quadrature.
    #[arg(long, allow_hyphen_values = true)]
    pub tol_quad: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacobiOp {
    /// Polynomials of both kinds and the Wronskian.
    Recurrence,
    /// Coefficient of the second basis vector in the second-kind solution.
    Gauge,
    /// Growth of the square sums at a non-real point.
    LimitCircle,
    /// Finite-section spectra for boundary parameters `tau`.
    Spectra,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct JacobiArgs {
    /// Jacobi matrix descriptor: inline JSON or a path.
    #[arg(long)]
    pub matrix: String,
    #[arg(long, value_enum)]
    pub op: JacobiOp,
    /// Evaluation point `re,im` (default `i`).
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Order; defaults to the `N` of the descriptor.
    #[arg(long)]
    pub n: Option<usize>,
    /// Boundary parameters, comma separated; `inf` drops the last row.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub tau: Option<Vec<String>>,
    /// Orders at which the square sums are recorded.
    #[arg(long, value_delimiter = ',')]
    pub sweep: Option<Vec<usize>>,
}

/// Machine-readable record of one run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub inputs: Value,
    pub config: Value,
    pub results: Value,
    pub diagnostics: Value,
    pub exit_code: i32,
    /// Seconds since the Unix epoch; the only field that varies between
    /// identical runs.
    pub timestamp: u64,
}

/// A report plus the table printed in CSV mode.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub table: Vec<String>,
}

impl Outcome {
    fn new(subcommand: &'static str, inputs: Value, config: Value, results: Value, diagnostics: Value) -> Self {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        Outcome {
            report: Report {
                tool: "debranges",
                version: env!("CARGO_PKG_VERSION"),
                subcommand,
                inputs,
                config,
                results,
                diagnostics,
                exit_code: 0,
                timestamp,
            },
            table: Vec::new(),
        }
    }

    fn with_table(mut self, table: Vec<String>) -> Self {
        self.table = table;
        self
    }

    fn with_exit(mut self, code: i32) -> Self {
        self.report.exit_code = code;
        self
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

fn cval(c: Complex64) -> Value {
    json!([c.re, c.im])
}

fn check_positive(name: &str, v: Option<f64>) -> Result<(), CliError> {
    match v {
        Some(x) if !(x.is_finite() && x > 0.0) => Err(CliError::Config(format!("{name} must be positive, got {x}"))),
        _ => Ok(()),
    }
}

pub fn criterion_config(tol: &TolArgs, schedule: &ScheduleArgs) -> Result<CriterionConfig, CliError> {
    check_positive("--tol-quad", tol.tol_quad)?;
    let mut cfg = CriterionConfig::default();
    if let Some(v) = tol.tol_c1 {
        cfg.tol_c1 = v;
    }
    if let Some(v) = tol.tol_c2 {
        cfg.tol_c2 = v;
    }
    if let Some(v) = tol.tol_c3 {
        cfg.tol_c3 = v;
    }
    if let Some(v) = schedule.schedule_r0 {
        cfg.schedule.r0 = v;
    }
    if let Some(v) = schedule.schedule_doublings {
        cfg.schedule.doublings = v;
    }
    if let Some(v) = schedule.schedule_order {
        if v == 0 {
            return Err(CliError::Config("--schedule-order must be at least 1".into()));
        }
        cfg.schedule.order = v;
    }
    if let Some(v) = schedule.schedule_max_terms {
        cfg.max_terms = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn cmd_criterion(args: &CriterionArgs) -> Result<Outcome, CliError> {
    let cfg = criterion_config(&args.tol, &args.schedule)?;
    let read = |p: &Path| -> Result<_, CliError> {
        let text = read_text(p)?;
        Ok(parse_spectrum(&text, &p.display().to_string(), args.extent, cfg.n_min)?)
    };
    let first = read(&args.input)?;
    let second = read(&args.input2)?;
    let (zero, gamma) = match args.zero_angle {
        ZeroAngle::Input => (first, second),
        ZeroAngle::Input2 => (second, first),
    };
    let interlacing = interlace_check(&zero.sequence, &gamma.sequence).ok();
    let verdict = entire_criterion(&zero.sequence, &gamma.sequence, &cfg)?;
    let code = match verdict.overall {
        Overall::EntireGaugePresent => EXIT_PRESENT,
        Overall::NotPresent => EXIT_NOT_PRESENT,
        Overall::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let table = vec![
        "condition,status".to_string(),
        format!("C1,{}", to_value(&verdict.c1.status).as_str().unwrap_or("")),
        format!("C2,{}", to_value(&verdict.c2.status).as_str().unwrap_or("")),
        format!("C3,{}", to_value(&verdict.c3.status).as_str().unwrap_or("")),
        format!("overall,{}", to_value(&verdict.overall).as_str().unwrap_or("")),
    ];
    Ok(Outcome::new(
        "criterion",
        json!({
            "args": to_value(args),
            "spectrum_zero": to_value(&zero.sequence),
            "spectrum_gamma": to_value(&gamma.sequence),
        }),
        to_value(&cfg),
        json!({
            "overall": to_value(&verdict.overall),
            "c1": to_value(&verdict.c1),
            "c2": to_value(&verdict.c2),
            "c3": to_value(&verdict.c3),
        }),
        json!({
            "extent_source": {"zero": zero.extent_source, "gamma": gamma.extent_source},
            "interlacing": to_value(&interlacing),
        }),
    )
    .with_table(table)
    .with_exit(code))
}

fn sample_points(args: &SpaceArgs, default: &[f64]) -> Result<Vec<f64>, CliError> {
    if let Some(p) = &args.points {
        if p.iter().any(|x| !x.is_finite()) {
            return Err(CliError::Config("sample points must be finite".into()));
        }
        return Ok(p.clone());
    }
    if let Some(iv) = &args.interval {
        let (a, b) = parse_interval(iv)?;
        return Ok((0..=20).map(|k| a + (b - a) * k as f64 / 20.0).collect());
    }
    Ok(default.to_vec())
}

fn row(x: f64, c: Complex64) -> String {
    format!("{x},{},{}", c.re, c.im)
}

pub fn cmd_space(args: &SpaceArgs) -> Result<Outcome, CliError> {
    check_positive("--tol-quad", args.tol_quad)?;
    let descriptor: SpaceDescriptor = load_descriptor(&args.space)?;
    let mut space = DeBrangesSpace::new(descriptor)?;
    if let Some(t) = args.tol_quad {
        let mut q = *space.quadrature();
        q.rel_tol = t;
        space = space.with_quadrature(q);
    }
    let w = args.w.as_deref().map(parse_complex).transpose()?;
    let beta = args.beta.unwrap_or(0.0);
    if !beta.is_finite() {
        return Err(CliError::Config("--beta must be finite".into()));
    }
    let mut table = Vec::new();
    let mut diagnostics = json!({});
    let results = match args.op {
        SpaceOp::Hermite => {
            table.push(format!("margin,{}", space.hermite_biehler().report().margin));
            json!({
                "gamma0": space.gamma0(),
                "validation": to_value(space.hermite_biehler().report()),
            })
        }
        SpaceOp::KernelDiag => {
            let xs = sample_points(args, &[0.0, 0.5, 1.0])?;
            let values: Vec<f64> = xs
                .iter()
                .map(|x| {
                    let z = Complex64::new(*x, 0.0);
                    space.kernel(z, z).re
                })
                .collect();
            table.push("# x,k(x,x)".into());
            table.extend(xs.iter().zip(&values).map(|(x, v)| format!("{x},{v}")));
            json!({"points": xs, "values": values})
        }
        SpaceOp::Kernel => {
            let w = w.ok_or_else(|| CliError::Config("--w is required for kernel".into()))?;
            let xs = sample_points(args, &[-1.0, 0.0, 1.0])?;
            let k = space.kernel_function(w);
            let values: Vec<Complex64> = xs.iter().map(|x| k.eval(Complex64::new(*x, 0.0))).collect();
            table.push("# x,re,im".into());
            table.extend(xs.iter().zip(&values).map(|(x, v)| row(*x, *v)));
            diagnostics = json!({"k_ww": space.kernel(w, w).re});
            json!({"w": cval(w), "points": xs, "values": values.iter().map(|c| cval(*c)).collect::<Vec<_>>()})
        }
        SpaceOp::Spectrum => {
            let zeros = match &args.interval {
                Some(iv) => {
                    let (a, b) = parse_interval(iv)?;
                    space.spectrum(beta, a, b)?
                }
                None => space.full_spectrum(beta)?.ok_or_else(|| {
                    CliError::Config("--interval is required for an infinite-dimensional space".into())
                })?,
            };
            table.extend(zeros.values().iter().map(|x| format!("{x}")));
            json!({"beta": beta, "zeros": to_value(&zeros)})
        }
        SpaceOp::Resolvent => {
            let w = w.ok_or_else(|| CliError::Config("--w is required for resolvent".into()))?;
            let f = match &args.element {
                Some(d) => space.element(load_descriptor::<EntireFunction>(d)?)?,
                None => space.kernel_function(Complex64::new(0.0, 1.0)),
            };
            let r = space.resolvent(beta, w, &f)?;
            let xs = sample_points(args, &[-1.0, 0.0, 1.0])?;
            let values: Vec<Complex64> = xs.iter().map(|x| r.eval(Complex64::new(*x, 0.0))).collect();
            // resolvent identity against a second point
            let w2 = w + Complex64::new(0.5, 0.5);
            let identity = match space.resolvent(beta, w2, &f) {
                Ok(r2) => {
                    let rr = space.resolvent(beta, w, &r2)?;
                    let worst = xs
                        .iter()
                        .map(|x| {
                            let z = Complex64::new(*x, 0.0);
                            (r.eval(z) - r2.eval(z) - (w - w2) * rr.eval(z)).norm()
                        })
                        .fold(0.0, f64::max);
                    json!({"w2": cval(w2), "max_residual": worst})
                }
                Err(e) => json!({"skipped": e.to_string()}),
            };
            diagnostics = json!({"resolvent_identity": identity});
            table.push("# x,re,im".into());
            table.extend(xs.iter().zip(&values).map(|(x, v)| row(*x, *v)));
            json!({
                "beta": beta,
                "w": cval(w),
                "element": to_value(f.function()),
                "points": xs,
                "values": values.iter().map(|c| cval(*c)).collect::<Vec<_>>(),
            })
        }
        SpaceOp::EFromKernel => {
            let w0 = w.unwrap_or(Complex64::new(0.0, 1.0));
            let rec = space.e_from_kernel(w0)?;
            let xs = sample_points(args, &[-2.0, -1.0, 0.0, 1.0, 2.0])?;
            let mut worst: f64 = 0.0;
            table.push("# x,|reconstructed|,|e|".into());
            for x in &xs {
                let (r, e) = (rec.eval_real(*x).norm(), space.e().eval_real(*x).norm());
                worst = worst.max((r - e).abs());
                table.push(format!("{x},{r},{e}"));
            }
            diagnostics = json!({"max_modulus_deviation": worst});
            json!({
                "w0": cval(w0),
                "function": to_value(&rec),
                "coefficients": rec.coefficients().map(|c| c.iter().map(|c| cval(*c)).collect::<Vec<_>>()),
            })
        }
        SpaceOp::Xi => {
            let gamma = args.beta.unwrap_or(PI / 2.0);
            let v = args.v.unwrap_or(0.0);
            let seed = space.xi_seed(gamma, v)?;
            let f = space.kernel_function(Complex64::new(0.0, 1.0));
            let xs = sample_points(args, &[-0.75, 0.25, 1.25])?;
            table.push("# x,re,im".into());
            let mut values = Vec::new();
            for x in &xs {
                let p = space.xi_pairing(&seed, Complex64::new(*x, 0.0), &f)?;
                table.push(row(*x, p));
                values.push(cval(p));
            }
            // conjugation symmetry: xi(conj z) = xi(z)#
            let z = Complex64::new(0.3, 0.7);
            let (a, b) = (space.xi_gauge(&seed, z.conj()), space.xi_gauge(&seed, z).sharp());
            let sym = xs
                .iter()
                .map(|x| {
                    let t = Complex64::new(*x, 0.4);
                    (a.eval(t) - b.eval(t)).norm()
                })
                .fold(0.0, f64::max);
            diagnostics = json!({"conjugation_symmetry_residual": sym});
            json!({"gamma": seed.gamma, "v": seed.v, "beta_v": seed.beta_v, "points": xs, "pairings_with_k_i": values})
        }
        SpaceOp::DomainComplement => {
            let dc = space.domain_orthocomplement(64)?;
            if let Some((g, _)) = &dc.found {
                table.push(format!("{g}"));
            }
            to_value(&dc)
        }
    };
    Ok(Outcome::new(
        "space",
        json!({"args": to_value(args), "space": to_value(space.descriptor())}),
        json!({"quadrature": to_value(space.quadrature())}),
        results,
        diagnostics,
    )
    .with_table(table))
}

pub fn cmd_jacobi(args: &JacobiArgs) -> Result<Outcome, CliError> {
    let matrix: JacobiMatrix = load_descriptor(&args.matrix)?;
    matrix.validate()?;
    let n = args.n.unwrap_or(matrix.n);
    let z = args
        .z
        .as_deref()
        .map(parse_complex)
        .transpose()?
        .unwrap_or(Complex64::new(0.0, 1.0));
    let mut table = Vec::new();
    let mut diagnostics = json!({});
    let results = match args.op {
        JacobiOp::Recurrence => {
            let pair = recurrence_eval(&matrix, z, n)?;
            let worst = (1..=pair.order())
                .map(|k| (pair.wronskian(&matrix, k) - 1.0).norm())
                .fold(0.0, f64::max);
            table.push("# k,P_re,P_im,Q_re,Q_im".into());
            for k in 0..=pair.order() {
                table.push(format!("{k},{},{},{},{}", pair.p[k].re, pair.p[k].im, pair.q[k].re, pair.q[k].im));
            }
            diagnostics = json!({"max_wronskian_deviation": worst});
            json!({
                "z": cval(z),
                "p": pair.p.iter().map(|c| cval(*c)).collect::<Vec<_>>(),
                "q": pair.q.iter().map(|c| cval(*c)).collect::<Vec<_>>(),
            })
        }
        JacobiOp::Gauge => {
            let samples: Vec<Complex64> = [(0.0, 1.0), (1.0, 1.0), (-2.0, 0.5), (3.0, 0.0), (-1.5, -2.0), (10.0, 4.0)]
                .iter()
                .map(|(re, im)| Complex64::new(*re, *im))
                .collect();
            let dev = gauge_identity_check(&matrix, &samples)?;
            table.push(format!("{dev}"));
            json!({
                "max_deviation": dev,
                "expected": 1.0 / matrix.b(1),
                "samples": samples.iter().map(|c| cval(*c)).collect::<Vec<_>>(),
            })
        }
        JacobiOp::LimitCircle => {
            let sweep = args.sweep.clone().unwrap_or_else(|| {
                std::iter::successors(Some(8usize), |k| Some(k * 2))
                    .take_while(|k| *k <= n)
                    .collect()
            });
            let report = limit_circle_diagnostic(&matrix, z, &sweep)?;
            table.push("# N,S_N".into());
            table.extend(report.trace.iter().map(|(n, s)| format!("{n},{s}")));
            to_value(&report)
        }
        JacobiOp::Spectra => {
            let taus: Vec<Option<f64>> = args
                .tau
                .clone()
                .unwrap_or_else(|| vec!["0".into(), "inf".into()])
                .iter()
                .map(|t| parse_tau(t).map_err(CliError::Config))
                .collect::<Result<_, _>>()?;
            let mut spectra: Vec<(Option<f64>, ZeroSequence)> = Vec::new();
            for t in &taus {
                spectra.push((*t, truncated_extension_spectra(&matrix, n, *t)?));
            }
            let label = |t: &Option<f64>| t.map_or("inf".to_string(), |v| v.to_string());
            let mut pairs = Vec::new();
            for i in 0..spectra.len() {
                for j in i + 1..spectra.len() {
                    let r = interlace_check(&spectra[i].1, &spectra[j].1);
                    pairs.push(json!({
                        "taus": [label(&spectra[i].0), label(&spectra[j].0)],
                        "interlaced": r.as_ref().map(|r| r.interlaced).ok(),
                        "detail": r.map(|r| to_value(&r)).unwrap_or_else(|e| json!(e.to_string())),
                    }));
                }
            }
            for (t, s) in &spectra {
                if spectra.len() > 1 {
                    table.push(format!("# tau={}", label(t)));
                }
                table.extend(s.values().iter().map(|x| format!("{x}")));
            }
            diagnostics = json!({"interlacing": pairs});
            json!({
                "N": n,
                "spectra": spectra
                    .iter()
                    .map(|(t, s)| json!({"tau": label(t), "zeros": to_value(s)}))
                    .collect::<Vec<_>>(),
            })
        }
    };
    Ok(Outcome::new(
        "jacobi",
        json!({"args": to_value(args), "matrix": to_value(&matrix)}),
        json!({"N": n}),
        results,
        diagnostics,
    )
    .with_table(table))
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Criterion(a) => cmd_criterion(a),
        Command::Space(a) => cmd_space(a),
        Command::Jacobi(a) => cmd_jacobi(a),
    }
}

fn write_outputs(dir: &Path, outcome: &Outcome, format: Format, report: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Config(format!("cannot write to {}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let stem = outcome.report.subcommand;
    std::fs::write(dir.join(format!("{stem}.json")), report).map_err(io)?;
    if format == Format::Csv {
        let mut csv = outcome.table.join("\n");
        csv.push('\n');
        std::fs::write(dir.join(format!("{stem}.csv")), csv).map_err(io)?;
    }
    Ok(())
}

/// Parses `args`, runs the subcommand, prints the result and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("debranges: {e}");
            return e.exit_code();
        }
    };
    let report = match serde_json::to_string_pretty(&outcome.report) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("debranges: cannot serialize report: {e}");
            return EXIT_CONFIG;
        }
    };
    if let Some(dir) = &cli.out {
        if let Err(e) = write_outputs(dir, &outcome, cli.format, &report) {
            eprintln!("debranges: {e}");
            return e.exit_code();
        }
    }
    let text = match cli.format {
        Format::Json => format!("{report}\n"),
        Format::Csv => outcome.table.iter().map(|l| format!("{l}\n")).collect(),
    };
    // a closed pipe (e.g. `| head`) is not an error of the computation
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    outcome.report.exit_code
}
