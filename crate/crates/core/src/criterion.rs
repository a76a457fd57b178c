//! Decision procedure for the spectral characterization of entire operators.
//!
//! Given the spectrum `{b_n}` of the extension with angle 0 and the spectrum
//! `{x_n}` of the extension with angle `gamma`, the operator has a real entire
//! gauge exactly when
//!
//! * (C1) `lim_{r -> inf} sum_{0 < |x_n| <= r} 1/x_n` exists,
//! * (C2) `lim n / x_n^+` and `lim n / x_n^-` exist, are finite and opposite
//!   (positive and negative zeros in order of increasing modulus),
//! * (C3) `sum_n |1 / (h_0(x_n) h_gamma'(x_n))|` converges, where `h_beta` is
//!   the canonical product over the zeros of `s_beta`.
//!
//! Finite inputs satisfy every condition trivially. Truncated inputs get an
//! estimated status, and `fails` is only reported on an explicit lower-bound
//! pattern: tail terms that do not decay, or partial sums drifting at least
//! logarithmically.

use std::f64::consts::LN_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::product::{canonical_product, ProductError, TruncationSchedule};
use crate::zeros::{interlace_check, InterlaceError, ZeroSequence};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CriterionError {
    #[error("spectra do not interlace: violation at ({0}, {1})")]
    InvalidSpectra(f64, f64),
    #[error("invalid criterion configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionConfig {
    /// Absolute spread allowed over the last `c1_window` partial sums.
    pub tol_c1: f64,
    pub c1_window: usize,
    /// Relative gap allowed between the two density limits.
    pub tol_c2: f64,
    /// Cauchy window for the (C3) partial sums.
    pub tol_c3: f64,
    /// Fewest points per side for a (C2) estimate on truncated data.
    pub n_min: usize,
    /// Largest number of (C3) terms evaluated.
    pub max_terms: usize,
    /// A drift of at least `drift_floor * ln 2` per radius doubling (scaled by
    /// the local zero density) counts as divergence.
    pub drift_floor: f64,
    pub schedule: TruncationSchedule,
}

impl Default for CriterionConfig {
    fn default() -> Self {
        CriterionConfig {
            tol_c1: 1e-6,
            c1_window: 4,
            tol_c2: 1e-3,
            tol_c3: 1e-8,
            n_min: 16,
            max_terms: 256,
            drift_floor: 0.1,
            schedule: TruncationSchedule::default(),
        }
    }
}

impl CriterionConfig {
    pub fn validate(&self) -> Result<(), CriterionError> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(CriterionError::InvalidConfig(format!("{name} must be positive, got {v}")))
            }
        };
        positive("tol_c1", self.tol_c1)?;
        positive("tol_c2", self.tol_c2)?;
        positive("tol_c3", self.tol_c3)?;
        positive("drift_floor", self.drift_floor)?;
        positive("schedule.r0", self.schedule.r0)?;
        positive("schedule.rel_tol", self.schedule.rel_tol)?;
        if self.c1_window < 2 || self.n_min < 2 || self.max_terms < 4 || self.schedule.doublings < 1 {
            return Err(CriterionError::InvalidConfig(
                "c1_window, n_min >= 2, max_terms >= 4 and schedule.doublings >= 1 required".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    EntireGaugePresent,
    NotPresent,
    Inconclusive,
}

/// (C1) trace: symmetric partial sums on the radius schedule.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct C1Report {
    pub status: Status,
    /// `(r_j, sum_{0 < |x| <= r_j} 1/x)`.
    pub partial_sums: Vec<(f64, f64)>,
    pub limit: Option<f64>,
    pub note: String,
}

/// One side of the (C2) estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityLimit {
    /// `(n, n / x_n)` samples at `n = N, N/2, N/4, ...`.
    pub samples: Vec<(usize, f64)>,
    pub limit: Option<f64>,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct C2Report {
    pub status: Status,
    pub positive: DensityLimit,
    pub negative: DensityLimit,
    pub gap: Option<f64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct C3Report {
    pub status: Status,
    /// `(x_n, |1/(h_0(x_n) h_gamma'(x_n))|)` in order of increasing modulus.
    pub terms: Vec<(f64, f64)>,
    /// `(r, sum over |x_n| <= r)` on halving radii below the last term.
    pub partial_sums: Vec<(f64, f64)>,
    pub sum: f64,
    /// Power-law decay exponent of the tail terms in `|x_n|`.
    pub decay_exponent: Option<f64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionVerdict {
    pub c1: C1Report,
    pub c2: C2Report,
    pub c3: C3Report,
    pub overall: Overall,
}

/// Richardson table for samples at doubling `n` (error in powers of `1/n`).
/// Returns the extrapolated value and the change from the previous diagonal.
fn richardson(levels: &[f64]) -> (f64, f64) {
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(levels.len());
    for (j, v) in levels.iter().enumerate() {
        let mut row = vec![*v];
        for k in 1..=j.min(4) {
            let f = 2f64.powi(k as i32) - 1.0;
            row.push(row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / f);
        }
        table.push(row);
    }
    let best = *table.last().unwrap().last().unwrap();
    let prev = if table.len() >= 2 {
        *table[table.len() - 2].last().unwrap()
    } else {
        best
    };
    (best, (best - prev).abs())
}

/// True when the last `window` increments of `(r, S, count)` levels all share
/// a sign and each is at least `floor * ln 2` after normalizing by the number
/// of zeros per unit radius in that shell.
fn drifts(levels: &[(f64, f64, usize)], window: usize, floor: f64) -> bool {
    if levels.len() < window + 1 {
        return false;
    }
    let tail = &levels[levels.len() - window - 1..];
    let incs: Vec<f64> = tail
        .windows(2)
        .map(|w| {
            let shell = w[1].2.saturating_sub(w[0].2).max(1) as f64;
            (w[1].1 - w[0].1) * w[1].0 / shell
        })
        .collect();
    let same_sign = incs.iter().all(|d| *d > 0.0) || incs.iter().all(|d| *d < 0.0);
    same_sign && incs.iter().all(|d| d.abs() >= floor * LN_2)
}

pub fn check_c1(zeros: &ZeroSequence, config: &CriterionConfig) -> C1Report {
    let ordered = zeros.by_modulus();
    if zeros.is_finite_set() {
        let total: f64 = ordered.iter().filter(|x| **x != 0.0).map(|x| 1.0 / x).sum();
        return C1Report {
            status: Status::Holds,
            partial_sums: vec![(ordered.last().map_or(0.0, |x| x.abs()), total)],
            limit: Some(total),
            note: "finite zero set: the sum is finite".into(),
        };
    }
    let radii = config.schedule.radii(zeros.coverage_radius());
    let mut levels = Vec::with_capacity(radii.len());
    let (mut idx, mut sum) = (0, 0.0);
    for &r in &radii {
        while idx < ordered.len() && ordered[idx].abs() <= r {
            if ordered[idx] != 0.0 {
                sum += 1.0 / ordered[idx];
            }
            idx += 1;
        }
        levels.push((r, sum, idx));
    }
    let partial_sums: Vec<(f64, f64)> = levels.iter().map(|(r, s, _)| (*r, *s)).collect();
    let k = config.c1_window;
    if levels.len() < k {
        return C1Report {
            status: Status::Inconclusive,
            partial_sums,
            limit: None,
            note: format!("only {} radius levels inside the data, {} needed", levels.len(), k),
        };
    }
    let tail = &levels[levels.len() - k..];
    let (lo, hi) = tail
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (_, s, _)| (lo.min(*s), hi.max(*s)));
    if hi - lo <= config.tol_c1 {
        return C1Report {
            status: Status::Holds,
            partial_sums,
            limit: Some(tail[k - 1].1),
            note: format!("last {k} partial sums within {:.3e}", hi - lo),
        };
    }
    if drifts(&levels, k, config.drift_floor) {
        return C1Report {
            status: Status::Fails,
            partial_sums,
            limit: None,
            note: "monotone logarithmic drift of the partial sums".into(),
        };
    }
    C1Report {
        status: Status::Inconclusive,
        partial_sums,
        limit: None,
        note: format!("last {k} partial sums spread {:.3e}", hi - lo),
    }
}

fn density_limit(side: &[f64], n_min: usize) -> DensityLimit {
    let n = side.len();
    let mut counts = Vec::new();
    let mut m = n;
    while m >= n_min.max(1) {
        counts.push(m);
        m /= 2;
    }
    counts.reverse();
    let samples: Vec<(usize, f64)> = counts.iter().map(|&m| (m, m as f64 / side[m - 1])).collect();
    if samples.len() < 3 {
        return DensityLimit {
            samples,
            limit: None,
            error: f64::INFINITY,
        };
    }
    let values: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let (limit, error) = richardson(&values);
    DensityLimit {
        samples,
        limit: Some(limit),
        error,
    }
}

pub fn check_c2(zeros: &ZeroSequence, config: &CriterionConfig) -> C2Report {
    if zeros.is_finite_set() {
        let zero = DensityLimit {
            samples: vec![],
            limit: Some(0.0),
            error: 0.0,
        };
        return C2Report {
            status: Status::Holds,
            positive: zero.clone(),
            negative: zero,
            gap: Some(0.0),
            note: "finite zero set: both density limits vanish".into(),
        };
    }
    let pos: Vec<f64> = zeros.positive().collect();
    let neg: Vec<f64> = zeros.negative().collect();
    let positive = density_limit(&pos, config.n_min);
    let negative = density_limit(&neg, config.n_min);
    let (Some(lp), Some(ln)) = (positive.limit, negative.limit) else {
        return C2Report {
            status: Status::Inconclusive,
            note: format!(
                "too few zeros for a density estimate ({} positive, {} negative; {} per side needed for three levels)",
                pos.len(),
                neg.len(),
                4 * config.n_min
            ),
            positive,
            negative,
            gap: None,
        };
    };
    let gap = (lp + ln).abs();
    let allowed = config.tol_c2 * (lp.abs() + 1.0);
    let uncertainty = positive.error + negative.error;
    let status = if gap <= allowed {
        Status::Holds
    } else if gap > allowed + 10.0 * uncertainty {
        Status::Fails
    } else {
        Status::Inconclusive
    };
    C2Report {
        status,
        note: format!("gap {gap:.3e}, allowed {allowed:.3e}, extrapolation uncertainty {uncertainty:.3e}"),
        positive,
        negative,
        gap: Some(gap),
    }
}

fn fit_exponent(terms: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = terms
        .iter()
        .filter(|(x, t)| *t > 0.0 && *x != 0.0)
        .map(|(x, t)| (x.abs().ln(), t.ln()))
        .collect();
    if pts.len() < 4 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// `|1 / (h_0(x) h_gamma'(x))|` for a member `x` of `zeros_gamma`.
fn c3_term(
    zeros_gamma: &ZeroSequence,
    zeros_zero: &ZeroSequence,
    x: f64,
    schedule: &TruncationSchedule,
) -> Result<f64, ProductError> {
    let z = Complex64::new(x, 0.0);
    let h0 = canonical_product(zeros_zero, z, schedule)?;
    let hg = canonical_product(zeros_gamma, z, schedule)?;
    for (v, e) in [(h0.value, h0.error), (hg.derivative, hg.derivative_error)] {
        if e > schedule.rel_tol * v.norm() {
            return Err(ProductError::NonConvergent {
                z,
                value: v,
                spread: e / v.norm(),
                levels: 0,
            });
        }
    }
    Ok(1.0 / (h0.value * hg.derivative).norm())
}

pub fn check_c3(zeros_gamma: &ZeroSequence, zeros_zero: &ZeroSequence, config: &CriterionConfig) -> C3Report {
    let ordered = zeros_gamma.by_modulus();
    let finite = zeros_gamma.is_finite_set() && zeros_zero.is_finite_set();
    let limit = if finite {
        ordered.len()
    } else {
        ordered.len().min(config.max_terms)
    };
    let mut terms = Vec::with_capacity(limit);
    let mut stop_note = None;
    for &x in &ordered[..limit] {
        match c3_term(zeros_gamma, zeros_zero, x, &config.schedule) {
            Ok(t) => terms.push((x, t)),
            Err(ProductError::InsufficientData { .. }) if !finite => {
                stop_note = Some(format!("terms stop at |x| = {}: product needs more data", x.abs()));
                break;
            }
            Err(ProductError::NonConvergent { spread, .. }) if !finite && terms.len() >= 8 => {
                stop_note = Some(format!(
                    "terms stop at |x| = {}: product spread {spread:.3e} exceeds the schedule tolerance",
                    x.abs()
                ));
                break;
            }
            Err(e) => {
                return C3Report {
                    status: Status::Inconclusive,
                    sum: terms.iter().map(|t| t.1).sum(),
                    terms,
                    partial_sums: vec![],
                    decay_exponent: None,
                    note: format!("product evaluation failed: {e}"),
                };
            }
        }
    }
    let sum: f64 = terms.iter().map(|t| t.1).sum();
    if finite {
        return C3Report {
            status: Status::Holds,
            partial_sums: vec![(ordered.last().map_or(0.0, |x| x.abs()), sum)],
            terms,
            sum,
            decay_exponent: None,
            note: "finite zero sets: the series is a finite sum".into(),
        };
    }
    if terms.len() < 8 {
        return C3Report {
            status: Status::Inconclusive,
            partial_sums: vec![],
            terms,
            sum,
            decay_exponent: None,
            note: stop_note.unwrap_or_else(|| "fewer than 8 terms".into()),
        };
    }

    // partial sums on radii halving down from the last term
    let r_max = terms.last().unwrap().0.abs();
    let mut radii: Vec<f64> = (0..8).map(|j| r_max / 2f64.powi(j)).collect();
    radii.reverse();
    let mut levels = Vec::new();
    for &r in &radii {
        let inside: Vec<&(f64, f64)> = terms.iter().filter(|(x, _)| x.abs() <= r).collect();
        if !inside.is_empty() {
            levels.push((r, inside.iter().map(|t| t.1).sum::<f64>(), inside.len()));
        }
    }
    let partial_sums: Vec<(f64, f64)> = levels.iter().map(|(r, s, _)| (*r, *s)).collect();
    let tail = &terms[terms.len() / 2..];
    let exponent = fit_exponent(tail);
    let quarter: f64 = terms[3 * terms.len() / 4..].iter().map(|t| t.1).sum();
    let min_tail = tail.iter().map(|t| t.1).fold(f64::INFINITY, f64::min);
    let max_tail = tail.iter().map(|t| t.1).fold(0.0, f64::max);

    let (status, note) = if quarter <= config.tol_c3 * sum.max(1.0) && exponent.is_some_and(|p| p < -1.0) {
        (
            Status::Holds,
            format!("last-quarter contribution {quarter:.3e} within the Cauchy window"),
        )
    } else if exponent.is_some_and(|p| p > -0.05) && min_tail > 0.0 && min_tail >= 0.5 * max_tail {
        (
            Status::Fails,
            format!("tail terms bounded below by {min_tail:.6e}"),
        )
    } else if drifts(&levels, config.c1_window, config.drift_floor) {
        (Status::Fails, "partial sums drift logarithmically".into())
    } else {
        (
            Status::Inconclusive,
            format!("last-quarter contribution {quarter:.3e}, decay exponent {exponent:?}"),
        )
    };
    C3Report {
        status,
        terms,
        partial_sums,
        sum,
        decay_exponent: exponent,
        note: match stop_note {
            Some(s) => format!("{note}; {s}"),
            None => note,
        },
    }
}

/// Runs (C1) and (C2) on `sp_gamma` and (C3) on the pair. `sp0` is the
/// spectrum of the extension with angle 0.
pub fn entire_criterion(
    sp0: &ZeroSequence,
    sp_gamma: &ZeroSequence,
    config: &CriterionConfig,
) -> Result<CriterionVerdict, CriterionError> {
    config.validate()?;
    match interlace_check(sp0, sp_gamma) {
        Ok(i) if !i.interlaced => {
            let (a, b) = i.violation.unwrap_or((f64::NAN, f64::NAN));
            return Err(CriterionError::InvalidSpectra(a, b));
        }
        Ok(_) => {}
        Err(InterlaceError::EmptyWindow) => {
            log::warn!("interlacing of the input spectra cannot be checked: empty window");
        }
    }
    let c1 = check_c1(sp_gamma, config);
    let c2 = check_c2(sp_gamma, config);
    let c3 = check_c3(sp_gamma, sp0, config);
    let statuses = [c1.status, c2.status, c3.status];
    let overall = if statuses.iter().all(|s| *s == Status::Holds) {
        Overall::EntireGaugePresent
    } else if statuses.contains(&Status::Fails) {
        Overall::NotPresent
    } else {
        Overall::Inconclusive
    };
    Ok(CriterionVerdict { c1, c2, c3, overall })
}
