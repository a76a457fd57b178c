//! Weighted integrals over the real line.
//!
//! Composite Gauss-Legendre on fixed-width panels over `[-R, R]`, with the
//! cutoff doubled level by level and the level values extrapolated in `1/R`.
//! For oscillatory integrands the panel width should be a half-period so
//! every cutoff lands on the same phase.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadratureError {
    #[error("integral did not settle by cutoff R={cutoff}: estimate {estimate}, last change {change:.3e}")]
    Inconclusive {
        estimate: Complex64,
        change: f64,
        cutoff: f64,
    },
    #[error("integrand is not finite at x={0}")]
    NonFinite(f64),
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` (Newton iteration on `P_n`).
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Panel width; cutoffs are multiples of it.
    pub panel: f64,
    /// Panels per side at the first level.
    pub base_panels: usize,
    pub max_doublings: usize,
    /// Gauss-Legendre points per panel.
    pub points: usize,
    /// Highest extrapolation order in `1/R`.
    pub order: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            panel: 1.0,
            base_panels: 16,
            max_doublings: 12,
            points: 16,
            order: 4,
            rel_tol: 1e-8,
            abs_tol: 1e-15,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Change between the last two extrapolated estimates.
    pub error: f64,
    pub cutoff: f64,
    pub levels: usize,
}

struct PanelSweep<'a, F> {
    f: F,
    spec: &'a QuadratureSpec,
    rule: Vec<(f64, f64)>,
    done_panels: usize,
    sum: Complex64,
}

impl<'a, F: Fn(f64) -> Complex64> PanelSweep<'a, F> {
    fn new(f: F, spec: &'a QuadratureSpec) -> Self {
        PanelSweep {
            f,
            spec,
            rule: gauss_legendre(spec.points),
            done_panels: 0,
            sum: Complex64::new(0.0, 0.0),
        }
    }

    fn panel(&self, lo: f64) -> Result<Complex64, QuadratureError> {
        let half = 0.5 * self.spec.panel;
        let mid = lo + half;
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in &self.rule {
            let t = mid + half * x;
            let v = (self.f)(t);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(QuadratureError::NonFinite(t));
            }
            acc += *w * v;
        }
        Ok(acc * half)
    }

    /// Integral over `[-n * panel, n * panel]`.
    fn extend_to(&mut self, panels: usize) -> Result<Complex64, QuadratureError> {
        for k in self.done_panels..panels {
            let lo = k as f64 * self.spec.panel;
            self.sum += self.panel(lo)? + self.panel(-lo - self.spec.panel)?;
        }
        self.done_panels = panels.max(self.done_panels);
        Ok(self.sum)
    }
}

/// Raw truncated integrals `(R_j, int_{-R_j}^{R_j} f)` without extrapolation;
/// used for divergence diagnostics.
pub fn partial_integrals<F: Fn(f64) -> Complex64>(
    f: F,
    spec: &QuadratureSpec,
) -> Result<Vec<(f64, Complex64)>, QuadratureError> {
    let mut sweep = PanelSweep::new(f, spec);
    let mut out = Vec::with_capacity(spec.max_doublings + 1);
    for j in 0..=spec.max_doublings {
        let panels = spec.base_panels << j;
        let v = sweep.extend_to(panels)?;
        out.push((panels as f64 * spec.panel, v));
    }
    Ok(out)
}

/// `int_{-inf}^{inf} f(x) dx` by cutoff doubling and extrapolation.
pub fn integrate_real_line<F: Fn(f64) -> Complex64>(
    f: F,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    let mut sweep = PanelSweep::new(f, spec);
    let mut table: Vec<Vec<Complex64>> = Vec::new();
    let mut prev_best: Option<Complex64> = None;
    let mut change = f64::INFINITY;
    let mut best = Complex64::new(0.0, 0.0);
    let mut cutoff = 0.0;
    for j in 0..=spec.max_doublings {
        let panels = spec.base_panels << j;
        cutoff = panels as f64 * spec.panel;
        let v = sweep.extend_to(panels)?;
        let mut row = vec![v];
        for k in 1..=j.min(spec.order) {
            let fac = 2f64.powi(k as i32) - 1.0;
            let next = row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / fac;
            row.push(next);
        }
        best = *row.last().unwrap();
        table.push(row);
        if let Some(p) = prev_best {
            change = (best - p).norm();
            if j >= 2 && change <= spec.rel_tol * best.norm() + spec.abs_tol {
                return Ok(QuadratureResult {
                    value: best,
                    error: change,
                    cutoff,
                    levels: j + 1,
                });
            }
        }
        prev_best = Some(best);
    }
    Err(QuadratureError::Inconclusive {
        estimate: best,
        change,
        cutoff,
    })
}
