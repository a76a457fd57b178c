//! Canonical products over real zero sets, evaluated as symmetric
//! truncation limits.
//!
//! For zeros `{b_n}` the product is `prod_{|b_n| <= r} (1 - z/b_n)`, with an
//! extra factor `z` (and `0` excluded from the product) when the origin is a
//! zero. Truncated-infinite inputs are evaluated on the radius schedule
//! `r_j = r0 * 2^j` and the level values are extrapolated in `1/r`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::zeros::ZeroSequence;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProductError {
    #[error("canonical product at z={z} did not settle: estimate {value}, relative spread {spread:.3e} over {levels} radius levels")]
    NonConvergent {
        z: Complex64,
        value: Complex64,
        spread: f64,
        levels: usize,
    },
    #[error("canonical product at z={z}: only {levels} usable radius levels below the data coverage radius {coverage}")]
    InsufficientData { z: Complex64, levels: usize, coverage: f64 },
    #[error("{0} is not a member of the zero sequence")]
    NotAZero(f64),
}

/// Radius schedule for symmetric truncation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationSchedule {
    pub r0: f64,
    /// Maximum number of doublings after `r0`.
    pub doublings: usize,
    /// Highest extrapolation order in `1/r`.
    pub order: usize,
    /// Levels with `r < margin * |z|` are skipped.
    pub margin: f64,
    /// Relative spread of the last two extrapolants accepted as converged.
    pub rel_tol: f64,
}

impl Default for TruncationSchedule {
    fn default() -> Self {
        TruncationSchedule {
            r0: 16.0,
            doublings: 14,
            order: 5,
            margin: 2.0,
            rel_tol: 1e-6,
        }
    }
}

impl TruncationSchedule {
    pub fn radii(&self, coverage: f64) -> Vec<f64> {
        (0..=self.doublings)
            .map(|j| self.r0 * 2f64.powi(j as i32))
            .take_while(|r| *r <= coverage)
            .collect()
    }
}

/// A product value together with its derivative and a truncation error bound
/// (applied to both).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductEstimate {
    pub value: Complex64,
    pub derivative: Complex64,
    /// Absolute error estimate of `value`.
    pub error: f64,
    /// Absolute error estimate of `derivative`.
    pub derivative_error: f64,
    /// Radius of the last level used (infinite for finite zero sets).
    pub radius: f64,
}

impl ProductEstimate {
    pub fn relative_error(&self) -> f64 {
        if self.value.norm() > 0.0 {
            self.error / self.value.norm()
        } else {
            self.error
        }
    }

    pub fn relative_derivative_error(&self) -> f64 {
        if self.derivative.norm() > 0.0 {
            self.derivative_error / self.derivative.norm()
        } else {
            self.derivative_error
        }
    }
}

// Running state of h = phi_k * P_k with the factor of the zero nearest to z
// split off, so h' stays exact at (and near) a zero. The rest is kept both as
// a product and as a sum of logarithms; the latter is what gets extrapolated,
// since its truncation error expands in powers of |z|/r rather than |z|^2/r.
struct Accumulator {
    z: Complex64,
    nearest: Option<f64>,
    rest: Complex64,
    log_rest: Complex64,
    log_deriv: Complex64,
}

impl Accumulator {
    fn new(z: Complex64, nearest: Option<f64>) -> Self {
        Accumulator {
            z,
            nearest,
            rest: Complex64::new(1.0, 0.0),
            log_rest: Complex64::new(0.0, 0.0),
            log_deriv: Complex64::new(0.0, 0.0),
        }
    }

    fn factor(z: Complex64, b: f64) -> (Complex64, Complex64) {
        if b == 0.0 {
            (z, Complex64::new(1.0, 0.0))
        } else {
            (1.0 - z / b, Complex64::new(-1.0 / b, 0.0))
        }
    }

    fn push(&mut self, b: f64) {
        if Some(b) == self.nearest {
            return;
        }
        let (phi, _) = Self::factor(self.z, b);
        self.rest *= phi;
        self.log_rest += phi.ln();
        self.log_deriv += 1.0 / (self.z - b);
    }

    fn nearest_factor(&self) -> (Complex64, Complex64) {
        match self.nearest {
            Some(b) => Self::factor(self.z, b),
            None => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        }
    }
}

/// `(h, h')` from the nearest factor and the rest `exp(log_rest)` with
/// logarithmic derivative `log_deriv`.
fn assemble(
    (phi, dphi): (Complex64, Complex64),
    log_rest: Complex64,
    log_deriv: Complex64,
) -> (Complex64, Complex64) {
    let rest = log_rest.exp();
    (phi * rest, dphi * rest + phi * rest * log_deriv)
}

fn nearest_zero(zeros: &[f64], z: Complex64) -> Option<f64> {
    if zeros.is_empty() {
        return None;
    }
    let i = zeros.partition_point(|b| *b < z.re);
    let mut best: Option<f64> = None;
    for k in [i.wrapping_sub(1), i] {
        if let Some(&b) = zeros.get(k) {
            let closer = match best {
                Some(c) => (z - b).norm() < (z - c).norm(),
                None => true,
            };
            if closer {
                best = Some(b);
            }
        }
    }
    best
}

/// Richardson table for a sequence whose error expands in powers of `1/r`
/// with `r` doubling between entries. Returns the highest-order estimate and
/// the one of the order below it from the same row.
fn extrapolate(levels: &[Complex64], order: usize) -> (Complex64, Complex64) {
    let n = levels.len();
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for (j, v) in levels.iter().enumerate() {
        let mut row = vec![*v];
        for k in 1..=j.min(order) {
            let f = 2f64.powi(k as i32) - 1.0;
            let next = row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / f;
            row.push(next);
        }
        table.push(row);
    }
    let last = &table[n - 1];
    let best = *last.last().unwrap();
    let prev = if last.len() >= 2 {
        last[last.len() - 2]
    } else {
        best
    };
    (best, prev)
}

/// Evaluates the canonical product over `zeros` and its derivative at `z`.
///
/// Finite zero sets are multiplied out exactly (error bound 0). Truncated
/// sets use the schedule radii that are at least `margin * |z|` and inside the
/// coverage radius; at least three such levels are needed.
pub fn canonical_product(
    zeros: &ZeroSequence,
    z: Complex64,
    schedule: &TruncationSchedule,
) -> Result<ProductEstimate, ProductError> {
    let values = zeros.values();
    let nearest = nearest_zero(values, z);

    if zeros.is_finite_set() {
        let mut acc = Accumulator::new(z, nearest);
        for &b in values {
            acc.push(b);
        }
        let (phi, dphi) = acc.nearest_factor();
        let value = phi * acc.rest;
        let derivative = dphi * acc.rest + value * acc.log_deriv;
        return Ok(ProductEstimate {
            value,
            derivative,
            error: 0.0,
            derivative_error: 0.0,
            radius: f64::INFINITY,
        });
    }

    let coverage = zeros.coverage_radius();
    let radii: Vec<f64> = schedule
        .radii(coverage)
        .into_iter()
        .filter(|r| *r >= schedule.margin * z.norm())
        .collect();
    if radii.len() < 3 {
        return Err(ProductError::InsufficientData {
            z,
            levels: radii.len(),
            coverage,
        });
    }

    let ordered = zeros.by_modulus();
    let mut acc = Accumulator::new(z, nearest);
    let mut logs = Vec::with_capacity(radii.len());
    let mut ders = Vec::with_capacity(radii.len());
    let mut idx = 0;
    for &r in &radii {
        while idx < ordered.len() && ordered[idx].abs() <= r {
            acc.push(ordered[idx]);
            idx += 1;
        }
        logs.push(acc.log_rest);
        ders.push(acc.log_deriv);
    }

    // the nearest factor is kept at every level; it changes only finitely
    // many truncations and not the limit
    let near = acc.nearest_factor();
    let (log_rest, prev_log) = extrapolate(&logs, schedule.order);
    let (log_deriv, prev_deriv) = extrapolate(&ders, schedule.order);
    let (value, derivative) = assemble(near, log_rest, log_deriv);
    let (prev_v, prev_d) = assemble(near, prev_log, prev_deriv);
    Ok(ProductEstimate {
        value,
        derivative,
        error: (value - prev_v).norm(),
        derivative_error: (derivative - prev_d).norm(),
        radius: *radii.last().unwrap(),
    })
}

/// As [`canonical_product`] but fails when the relative spread exceeds the
/// schedule tolerance.
pub fn canonical_product_checked(
    zeros: &ZeroSequence,
    z: Complex64,
    schedule: &TruncationSchedule,
) -> Result<ProductEstimate, ProductError> {
    let est = canonical_product(zeros, z, schedule)?;
    let spread = est.relative_error();
    if spread > schedule.rel_tol {
        return Err(ProductError::NonConvergent {
            z,
            value: est.value,
            spread,
            levels: schedule.radii(zeros.coverage_radius()).len(),
        });
    }
    Ok(est)
}

/// `h'(x_n)` at a member of the zero set: `(-1/x_n) prod_{m != n} (1 - x_n/b_m)`,
/// or `prod_{m != n}` itself for the origin.
pub fn product_derivative_at_zero(
    zeros: &ZeroSequence,
    x: f64,
    schedule: &TruncationSchedule,
) -> Result<ProductEstimate, ProductError> {
    if zeros
        .values()
        .binary_search_by(|v| v.partial_cmp(&x).unwrap())
        .is_err()
    {
        return Err(ProductError::NotAZero(x));
    }
    canonical_product(zeros, Complex64::new(x, 0.0), schedule)
}
