//! Real zeros of real-valued functions on an interval: uniform grid scan
//! followed by bisection on every sign change.
//!
//! Functions in the Laguerre-Polya class have no local minimum of `|f|` away
//! from their zeros, so a grid-level minimum without a sign change means two
//! zeros fell between grid points (or a tangency). Such spots are probed once
//! more and, if still unresolved, reported instead of being merged.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
    #[error("function is not finite at x={0}")]
    NonFinite(f64),
    #[error("scan resolution too coarse near {locations:?}; increase the grid density")]
    RefineNeeded { locations: Vec<f64>, roots: Vec<f64> },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Grid points per unit length.
    pub density: f64,
    /// A point counts as a zero when `|f(x)| <= tol * scale(x)`.
    pub tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            density: 64.0,
            tol: 1e-10,
        }
    }
}

fn checked(f: &impl Fn(f64) -> f64, x: f64) -> Result<f64, RootError> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(RootError::NonFinite(x))
    }
}

/// Bisection down to adjacent floating point numbers; `f(lo)` and `f(hi)`
/// have opposite signs.
fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut flo: f64) -> Result<f64, RootError> {
    let mut fhi = checked(f, hi)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = checked(f, mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    Ok(if flo.abs() <= fhi.abs() { lo } else { hi })
}

/// Golden-section search for the minimum of `sign * f` on `[lo, hi]`.
fn min_signed(
    f: &impl Fn(f64) -> f64,
    sign: f64,
    mut lo: f64,
    mut hi: f64,
) -> Result<(f64, f64), RootError> {
    let f = |x: f64| checked(f, x).map(|v| sign * v);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..120 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2)?;
        }
        if hi - lo <= 1e-15 * (1.0 + lo.abs()) {
            break;
        }
    }
    Ok(if f1 <= f2 { (x1, sign * f1) } else { (x2, sign * f2) })
}

/// All zeros of `f` in `[a, b]`, sorted. `scale(x)` is the local magnitude
/// that the residual tolerance is measured against.
pub fn real_zeros(
    f: impl Fn(f64) -> f64,
    scale: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    config: &ScanConfig,
) -> Result<Vec<f64>, RootError> {
    if !(a.is_finite() && b.is_finite() && a < b) || !(config.density > 0.0) {
        return Err(RootError::InvalidInterval { a, b });
    }
    let n = ((b - a) * config.density).ceil().max(1.0) as usize;
    let xs: Vec<f64> = (0..=n)
        .map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 })
        .collect();
    let fs = xs
        .iter()
        .map(|x| checked(&f, *x))
        .collect::<Result<Vec<_>, _>>()?;
    let on_grid: Vec<bool> = xs
        .iter()
        .zip(&fs)
        .map(|(x, v)| v.abs() <= config.tol * scale(*x))
        .collect();

    let mut roots = Vec::new();
    let mut suspicious = Vec::new();
    for i in 0..=n {
        if on_grid[i] {
            // keep the better of two neighbouring grid hits
            let better_neighbour = (i > 0 && on_grid[i - 1] && fs[i - 1].abs() <= fs[i].abs())
                || (i < n && on_grid[i + 1] && fs[i + 1].abs() < fs[i].abs());
            if !better_neighbour {
                roots.push(xs[i]);
            }
            continue;
        }
        if i < n && !on_grid[i + 1] && (fs[i] < 0.0) != (fs[i + 1] < 0.0) {
            roots.push(bisect(&f, xs[i], xs[i + 1], fs[i])?);
        }
        if i > 0
            && i < n
            && !on_grid[i - 1]
            && !on_grid[i + 1]
            && fs[i].abs() < fs[i - 1].abs()
            && fs[i].abs() < fs[i + 1].abs()
            && (fs[i - 1] < 0.0) == (fs[i] < 0.0)
            && (fs[i + 1] < 0.0) == (fs[i] < 0.0)
        {
            let sign = fs[i].signum();
            let (xm, fm) = min_signed(&f, sign, xs[i - 1], xs[i + 1])?;
            if (fm < 0.0) != (fs[i] < 0.0) {
                roots.push(bisect(&f, xs[i - 1], xm, fs[i - 1])?);
                roots.push(bisect(&f, xm, xs[i + 1], fm)?);
            } else if fm.abs() <= config.tol.sqrt() * scale(xm) {
                suspicious.push(xm);
            }
        }
    }
    roots.sort_by(|p, q| p.partial_cmp(q).unwrap());
    if !suspicious.is_empty() {
        return Err(RootError::RefineNeeded {
            locations: suspicious,
            roots,
        });
    }
    Ok(roots)
}
