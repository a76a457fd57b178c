//! Hermite-Biehler functions and the `s_beta` family.
//!
//! `s_beta(z) = (i/2) [e^{i beta} e(z) - e^{-i beta} e#(z)]` is real entire
//! for every angle, and on the real line it equals
//! `-|e(x)| sin(beta + arg e(x))`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::entire::{EntireFunction, FunctionError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HermiteError {
    #[error("empty validation grid")]
    EmptyGrid,
    #[error("not Hermite-Biehler: upper half-plane margin {margin:.3e} at {at}, real-axis minimum {real_min:.3e}")]
    NotHermiteBiehler {
        margin: f64,
        at: Complex64,
        real_min: f64,
    },
    #[error("e(0) = 0, so e cannot be normalized to e(0) = 1/sin(gamma)")]
    NotNormalizable,
    #[error("e({0}) = 0: the angle of the extension through this point is undefined")]
    ZeroOnRealAxis(f64),
    #[error(transparent)]
    Function(#[from] FunctionError),
}

/// Sample points used to validate the Hermite-Biehler inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleGrid {
    pub upper: Vec<Complex64>,
    pub real: Vec<f64>,
}

impl SampleGrid {
    pub fn new(upper: Vec<Complex64>, real: Vec<f64>) -> Self {
        SampleGrid { upper, real }
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty() && self.real.is_empty()
    }
}

impl Default for SampleGrid {
    fn default() -> Self {
        let mut upper = Vec::new();
        for i in -8..=8 {
            for y in [0.25, 0.5, 1.0, 2.0] {
                upper.push(Complex64::new(0.5 * i as f64, y));
            }
        }
        let real = (-32..=32).map(|i| 0.25 * i as f64).collect();
        SampleGrid { upper, real }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    /// `min (|e(z)| - |e#(z)|)` over the upper half-plane samples.
    pub margin: f64,
    pub margin_at: Complex64,
    /// `min |e(x)|` over the real samples.
    pub real_min: f64,
    pub accepted: bool,
    pub grid: SampleGrid,
}

pub fn validate_hermite_biehler(
    e: &EntireFunction,
    grid: &SampleGrid,
) -> Result<ValidationReport, HermiteError> {
    if grid.is_empty() {
        return Err(HermiteError::EmptyGrid);
    }
    e.validate()?;
    let sharp = e.sharp();
    let mut margin = f64::INFINITY;
    let mut margin_at = Complex64::new(0.0, 0.0);
    for z in &grid.upper {
        let m = e.eval(*z).norm() - sharp.eval(*z).norm();
        if m < margin {
            margin = m;
            margin_at = *z;
        }
    }
    let real_min = grid
        .real
        .iter()
        .map(|x| e.eval_real(*x).norm())
        .fold(f64::INFINITY, f64::min);
    Ok(ValidationReport {
        margin,
        margin_at,
        real_min,
        accepted: margin > 0.0 && real_min > 0.0,
        grid: grid.clone(),
    })
}

/// A validated Hermite-Biehler function normalized so that `e(0)` is real and
/// at least one, i.e. `e(0) = 1/sin(gamma0)` with `gamma0` in `(0, pi/2]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermiteBiehler {
    e: EntireFunction,
    e_sharp: EntireFunction,
    gamma0: f64,
    report: ValidationReport,
}

impl HermiteBiehler {
    pub fn function(&self) -> &EntireFunction {
        &self.e
    }

    pub fn sharp(&self) -> &EntireFunction {
        &self.e_sharp
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.e.eval(z)
    }

    pub fn s_beta(&self, beta: f64) -> SBeta {
        s_beta(self, beta)
    }

    pub fn beta_at(&self, x: f64) -> Result<f64, HermiteError> {
        beta_at(self, x)
    }
}

pub fn normalize_gauge(e: EntireFunction) -> Result<HermiteBiehler, HermiteError> {
    normalize_gauge_on(e, &SampleGrid::default())
}

/// Rotates and (if needed) enlarges `e` so that `e(0) >= 1` is real.
///
/// A unimodular factor leaves `|e(x)|` and hence the space untouched; the
/// positive factor only rescales the norm.
pub fn normalize_gauge_on(
    e: EntireFunction,
    grid: &SampleGrid,
) -> Result<HermiteBiehler, HermiteError> {
    let report = validate_hermite_biehler(&e, grid)?;
    if !report.accepted {
        return Err(HermiteError::NotHermiteBiehler {
            margin: report.margin,
            at: report.margin_at,
            real_min: report.real_min,
        });
    }
    let e0 = e.eval(Complex64::new(0.0, 0.0));
    let rho = e0.norm();
    if rho == 0.0 {
        return Err(HermiteError::NotNormalizable);
    }
    let phase = e0.conj() / rho;
    let factor = phase * rho.recip().max(1.0);
    let e = if factor == Complex64::new(1.0, 0.0) {
        e
    } else {
        e.scaled(factor)
    };
    let e0 = e.eval(Complex64::new(0.0, 0.0)).re;
    let gamma0 = (1.0 / e0).min(1.0).asin();
    let report = validate_hermite_biehler(&e, grid)?;
    let e_sharp = e.sharp();
    Ok(HermiteBiehler {
        e,
        e_sharp,
        gamma0,
        report,
    })
}

/// `s_beta` for the angle `beta` reduced into `[0, pi)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SBeta {
    beta: f64,
    function: EntireFunction,
}

impl SBeta {
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn function(&self) -> &EntireFunction {
        &self.function
    }

    pub fn into_function(self) -> EntireFunction {
        self.function
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.function.eval(z)
    }

    /// Real value on the real axis.
    pub fn eval_real(&self, x: f64) -> f64 {
        self.function.eval_real(x).re
    }
}

pub fn reduce_angle(beta: f64) -> f64 {
    let r = beta.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        // turns -0.0 into 0.0
        r + 0.0
    }
}

pub fn s_beta(e: &HermiteBiehler, beta: f64) -> SBeta {
    let reduced = reduce_angle(beta);
    if reduced != beta {
        log::warn!("angle {beta} reduced modulo pi to {reduced}");
    }
    let rot = Complex64::from_polar(1.0, reduced);
    let half_i = Complex64::new(0.0, 0.5);
    let function = EntireFunction::combination(vec![
        (half_i * rot, e.e.clone()),
        (-half_i * rot.conj(), e.e_sharp.clone()),
    ]);
    SBeta {
        beta: reduced,
        function,
    }
}

/// The unique `beta` in `[0, pi)` with `s_beta(x) = 0`.
pub fn beta_at(e: &HermiteBiehler, x: f64) -> Result<f64, HermiteError> {
    let v = e.eval(Complex64::new(x, 0.0));
    if v.norm() == 0.0 {
        return Err(HermiteError::ZeroOnRealAxis(x));
    }
    Ok(reduce_angle(-v.arg()))
}
