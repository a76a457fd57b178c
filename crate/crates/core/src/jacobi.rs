//! Jacobi matrices with off-diagonal `b_k > 0` and diagonal `q_k`, their
//! polynomials of the first and second kind, and finite-section spectra.
//!
//! The kernel rows are `b_{k-1} u_{k-1} + q_k u_k + b_k u_{k+1} = z u_k`.
//! First kind: `P_0 = 1`, `P_1 = (z - q_1)/b_1`; second kind: `Q_0 = 0`,
//! `Q_1 = 1/b_1`; both continue with
//! `P_k = ((z - q_k) P_{k-1} - b_{k-1} P_{k-2}) / b_k`. The Wronskian
//! `b_n (P_{n-1} Q_n - P_n Q_{n-1})` equals 1 for every `n`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::zeros::ZeroSequence;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JacobiError {
    #[error("invalid Jacobi matrix: {0}")]
    InvalidMatrix(String),
    #[error("order {requested} exceeds the {available} available entries")]
    OrderTooLarge { requested: usize, available: usize },
    #[error("recurrence at z={z} leaves the floating point range after k={last_valid}; rescale the matrix")]
    RescaleNeeded { z: Complex64, last_valid: usize },
    #[error("eigenvalue computation failed for the {size}x{size} section (entries up to {max_entry:e})")]
    Eigen { size: usize, max_entry: f64 },
}

/// Generator for the entries `k = 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum SequenceRule {
    /// `scale * ratio^k`.
    Geometric {
        ratio: f64,
        #[serde(default = "one")]
        scale: f64,
    },
    Constant { value: f64 },
    /// `scale * k^exponent`.
    Power {
        exponent: f64,
        #[serde(default = "one")]
        scale: f64,
    },
}

fn one() -> f64 {
    1.0
}

/// JSON: either a rule object or an explicit list starting at `k = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sequence {
    Rule(SequenceRule),
    List(Vec<f64>),
}

impl Sequence {
    pub fn constant(value: f64) -> Self {
        Sequence::Rule(SequenceRule::Constant { value })
    }

    pub fn geometric(ratio: f64) -> Self {
        Sequence::Rule(SequenceRule::Geometric { ratio, scale: 1.0 })
    }

    /// Entry `k >= 1`; `None` past the end of a list.
    pub fn get(&self, k: usize) -> Option<f64> {
        match self {
            Sequence::Rule(SequenceRule::Geometric { ratio, scale }) => Some(scale * ratio.powi(k as i32)),
            Sequence::Rule(SequenceRule::Constant { value }) => Some(*value),
            Sequence::Rule(SequenceRule::Power { exponent, scale }) => Some(scale * (k as f64).powf(*exponent)),
            Sequence::List(v) => v.get(k.checked_sub(1)?).copied(),
        }
    }

    pub fn available(&self) -> usize {
        match self {
            Sequence::List(v) => v.len(),
            Sequence::Rule(_) => usize::MAX,
        }
    }
}

/// JSON: `{"b": ..., "q": ..., "N": 64}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiMatrix {
    pub b: Sequence,
    pub q: Sequence,
    #[serde(rename = "N")]
    pub n: usize,
}

impl JacobiMatrix {
    pub fn new(b: Sequence, q: Sequence, n: usize) -> Result<Self, JacobiError> {
        let j = JacobiMatrix { b, q, n };
        j.validate()?;
        Ok(j)
    }

    /// `b_k = 1`, `q_k = 0`.
    pub fn free(n: usize) -> Result<Self, JacobiError> {
        Self::new(Sequence::constant(1.0), Sequence::constant(0.0), n)
    }

    pub fn validate(&self) -> Result<(), JacobiError> {
        if self.n < 2 {
            return Err(JacobiError::InvalidMatrix(format!("N = {} < 2", self.n)));
        }
        self.check_entries(self.n)
    }

    /// Largest order the stored entries support.
    pub fn available(&self) -> usize {
        self.b.available().min(self.q.available())
    }

    fn check_entries(&self, n: usize) -> Result<(), JacobiError> {
        if n > self.available() {
            return Err(JacobiError::OrderTooLarge {
                requested: n,
                available: self.available(),
            });
        }
        for k in 1..=n {
            let b = self.b(k);
            if !(b.is_finite() && b > 0.0) {
                return Err(JacobiError::InvalidMatrix(format!("b_{k} = {b} is not positive")));
            }
            let q = self.q(k);
            if !q.is_finite() {
                return Err(JacobiError::InvalidMatrix(format!("q_{k} = {q} is not finite")));
            }
        }
        Ok(())
    }

    pub fn b(&self, k: usize) -> f64 {
        self.b.get(k).unwrap_or(f64::NAN)
    }

    pub fn q(&self, k: usize) -> f64 {
        self.q.get(k).unwrap_or(f64::NAN)
    }
}

/// `P_0..P_n` and `Q_0..Q_n` at one point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolynomialPair {
    pub z: Complex64,
    pub p: Vec<Complex64>,
    pub q: Vec<Complex64>,
}

impl PolynomialPair {
    pub fn order(&self) -> usize {
        self.p.len() - 1
    }

    /// `b_n (P_{n-1} Q_n - P_n Q_{n-1})` for `1 <= n <= order`.
    pub fn wronskian(&self, j: &JacobiMatrix, n: usize) -> Complex64 {
        j.b(n) * (self.p[n - 1] * self.q[n] - self.p[n] * self.q[n - 1])
    }

    /// Residual of kernel row `k` (for `1 <= k < order`) applied to `u_i = v_{i-1}`.
    fn row_residual(j: &JacobiMatrix, z: Complex64, v: &[Complex64], k: usize) -> Complex64 {
        let prev = if k >= 2 { j.b(k - 1) * v[k - 2] } else { Complex64::new(0.0, 0.0) };
        prev + (j.q(k) - z) * v[k - 1] + j.b(k) * v[k]
    }

    pub fn p_row_residual(&self, j: &JacobiMatrix, k: usize) -> Complex64 {
        Self::row_residual(j, self.z, &self.p, k)
    }

    pub fn q_row_residual(&self, j: &JacobiMatrix, k: usize) -> Complex64 {
        Self::row_residual(j, self.z, &self.q, k)
    }
}

/// Polynomials of both kinds at `z` up to order `n`.
pub fn recurrence_eval(j: &JacobiMatrix, z: Complex64, n: usize) -> Result<PolynomialPair, JacobiError> {
    j.check_entries(n.max(1))?;
    let mut p = Vec::with_capacity(n + 1);
    let mut q = Vec::with_capacity(n + 1);
    p.push(Complex64::new(1.0, 0.0));
    q.push(Complex64::new(0.0, 0.0));
    if n >= 1 {
        p.push((z - j.q(1)) / j.b(1));
        q.push(Complex64::new(1.0 / j.b(1), 0.0));
    }
    for k in 2..=n {
        let (bk, bk1, qk) = (j.b(k), j.b(k - 1), j.q(k));
        let pk = ((z - qk) * p[k - 1] - bk1 * p[k - 2]) / bk;
        let qq = ((z - qk) * q[k - 1] - bk1 * q[k - 2]) / bk;
        let ok = |c: Complex64| c.re.is_finite() && c.im.is_finite() && c.norm() < 1e300;
        if !(ok(pk) && ok(qq)) {
            return Err(JacobiError::RescaleNeeded { z, last_valid: k - 1 });
        }
        p.push(pk);
        q.push(qq);
    }
    Ok(PolynomialPair { z, p, q })
}

/// `max |Q_1(z) - 1/b_1|` over the samples: the coefficient of the second
/// basis vector in the second-kind solution, which does not depend on `z`.
pub fn gauge_identity_check(j: &JacobiMatrix, samples: &[Complex64]) -> Result<f64, JacobiError> {
    let target = 1.0 / j.b(1);
    let mut worst: f64 = 0.0;
    for z in samples {
        let pair = recurrence_eval(j, *z, 1)?;
        worst = worst.max((pair.q[1] - target).norm());
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleStatus {
    Bounded,
    Divergent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitCircleReport {
    pub status: CircleStatus,
    /// `(N, S_N)` with `S_N = sum_{k < N} |P_k(z0)|^2 + |Q_k(z0)|^2`.
    pub trace: Vec<(usize, f64)>,
    /// Slopes of `ln S_N` against `ln N` between consecutive sweep points.
    pub growth: Vec<f64>,
    pub note: String,
}

/// Relative increase of `S_N` accepted as saturation.
pub const LIMIT_CIRCLE_TOL: f64 = 1e-6;
/// Smallest log-log slope counted as sustained growth.
pub const GROWTH_FLOOR: f64 = 0.1;

/// Tracks the square sums of both solutions at `z0` along the sweep.
pub fn limit_circle_diagnostic(
    j: &JacobiMatrix,
    z0: Complex64,
    sweep: &[usize],
) -> Result<LimitCircleReport, JacobiError> {
    if z0.im == 0.0 {
        return Err(JacobiError::InvalidMatrix(format!("z0 = {z0} must be non-real")));
    }
    let mut sweep: Vec<usize> = sweep.iter().copied().filter(|n| *n >= 1).collect();
    sweep.sort_unstable();
    sweep.dedup();
    let Some(&n_max) = sweep.last() else {
        return Ok(LimitCircleReport {
            status: CircleStatus::Inconclusive,
            trace: vec![],
            growth: vec![],
            note: "empty sweep".into(),
        });
    };
    let (pair, overflow) = match recurrence_eval(j, z0, n_max) {
        Ok(p) => (p, None),
        Err(JacobiError::RescaleNeeded { last_valid, .. }) => {
            (recurrence_eval(j, z0, last_valid)?, Some(last_valid))
        }
        Err(e) => return Err(e),
    };
    let mut trace = Vec::new();
    let mut s = 0.0;
    let mut k = 0;
    for &n in &sweep {
        while k < n && k <= pair.order() {
            s += pair.p[k].norm_sqr() + pair.q[k].norm_sqr();
            k += 1;
        }
        if k < n || !s.is_finite() {
            break;
        }
        trace.push((n, s));
    }
    let growth: Vec<f64> = trace
        .windows(2)
        .map(|w| (w[1].1 / w[0].1).ln() / (w[1].0 as f64 / w[0].0 as f64).ln())
        .collect();
    let status;
    let note;
    if let Some(k) = overflow {
        status = CircleStatus::Divergent;
        note = format!("recurrence overflows after k = {k}");
    } else if trace.len() < 2 {
        status = CircleStatus::Inconclusive;
        note = "need at least two sweep points".into();
    } else {
        let (n1, s1) = trace[trace.len() - 2];
        let (_, s2) = trace[trace.len() - 1];
        let rel = (s2 - s1) / s2;
        let sustained = growth.len() >= 2 && growth[growth.len() - 2..].iter().all(|g| *g > GROWTH_FLOOR);
        if rel <= LIMIT_CIRCLE_TOL {
            status = CircleStatus::Bounded;
            note = format!("S_N increased by a relative {rel:.3e} after N = {n1}");
        } else if sustained {
            status = CircleStatus::Divergent;
            note = format!("log-log growth slope {:.3} over the last sweep points", growth[growth.len() - 1]);
        } else {
            status = CircleStatus::Inconclusive;
            note = format!("relative increase {rel:.3e} without sustained growth");
        }
    }
    Ok(LimitCircleReport {
        status,
        trace,
        growth,
        note,
    })
}

/// Eigenvalues of the `n x n` leading section with `q_n` replaced by
/// `q_n + tau b_n`; `tau = None` stands for infinity and drops the last row
/// and column.
pub fn truncated_extension_spectra(
    j: &JacobiMatrix,
    n: usize,
    tau: Option<f64>,
) -> Result<ZeroSequence, JacobiError> {
    if n < 2 {
        return Err(JacobiError::InvalidMatrix(format!("section order {n} < 2")));
    }
    j.check_entries(n)?;
    let size = if tau.is_some() { n } else { n - 1 };
    let mut m = DMatrix::<f64>::zeros(size, size);
    for k in 1..=size {
        m[(k - 1, k - 1)] = j.q(k);
        if k < size {
            m[(k - 1, k)] = j.b(k);
            m[(k, k - 1)] = j.b(k);
        }
    }
    if let Some(t) = tau {
        if !t.is_finite() {
            return Err(JacobiError::InvalidMatrix(format!("boundary parameter {t}")));
        }
        m[(n - 1, n - 1)] += t * j.b(n);
    }
    let max_entry = m.amax();
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 10_000).ok_or(JacobiError::Eigen { size, max_entry })?;
    let values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    ZeroSequence::finite(values).map_err(|_| JacobiError::Eigen { size, max_entry })
}
