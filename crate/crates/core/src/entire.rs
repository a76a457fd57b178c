//! A closed family of entire functions with structural `#` conjugation.
//!
//! Every variant maps to another variant under `f#(z) = conj(f(conj z))`, so
//! the conjugation is computed on the representation rather than sampled.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::product::{canonical_product, TruncationSchedule};
use crate::zeros::ZeroSequence;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Relative tolerance for the real-entire sample check.
pub const REAL_ENTIRE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FunctionError {
    #[error("malformed function: {0}")]
    Malformed(String),
}

/// Entire function descriptor.
///
/// JSON form: `{"variant": "<kebab-name>", "params": {...}}`; complex numbers
/// are `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "params", rename_all = "kebab-case")]
pub enum EntireFunction {
    /// `exp(-i * rate * z)`.
    Exp { rate: f64 },
    /// Coefficients in increasing degree.
    Polynomial { coeffs: Vec<Complex64> },
    /// `sum_k w_k f_k(z)`.
    Combination { terms: Vec<(Complex64, EntireFunction)> },
    /// Symmetric-truncation canonical product over real zeros.
    CanonicalProduct {
        zeros: ZeroSequence,
        #[serde(default)]
        schedule: TruncationSchedule,
    },
    Product {
        left: Box<EntireFunction>,
        right: Box<EntireFunction>,
    },
    /// `(f(z) - f(node)) / (z - node)`, continued by `f'(node)` at the node.
    DividedDifference {
        inner: Box<EntireFunction>,
        node: Complex64,
    },
}

/// A value with an absolute error bound (non-zero only through canonical
/// products).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error_bound: f64,
}

// Gauss-Legendre nodes/weights on [0, 1] used to integrate f' along a short
// segment near a divided-difference node.
fn segment_rule() -> &'static [(f64, f64)] {
    use std::sync::OnceLock;
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        crate::quadrature::gauss_legendre(16)
            .into_iter()
            .map(|(x, w)| (0.5 * (x + 1.0), 0.5 * w))
            .collect()
    })
}

const CAUCHY_POINTS: usize = 32;

impl EntireFunction {
    pub fn exp(rate: f64) -> Self {
        EntireFunction::Exp { rate }
    }

    pub fn constant(c: Complex64) -> Self {
        EntireFunction::Polynomial { coeffs: vec![c] }
    }

    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        EntireFunction::Polynomial { coeffs }
    }

    pub fn real_polynomial(coeffs: &[f64]) -> Self {
        EntireFunction::Polynomial {
            coeffs: coeffs.iter().map(|c| Complex64::new(*c, 0.0)).collect(),
        }
    }

    /// The identity function `z`.
    pub fn identity() -> Self {
        Self::real_polynomial(&[0.0, 1.0])
    }

    pub fn canonical_product(zeros: ZeroSequence, schedule: TruncationSchedule) -> Self {
        EntireFunction::CanonicalProduct { zeros, schedule }
    }

    /// Linear combination; merges into a single polynomial when every term is one.
    pub fn combination(terms: Vec<(Complex64, EntireFunction)>) -> Self {
        if terms.iter().all(|(_, f)| matches!(f, EntireFunction::Polynomial { .. })) {
            let len = terms
                .iter()
                .map(|(_, f)| match f {
                    EntireFunction::Polynomial { coeffs } => coeffs.len(),
                    _ => 0,
                })
                .max()
                .unwrap_or(0);
            let mut out = vec![ZERO; len.max(1)];
            for (w, f) in &terms {
                if let EntireFunction::Polynomial { coeffs } = f {
                    for (k, c) in coeffs.iter().enumerate() {
                        out[k] += w * c;
                    }
                }
            }
            return EntireFunction::Polynomial { coeffs: out };
        }
        EntireFunction::Combination { terms }
    }

    pub fn scaled(self, w: Complex64) -> Self {
        Self::combination(vec![(w, self)])
    }

    pub fn add(self, other: EntireFunction) -> Self {
        Self::combination(vec![(ONE, self), (ONE, other)])
    }

    pub fn sub(self, other: EntireFunction) -> Self {
        Self::combination(vec![(ONE, self), (-ONE, other)])
    }

    /// Pointwise product; polynomials are multiplied out.
    pub fn product(left: EntireFunction, right: EntireFunction) -> Self {
        if let (EntireFunction::Polynomial { coeffs: a }, EntireFunction::Polynomial { coeffs: b }) =
            (&left, &right)
        {
            let mut out = vec![ZERO; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            return EntireFunction::Polynomial { coeffs: out };
        }
        EntireFunction::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// `(f(z) - f(node)) / (z - node)`. For polynomials this is synthetic
    /// division and stays a polynomial.
    pub fn divided_difference(inner: EntireFunction, node: Complex64) -> Self {
        if let EntireFunction::Polynomial { coeffs } = &inner {
            if coeffs.len() <= 1 {
                return EntireFunction::constant(ZERO);
            }
            let n = coeffs.len() - 1;
            let mut q = vec![ZERO; n];
            let mut acc = ZERO;
            for k in (1..=n).rev() {
                acc = acc * node + coeffs[k];
                q[k - 1] = acc;
            }
            return EntireFunction::Polynomial { coeffs: q };
        }
        EntireFunction::DividedDifference {
            inner: Box::new(inner),
            node,
        }
    }

    /// Rejects non-finite parameters.
    pub fn validate(&self) -> Result<(), FunctionError> {
        fn finite(c: Complex64) -> bool {
            c.re.is_finite() && c.im.is_finite()
        }
        match self {
            EntireFunction::Exp { rate } => {
                if rate.is_finite() {
                    Ok(())
                } else {
                    Err(FunctionError::Malformed(format!("exp rate {rate}")))
                }
            }
            EntireFunction::Polynomial { coeffs } => {
                if coeffs.is_empty() {
                    return Err(FunctionError::Malformed("empty coefficient list".into()));
                }
                match coeffs.iter().position(|c| !finite(*c)) {
                    Some(k) => Err(FunctionError::Malformed(format!(
                        "polynomial coefficient {k} is {}",
                        coeffs[k]
                    ))),
                    None => Ok(()),
                }
            }
            EntireFunction::Combination { terms } => {
                for (w, f) in terms {
                    if !finite(*w) {
                        return Err(FunctionError::Malformed(format!("combination weight {w}")));
                    }
                    f.validate()?;
                }
                Ok(())
            }
            EntireFunction::CanonicalProduct { schedule, .. } => {
                if !(schedule.r0.is_finite() && schedule.r0 > 0.0) {
                    return Err(FunctionError::Malformed(format!(
                        "truncation schedule r0 {}",
                        schedule.r0
                    )));
                }
                if !(schedule.margin.is_finite() && schedule.rel_tol.is_finite()) {
                    return Err(FunctionError::Malformed("truncation schedule".into()));
                }
                Ok(())
            }
            EntireFunction::Product { left, right } => {
                left.validate()?;
                right.validate()
            }
            EntireFunction::DividedDifference { inner, node } => {
                if !finite(*node) {
                    return Err(FunctionError::Malformed(format!("divided difference node {node}")));
                }
                inner.validate()
            }
        }
    }

    /// Growth-rate hint used to size the local contours.
    fn scale_hint(&self) -> f64 {
        match self {
            EntireFunction::Exp { rate } => rate.abs(),
            EntireFunction::Polynomial { .. } => 0.0,
            EntireFunction::Combination { terms } => terms
                .iter()
                .map(|(_, f)| f.scale_hint())
                .fold(0.0, f64::max),
            EntireFunction::CanonicalProduct { .. } => PI,
            EntireFunction::Product { left, right } => left.scale_hint() + right.scale_hint(),
            EntireFunction::DividedDifference { inner, .. } => inner.scale_hint(),
        }
    }

    /// Checked evaluation with the truncation error bound.
    pub fn evaluate(&self, z: Complex64) -> Result<Evaluation, FunctionError> {
        self.validate()?;
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(FunctionError::Malformed(format!("evaluation point {z}")));
        }
        let (value, error_bound) = self.eval_bounded(z);
        Ok(Evaluation { value, error_bound })
    }

    /// Unchecked evaluation; the function is assumed valid.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_bounded(z).0
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    fn eval_bounded(&self, z: Complex64) -> (Complex64, f64) {
        match self {
            EntireFunction::Exp { rate } => ((-I * *rate * z).exp(), 0.0),
            EntireFunction::Polynomial { coeffs } => {
                (coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c), 0.0)
            }
            EntireFunction::Combination { terms } => {
                terms.iter().fold((ZERO, 0.0), |(v, e), (w, f)| {
                    let (fv, fe) = f.eval_bounded(z);
                    (v + w * fv, e + w.norm() * fe)
                })
            }
            EntireFunction::CanonicalProduct { zeros, schedule } => {
                match canonical_product(zeros, z, schedule) {
                    Ok(est) => (est.value, est.error),
                    Err(_) => (Complex64::new(f64::NAN, f64::NAN), f64::INFINITY),
                }
            }
            EntireFunction::Product { left, right } => {
                let (a, ea) = left.eval_bounded(z);
                let (b, eb) = right.eval_bounded(z);
                (a * b, a.norm() * eb + b.norm() * ea + ea * eb)
            }
            EntireFunction::DividedDifference { inner, node } => {
                let h = z - node;
                let near = 0.25 / (1.0 + self.scale_hint());
                if h.norm() >= near {
                    let (a, ea) = inner.eval_bounded(z);
                    let (b, eb) = inner.eval_bounded(*node);
                    ((a - b) / h, (ea + eb) / h.norm())
                } else {
                    // (f(z) - f(node)) / h = int_0^1 f'(node + t h) dt
                    let v = segment_rule()
                        .iter()
                        .map(|(t, w)| *w * inner.eval_with_derivative(node + h * *t).1)
                        .sum();
                    (v, 0.0)
                }
            }
        }
    }

    /// Value and first derivative.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            EntireFunction::Exp { rate } => {
                let v = (-I * *rate * z).exp();
                (v, -I * *rate * v)
            }
            EntireFunction::Polynomial { coeffs } => {
                let mut v = ZERO;
                let mut d = ZERO;
                for c in coeffs.iter().rev() {
                    d = d * z + v;
                    v = v * z + c;
                }
                (v, d)
            }
            EntireFunction::Combination { terms } => {
                terms.iter().fold((ZERO, ZERO), |(v, d), (w, f)| {
                    let (fv, fd) = f.eval_with_derivative(z);
                    (v + w * fv, d + w * fd)
                })
            }
            EntireFunction::CanonicalProduct { zeros, schedule } => {
                match canonical_product(zeros, z, schedule) {
                    Ok(est) => (est.value, est.derivative),
                    Err(_) => {
                        let nan = Complex64::new(f64::NAN, f64::NAN);
                        (nan, nan)
                    }
                }
            }
            EntireFunction::Product { left, right } => {
                let (a, da) = left.eval_with_derivative(z);
                let (b, db) = right.eval_with_derivative(z);
                (a * b, da * b + a * db)
            }
            EntireFunction::DividedDifference { inner, node } => {
                let near = 0.25 / (1.0 + self.scale_hint());
                let h = z - node;
                if h.norm() >= near {
                    let (a, da) = inner.eval_with_derivative(z);
                    let b = inner.eval(*node);
                    let q = (a - b) / h;
                    (q, (da - q) / h)
                } else {
                    (self.eval(z), self.cauchy_derivative(z, 2.0 * near))
                }
            }
        }
    }

    /// `f'(z)` from the trapezoidal Cauchy integral on a circle of radius `rho`.
    pub fn cauchy_derivative(&self, z: Complex64, rho: f64) -> Complex64 {
        let m = CAUCHY_POINTS;
        let mut acc = ZERO;
        for k in 0..m {
            let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
            acc += self.eval(z + rho * w) / w;
        }
        acc / (m as f64 * rho)
    }

    /// The `#` conjugate `z -> conj(f(conj z))`.
    pub fn sharp(&self) -> EntireFunction {
        match self {
            EntireFunction::Exp { rate } => EntireFunction::Exp { rate: -rate },
            EntireFunction::Polynomial { coeffs } => EntireFunction::Polynomial {
                coeffs: coeffs.iter().map(|c| c.conj()).collect(),
            },
            EntireFunction::Combination { terms } => EntireFunction::Combination {
                terms: terms.iter().map(|(w, f)| (w.conj(), f.sharp())).collect(),
            },
            EntireFunction::CanonicalProduct { .. } => self.clone(),
            EntireFunction::Product { left, right } => EntireFunction::Product {
                left: Box::new(left.sharp()),
                right: Box::new(right.sharp()),
            },
            EntireFunction::DividedDifference { inner, node } => {
                EntireFunction::DividedDifference {
                    inner: Box::new(inner.sharp()),
                    node: node.conj(),
                }
            }
        }
    }

    /// Largest relative deviation `|f(x) - conj f(x)| / (1 + |f(x)|)` on the grid.
    pub fn real_deviation(&self, grid: &[f64]) -> f64 {
        grid.iter()
            .map(|x| {
                let v = self.eval_real(*x);
                (v - v.conj()).norm() / (1.0 + v.norm())
            })
            .fold(0.0, f64::max)
    }

    pub fn is_real_entire_on(&self, grid: &[f64]) -> bool {
        self.real_deviation(grid) <= REAL_ENTIRE_TOL
    }

    /// Polynomial coefficients, if this is a polynomial.
    pub fn coefficients(&self) -> Option<&[Complex64]> {
        match self {
            EntireFunction::Polynomial { coeffs } => Some(coeffs),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// `-(z + i)^2 = -z^2 - 2iz + 1`
    fn minus_z_plus_i_squared() -> EntireFunction {
        EntireFunction::polynomial(vec![c(1.0, 0.0), c(0.0, -2.0), c(-1.0, 0.0)])
    }

    #[test]
    fn exp_values() {
        let f = EntireFunction::exp(PI);
        assert_eq!(f.eval(ZERO), ONE);
        let v = f.eval(I);
        assert!((v - c(PI.exp(), 0.0)).norm() < 1e-12 * PI.exp());
        assert!((v.re - 23.140_692_632_779_27).abs() < 1e-10);
    }

    #[test]
    fn polynomial_value_at_origin() {
        assert_eq!(minus_z_plus_i_squared().eval(ZERO), ONE);
    }

    #[test]
    fn sharp_of_exp_flips_rate() {
        assert_eq!(EntireFunction::exp(PI).sharp(), EntireFunction::exp(-PI));
    }

    #[test]
    fn sharp_fixes_real_polynomial() {
        let f = EntireFunction::real_polynomial(&[-1.0, 0.0, 1.0]);
        assert_eq!(f.sharp(), f);
    }

    #[test]
    fn sharp_conjugates_coefficients() {
        // -(z - i)^2 = -z^2 + 2iz + 1
        let expect = EntireFunction::polynomial(vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)]);
        assert_eq!(minus_z_plus_i_squared().sharp(), expect);
    }

    #[test]
    fn sharp_matches_pointwise_definition() {
        let f = EntireFunction::combination(vec![
            (c(0.3, -1.2), EntireFunction::exp(1.7)),
            (c(2.0, 0.5), minus_z_plus_i_squared()),
        ]);
        let g = EntireFunction::divided_difference(
            EntireFunction::product(f.clone(), EntireFunction::exp(-0.4)),
            c(0.2, 0.9),
        );
        for z in [c(0.3, 0.4), c(-1.1, 2.0), c(2.5, -0.7)] {
            for h in [&f, &g] {
                let lhs = h.sharp().eval(z);
                let rhs = h.eval(z.conj()).conj();
                assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
            }
        }
    }

    #[test]
    fn divided_difference_of_polynomial_is_synthetic_division() {
        let s = EntireFunction::real_polynomial(&[-1.0, 0.0, 1.0]);
        let g = EntireFunction::divided_difference(s, ONE);
        assert_eq!(g, EntireFunction::real_polynomial(&[1.0, 1.0]));
    }

    #[test]
    fn divided_difference_is_continuous_at_node() {
        // sin(pi z) / z, value pi at the origin
        let sin = EntireFunction::combination(vec![
            (c(0.0, 0.5), EntireFunction::exp(PI)),
            (c(0.0, -0.5), EntireFunction::exp(-PI)),
        ]);
        let g = EntireFunction::divided_difference(sin, ZERO);
        assert!((g.eval(ZERO) - c(PI, 0.0)).norm() < 1e-13);
        let z = c(1e-7, 0.0);
        let exact = (PI * 1e-7).sin() / 1e-7;
        assert!((g.eval(z).re - exact).abs() < 1e-12);
        let (_, d) = g.eval_with_derivative(c(0.5, 0.0));
        // d/dz sin(pi z)/z at 1/2 = (pi cos(pi/2) * 0.5 - sin(pi/2)) / 0.25
        assert!((d.re - (-4.0)).abs() < 1e-10, "{d}");
        let (_, d0) = g.eval_with_derivative(c(0.01, 0.0));
        let exact0 = ((PI * 0.01).cos() * PI * 0.01 - (PI * 0.01).sin()) / 1e-4;
        assert!((d0.re - exact0).abs() < 1e-9, "{d0} vs {exact0}");
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let f = EntireFunction::product(
            EntireFunction::exp(0.7),
            EntireFunction::combination(vec![(c(1.0, 1.0), minus_z_plus_i_squared())]),
        );
        let z = c(0.4, -0.3);
        let h = 1e-6;
        let fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
        assert!((f.eval_with_derivative(z).1 - fd).norm() < 1e-7);
    }

    #[test]
    fn non_finite_parameters_are_malformed() {
        assert!(EntireFunction::exp(f64::NAN).evaluate(ZERO).is_err());
        let p = EntireFunction::polynomial(vec![c(f64::INFINITY, 0.0)]);
        assert!(matches!(p.evaluate(ZERO), Err(FunctionError::Malformed(_))));
    }

    #[test]
    fn json_descriptor_round_trips() {
        let f = EntireFunction::combination(vec![(c(0.0, 0.5), EntireFunction::exp(PI))]);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains("\"variant\":\"combination\""));
        let back: EntireFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let p: EntireFunction =
            serde_json::from_str(r#"{"variant":"polynomial","params":{"coeffs":[[1,0],[0,-2],[-1,0]]}}"#)
                .unwrap();
        assert_eq!(p, minus_z_plus_i_squared());
    }
}
