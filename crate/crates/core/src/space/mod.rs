//! Concrete de Branges spaces `B(e)`.
//!
//! The norm is `||f||^2 = int |f(x)|^2 / |e(x)|^2 dx`, antilinear in the first
//! argument. When `e` is a polynomial of degree `N` the space is the
//! polynomials of degree below `N`; it then carries the monomial basis and its
//! Gram matrix, and kernels and inner products of polynomial elements are
//! computed exactly in coordinates.

mod model;

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entire::{EntireFunction, FunctionError};
use crate::hermite::{normalize_gauge, HermiteBiehler, HermiteError, SBeta};
use crate::quadrature::{integrate_real_line, partial_integrals, QuadratureError, QuadratureSpec};
use crate::roots::{real_zeros, RootError, ScanConfig};
use crate::zeros::{Extent, ZeroSequence};

pub use model::{DomainComplement, XiSeed};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("invalid space descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    Hermite(#[from] HermiteError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error("Gram matrix of the monomial basis is not positive definite")]
    GramNotPositive,
    #[error("{w} is in the spectrum of the extension with angle {beta}: s_beta(w) = {value}")]
    SpectrumPoint { beta: f64, w: Complex64, value: Complex64 },
    #[error("{x} is not an eigenvalue for angle {beta}: |s_beta(x)| = {residual:.3e}")]
    InvalidEigenvalue { beta: f64, x: f64, residual: f64 },
    #[error("invalid seed {v} for angle {gamma}: {reason}")]
    InvalidSeed { gamma: f64, v: f64, reason: String },
    #[error("kernel at w0={w0} is degenerate: k(w0,w0) = {value}")]
    DegenerateKernel { w0: Complex64, value: f64 },
    #[error("{0} is not in the open upper half-plane")]
    NotUpperHalfPlane(Complex64),
    #[error("element does not vanish at {w}: value {value}")]
    NotVanishing { w: Complex64, value: Complex64 },
}

/// JSON: `{"kind": "paley-wiener", "a": 3.14}`, `{"kind": "polynomial", "N": 2}`
/// or `{"kind": "custom", "e": <function descriptor>}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpaceDescriptor {
    /// `e(z) = exp(-i a z)`, entire functions of exponential type `a`.
    PaleyWiener { a: f64 },
    /// `e(z) = (z + i)^N` up to a unimodular constant.
    Polynomial {
        #[serde(rename = "N")]
        n: usize,
    },
    Custom { e: EntireFunction },
}

impl SpaceDescriptor {
    /// The Hermite-Biehler function before normalization.
    pub fn raw_function(&self) -> Result<EntireFunction, SpaceError> {
        match self {
            SpaceDescriptor::PaleyWiener { a } => {
                if !(a.is_finite() && *a > 0.0) {
                    return Err(SpaceError::InvalidDescriptor(format!(
                        "Paley-Wiener type must be positive, got {a}"
                    )));
                }
                Ok(EntireFunction::exp(*a))
            }
            SpaceDescriptor::Polynomial { n } => {
                if *n == 0 {
                    return Err(SpaceError::InvalidDescriptor(
                        "polynomial space needs N >= 1".into(),
                    ));
                }
                let factor = EntireFunction::polynomial(vec![Complex64::new(0.0, 1.0), ONE]);
                let mut e = EntireFunction::constant(ONE);
                for _ in 0..*n {
                    e = EntireFunction::product(e, factor.clone());
                }
                Ok(e)
            }
            SpaceDescriptor::Custom { e } => Ok(e.clone()),
        }
    }
}

/// Monomial basis `1, z, ..., z^{N-1}` of a finite-dimensional space.
#[derive(Clone, Debug, PartialEq)]
struct FiniteBasis {
    gram: DMatrix<Complex64>,
    gram_inv: DMatrix<Complex64>,
}

impl FiniteBasis {
    fn dim(&self) -> usize {
        self.gram.nrows()
    }
}

/// Relative tolerance for `s_beta(w) = 0` in resolvent and seed checks.
pub const SPECTRUM_POINT_TOL: f64 = 1e-12;
/// Relative tolerance accepted for an eigenvalue `x` of `s_beta`.
pub const EIGENVALUE_TOL: f64 = 1e-8;
/// Coordinate residual below which an element counts as a basis member.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct DeBrangesSpace {
    descriptor: SpaceDescriptor,
    hb: HermiteBiehler,
    quad: QuadratureSpec,
    basis: Option<FiniteBasis>,
    scan: ScanConfig,
}

/// An entire function regarded as an element of a particular space.
#[derive(Clone, Debug)]
pub struct ModelElement<'s> {
    space: &'s DeBrangesSpace,
    function: EntireFunction,
}

impl<'s> ModelElement<'s> {
    pub fn space(&self) -> &'s DeBrangesSpace {
        self.space
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

    pub fn norm(&self) -> Result<f64, SpaceError> {
        self.space.norm(self)
    }

    pub fn inner(&self, other: &ModelElement<'_>) -> Result<Complex64, SpaceError> {
        self.space.inner(self, other)
    }

    /// The `#` conjugate, again an element of the same space.
    pub fn sharp(&self) -> ModelElement<'s> {
        self.space.wrap(self.function.sharp())
    }

    pub fn scaled(&self, c: Complex64) -> ModelElement<'s> {
        self.space.wrap(self.function.clone().scaled(c))
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: Complex64, other: &ModelElement<'_>) -> ModelElement<'s> {
        self.space.wrap(EntireFunction::combination(vec![
            (ONE, self.function.clone()),
            (c, other.function.clone()),
        ]))
    }
}

impl DeBrangesSpace {
    pub fn new(descriptor: SpaceDescriptor) -> Result<Self, SpaceError> {
        let raw = descriptor.raw_function()?;
        let hb = normalize_gauge(raw)?;
        let panel = match descriptor {
            SpaceDescriptor::PaleyWiener { a } => PI / a,
            _ => 1.0,
        };
        let quad = QuadratureSpec {
            panel,
            ..QuadratureSpec::default()
        };
        let mut space = DeBrangesSpace {
            descriptor,
            hb,
            quad,
            basis: None,
            scan: ScanConfig::default(),
        };
        space.basis = space.build_basis()?;
        Ok(space)
    }

    pub fn paley_wiener(a: f64) -> Result<Self, SpaceError> {
        Self::new(SpaceDescriptor::PaleyWiener { a })
    }

    pub fn polynomial(n: usize) -> Result<Self, SpaceError> {
        Self::new(SpaceDescriptor::Polynomial { n })
    }

    /// Replaces the quadrature used for inner products. The Gram matrix keeps
    /// the tighter rule it was built with.
    pub fn with_quadrature(mut self, spec: QuadratureSpec) -> Self {
        self.quad = spec;
        self
    }

    pub fn with_scan(mut self, scan: ScanConfig) -> Self {
        self.scan = scan;
        self
    }

    pub fn descriptor(&self) -> &SpaceDescriptor {
        &self.descriptor
    }

    pub fn hermite_biehler(&self) -> &HermiteBiehler {
        &self.hb
    }

    pub fn e(&self) -> &EntireFunction {
        self.hb.function()
    }

    pub fn gamma0(&self) -> f64 {
        self.hb.gamma0()
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    /// Tight rule used for Gram matrices and high-accuracy checks.
    pub fn tight_quadrature(&self) -> QuadratureSpec {
        QuadratureSpec {
            rel_tol: 1e-13,
            abs_tol: 1e-16,
            ..self.quad
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        self.basis.as_ref().map(FiniteBasis::dim)
    }

    /// Gram matrix `<z^j, z^k>` of the monomial basis (finite spaces only).
    pub fn gram(&self) -> Option<&DMatrix<Complex64>> {
        self.basis.as_ref().map(|b| &b.gram)
    }

    pub fn s_beta(&self, beta: f64) -> SBeta {
        self.hb.s_beta(beta)
    }

    pub fn beta_at(&self, x: f64) -> Result<f64, SpaceError> {
        Ok(self.hb.beta_at(x)?)
    }

    fn build_basis(&self) -> Result<Option<FiniteBasis>, SpaceError> {
        let Some(coeffs) = self.e().coefficients() else {
            return Ok(None);
        };
        let n = coeffs.len() - 1;
        if n == 0 {
            return Err(SpaceError::InvalidDescriptor(
                "a constant e gives the zero space".into(),
            ));
        }
        let spec = self.tight_quadrature();
        // moments int x^m / |e(x)|^2 dx for m <= 2N - 2
        let mut moments = Vec::with_capacity(2 * n - 1);
        for m in 0..(2 * n - 1) {
            let r = integrate_real_line(
                |x| Complex64::new(x.powi(m as i32) / self.e().eval_real(x).norm_sqr(), 0.0),
                &spec,
            )?;
            moments.push(r.value);
        }
        let gram = DMatrix::from_fn(n, n, |j, k| moments[j + k]);
        let chol = gram
            .clone()
            .cholesky()
            .ok_or(SpaceError::GramNotPositive)?;
        let gram_inv = chol.inverse();
        Ok(Some(FiniteBasis { gram, gram_inv }))
    }

    pub(crate) fn wrap(&self, function: EntireFunction) -> ModelElement<'_> {
        ModelElement {
            space: self,
            function,
        }
    }

    /// Wraps `f` as an element. Membership is not proven here; see
    /// [`DeBrangesSpace::membership_residual`] and [`DeBrangesSpace::norm`].
    pub fn element(&self, f: EntireFunction) -> Result<ModelElement<'_>, SpaceError> {
        f.validate()?;
        Ok(self.wrap(f))
    }

    /// Coordinates in the monomial basis: exact for polynomial descriptors,
    /// otherwise Taylor coefficients from samples on the unit circle.
    /// Returns the coordinates and the size of the discarded higher-order
    /// part (zero for members).
    pub fn coordinates(&self, f: &ModelElement<'_>) -> Option<(Vec<Complex64>, f64)> {
        let n = self.dimension()?;
        if let Some(c) = f.function.coefficients() {
            let mut coords = c.to_vec();
            let tail = coords
                .iter()
                .skip(n)
                .map(|c| c.norm())
                .fold(0.0, f64::max);
            coords.resize(n, ZERO);
            return Some((coords, tail));
        }
        let m = 64.max(4 * n);
        let samples: Vec<Complex64> = (0..m)
            .map(|k| f.eval(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)))
            .collect();
        let taylor: Vec<Complex64> = (0..m / 2)
            .map(|j| {
                samples
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * Complex64::from_polar(1.0, -2.0 * PI * (j * k) as f64 / m as f64))
                    .sum::<Complex64>()
                    / m as f64
            })
            .collect();
        let tail = taylor[n..].iter().map(|c| c.norm()).fold(0.0, f64::max);
        Some((taylor[..n].to_vec(), tail))
    }

    /// Size of the part of `f` outside the finite basis (finite spaces only).
    pub fn membership_residual(&self, f: &ModelElement<'_>) -> Option<f64> {
        self.coordinates(f).map(|(_, r)| r)
    }

    /// `<f, g> = int conj(f(x)) g(x) / |e(x)|^2 dx`.
    pub fn inner(&self, f: &ModelElement<'_>, g: &ModelElement<'_>) -> Result<Complex64, SpaceError> {
        self.inner_with(f, g, &self.quad)
    }

    pub fn inner_with(
        &self,
        f: &ModelElement<'_>,
        g: &ModelElement<'_>,
        spec: &QuadratureSpec,
    ) -> Result<Complex64, SpaceError> {
        if let (Some(basis), Some(a), Some(b)) = (
            &self.basis,
            f.function.coefficients(),
            g.function.coefficients(),
        ) {
            let n = basis.dim();
            if a.len() <= n && b.len() <= n {
                let va = DVector::from_fn(n, |i, _| a.get(i).copied().unwrap_or(ZERO));
                let vb = DVector::from_fn(n, |i, _| b.get(i).copied().unwrap_or(ZERO));
                return Ok(va.dotc(&(&basis.gram * vb)));
            }
        }
        let e = self.e();
        let r = integrate_real_line(
            |x| {
                let z = Complex64::new(x, 0.0);
                f.eval(z).conj() * g.eval(z) / e.eval(z).norm_sqr()
            },
            spec,
        )?;
        Ok(r.value)
    }

    pub fn norm(&self, f: &ModelElement<'_>) -> Result<f64, SpaceError> {
        Ok(self.inner(f, f)?.re.max(0.0).sqrt())
    }

    /// Truncated weighted norms `int_{-R}^{R} |f|^2/|e|^2` on the doubling
    /// cutoffs; linear growth in `R` signals a function outside the space.
    pub fn partial_norms(&self, f: &EntireFunction, doublings: usize) -> Result<Vec<(f64, f64)>, SpaceError> {
        let e = self.e();
        let spec = QuadratureSpec {
            max_doublings: doublings,
            ..self.quad
        };
        let p = partial_integrals(
            |x| {
                let z = Complex64::new(x, 0.0);
                Complex64::new(f.eval(z).norm_sqr() / e.eval(z).norm_sqr(), 0.0)
            },
            &spec,
        )?;
        Ok(p.into_iter().map(|(r, v)| (r, v.re)).collect())
    }

    /// The reproducing kernel `k(., w)` as an element. Finite spaces use the
    /// Gram route, all others the closed form.
    pub fn kernel_function(&self, w: Complex64) -> ModelElement<'_> {
        match &self.basis {
            Some(basis) => {
                let n = basis.dim();
                let phi_w = DVector::from_fn(n, |k, _| w.conj().powi(k as i32));
                let c = &basis.gram_inv * phi_w;
                self.wrap(EntireFunction::polynomial(c.iter().copied().collect()))
            }
            None => self.kernel_closed_form(w),
        }
    }

    /// `k(z, w) = [e(z) conj e(w) - e#(z) conj e#(w)] / (2 pi i (conj w - z))`,
    /// valid for every `e`.
    pub fn kernel_closed_form(&self, w: Complex64) -> ModelElement<'_> {
        let e = self.e();
        let es = self.hb.sharp();
        let numerator = EntireFunction::combination(vec![
            (e.eval(w).conj(), e.clone()),
            (-es.eval(w).conj(), es.clone()),
        ]);
        let scale = -1.0 / Complex64::new(0.0, 2.0 * PI);
        self.wrap(EntireFunction::divided_difference(numerator, w.conj()).scaled(scale))
    }

    pub fn kernel(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.kernel_function(w).eval(z)
    }

    /// `-i sqrt(pi / (k(w0,w0) Im w0)) (z - conj w0) k(z, w0)`.
    pub fn e_from_kernel(&self, w0: Complex64) -> Result<EntireFunction, SpaceError> {
        if !(w0.im > 0.0) {
            return Err(SpaceError::NotUpperHalfPlane(w0));
        }
        let k = self.kernel_function(w0);
        let kww = k.eval(w0).re;
        if !(kww > 1e-14) {
            return Err(SpaceError::DegenerateKernel { w0, value: kww });
        }
        let c = Complex64::new(0.0, -1.0) * (PI / (kww * w0.im)).sqrt();
        let linear = EntireFunction::polynomial(vec![-c * w0.conj(), c]);
        Ok(EntireFunction::product(linear, k.into_function()))
    }

    /// Zeros of `s_beta` in `[a, b]`.
    ///
    /// In a finite space the result is marked finite when the interval
    /// contains the Cauchy root bound.
    pub fn spectrum(&self, beta: f64, a: f64, b: f64) -> Result<ZeroSequence, SpaceError> {
        let s = self.s_beta(beta);
        let e = self.e();
        let roots = real_zeros(
            |x| s.eval_real(x),
            |x| e.eval_real(x).norm(),
            a,
            b,
            &self.scan,
        )?;
        let complete = s
            .function()
            .coefficients()
            .and_then(root_bound)
            .is_some_and(|r| a < -r && b > r);
        let extent = if complete { Extent::Finite } else { Extent::Truncated };
        ZeroSequence::new(roots, extent)
            .map_err(|err| SpaceError::InvalidDescriptor(format!("root scan produced {err}")))
    }

    /// All zeros of `s_beta` in a finite space; `None` for infinite ones.
    pub fn full_spectrum(&self, beta: f64) -> Result<Option<ZeroSequence>, SpaceError> {
        self.basis.as_ref().map_or(Ok(None), |_| {
            let s = self.s_beta(beta);
            let r = s.function().coefficients().and_then(root_bound).unwrap_or(1.0);
            self.spectrum(beta, -r - 1.0, r + 1.0).map(Some)
        })
    }
}

/// Cauchy bound `1 + max |c_k / c_n|` on the moduli of polynomial roots.
fn root_bound(coeffs: &[Complex64]) -> Option<f64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let lead = coeffs.iter().rposition(|c| c.norm() > 1e-14 * scale)?;
    let cn = coeffs[lead].norm();
    Some(1.0 + coeffs[..lead].iter().map(|c| c.norm() / cn).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly_space() -> DeBrangesSpace {
        DeBrangesSpace::polynomial(2).unwrap()
    }

    fn pw() -> DeBrangesSpace {
        DeBrangesSpace::paley_wiener(PI).unwrap()
    }

    #[test]
    fn descriptor_json() {
        let d: SpaceDescriptor = serde_json::from_str(r#"{"kind":"polynomial","N":2}"#).unwrap();
        assert_eq!(d, SpaceDescriptor::Polynomial { n: 2 });
        let d: SpaceDescriptor = serde_json::from_str(r#"{"kind":"paley-wiener","a":1.5}"#).unwrap();
        assert_eq!(d, SpaceDescriptor::PaleyWiener { a: 1.5 });
        let d: SpaceDescriptor = serde_json::from_str(
            r#"{"kind":"custom","e":{"variant":"exp","params":{"rate":2.0}}}"#,
        )
        .unwrap();
        assert_eq!(d, SpaceDescriptor::Custom { e: EntireFunction::exp(2.0) });
        assert!(DeBrangesSpace::paley_wiener(-1.0).is_err());
        assert!(DeBrangesSpace::polynomial(0).is_err());
    }

    #[test]
    fn polynomial_space_inner_products() {
        let s = poly_space();
        assert_eq!(s.dimension(), Some(2));
        let one = s.element(EntireFunction::constant(ONE)).unwrap();
        let z = s.element(EntireFunction::identity()).unwrap();
        assert!((one.inner(&one).unwrap() - c(PI / 2.0, 0.0)).norm() < 1e-12);
        assert!(one.inner(&z).unwrap().norm() < 1e-14);
        assert!((z.inner(&z).unwrap() - c(PI / 2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quadrature_route_agrees_with_gram() {
        let s = poly_space();
        // a Combination wrapper forces the quadrature route
        let f = s
            .element(EntireFunction::Combination {
                terms: vec![(c(1.0, 1.0), EntireFunction::identity())],
            })
            .unwrap();
        let g = s.element(EntireFunction::real_polynomial(&[2.0, -1.0])).unwrap();
        let quad = f.inner(&g).unwrap();
        // conj(1 + i) * (-1) * pi/2
        let exact = c(1.0, -1.0) * c(-PI / 2.0, 0.0);
        assert!((quad - exact).norm() < 1e-7, "{quad}");
    }

    #[test]
    fn polynomial_kernel() {
        let s = poly_space();
        assert!((s.kernel(c(0.0, 1.0), c(0.0, 1.0)) - c(4.0 / PI, 0.0)).norm() < 1e-10);
        let (z, w) = (c(0.3, -1.2), c(-0.7, 0.4));
        let expect = (ONE + z * w.conj()) * (2.0 / PI);
        assert!((s.kernel(z, w) - expect).norm() < 1e-10);
        let closed = s.kernel_closed_form(w).eval(z);
        assert!((closed - expect).norm() < 1e-12);
    }

    #[test]
    fn paley_wiener_kernel_is_sinc() {
        let s = pw();
        for x in [0.0, 0.5, 1.0, -2.25] {
            let v = s.kernel(c(x, 0.0), c(x, 0.0));
            assert!((v - ONE).norm() < 1e-12, "{x}: {v}");
        }
        let (z, w) = (c(0.4, 0.3), c(-1.1, 0.6));
        let u = z - w.conj();
        let expect = (u * PI).sin() / (u * PI);
        assert!((s.kernel(z, w) - expect).norm() < 1e-13);
    }

    #[test]
    fn kernel_reproduces_in_paley_wiener() {
        let s = pw();
        let w = c(0.3, 0.5);
        let k = s.kernel_function(w);
        let f = s.kernel_function(c(-0.8, 0.2));
        let spec = s.tight_quadrature();
        let v = s.inner_with(&k, &f, &spec).unwrap();
        assert!((v - f.eval(w)).norm() < 1e-8, "{v} vs {}", f.eval(w));
    }

    #[test]
    fn e_from_kernel_polynomial() {
        let s = poly_space();
        let e = s.e_from_kernel(c(0.0, 1.0)).unwrap();
        let got = e.coefficients().unwrap();
        let want = [c(1.0, 0.0), c(0.0, -2.0), c(-1.0, 0.0)];
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).norm() < 1e-10, "{got:?}");
        }
        assert!(matches!(
            s.e_from_kernel(c(1.0, 0.0)),
            Err(SpaceError::NotUpperHalfPlane(_))
        ));
    }

    #[test]
    fn spectra() {
        let p = poly_space();
        let sp = p.spectrum(PI / 2.0, -3.0, 3.0).unwrap();
        assert_eq!(sp.extent(), Extent::Finite);
        assert!((sp.values()[0] + 1.0).abs() < 1e-12 && (sp.values()[1] - 1.0).abs() < 1e-12);
        let s0 = p.full_spectrum(0.0).unwrap().unwrap();
        assert_eq!(s0.len(), 1);
        assert!(s0.values()[0].abs() < 1e-12);

        let w = pw();
        let sp = w.spectrum(0.0, -2.5, 2.5).unwrap();
        assert_eq!(sp.extent(), Extent::Truncated);
        assert_eq!(sp.len(), 5);
        for (v, k) in sp.values().iter().zip(-2..=2) {
            assert!((v - k as f64).abs() < 1e-12);
        }
        assert!(w.full_spectrum(0.0).unwrap().is_none());
    }

    #[test]
    fn membership_by_coordinates() {
        let s = poly_space();
        let one = s.element(EntireFunction::constant(ONE)).unwrap();
        assert_eq!(s.membership_residual(&one), Some(0.0));
        let z2 = s.element(EntireFunction::real_polynomial(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(s.membership_residual(&z2), Some(1.0));
        let wrapped = s
            .element(EntireFunction::Combination {
                terms: vec![(ONE, EntireFunction::real_polynomial(&[3.0, -2.0]))],
            })
            .unwrap();
        let (coords, tail) = s.coordinates(&wrapped).unwrap();
        assert!(tail < 1e-14);
        assert!((coords[0] - c(3.0, 0.0)).norm() < 1e-14);
        assert!((coords[1] - c(-2.0, 0.0)).norm() < 1e-14);
        let exp = s.element(EntireFunction::exp(1.0)).unwrap();
        assert!(s.membership_residual(&exp).unwrap() > 1e-3);
    }
}
