//! Operators of the functional model: resolvents of the selfadjoint
//! extensions `S_beta`, eigenfunctions, deficiency elements, the generalized
//! Cayley transfer between deficiency spaces and the `xi` gauge family.
//!
//! With `s = s_beta`, the resolvent is
//! `(S_beta - w)^{-1} f = [f - (f(w)/s(w)) s] / (z - w)`, which is a divided
//! difference because the bracket vanishes at `w`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{DeBrangesSpace, ModelElement, SpaceError, EIGENVALUE_TOL, MEMBERSHIP_TOL, SPECTRUM_POINT_TOL};
use crate::entire::EntireFunction;
use crate::hermite::reduce_angle;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Real seed of the `xi` family: `psi` spans `Ker(S* - v)` and is real entire.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiSeed {
    pub gamma: f64,
    pub v: f64,
    /// Angle of the extension that has `v` as an eigenvalue.
    pub beta_v: f64,
    pub psi: EntireFunction,
}

/// Outcome of the search for `s_gamma` inside the space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DomainComplement {
    /// `(gamma, witness)` when some `s_gamma` is a member.
    pub found: Option<(f64, EntireFunction)>,
    /// Per candidate angle: basis residual (finite spaces) or the ratio of
    /// the last two truncated norms (about 2 for linear divergence).
    pub trace: Vec<(f64, f64)>,
}

impl DeBrangesSpace {
    fn spectrum_point_check(&self, beta: f64, w: Complex64) -> Result<Complex64, SpaceError> {
        let s = self.s_beta(beta);
        let sw = s.eval(w);
        if sw.norm() <= SPECTRUM_POINT_TOL * self.e().eval(w).norm() {
            return Err(SpaceError::SpectrumPoint {
                beta: s.beta(),
                w,
                value: sw,
            });
        }
        Ok(sw)
    }

    /// `(S_beta - w)^{-1} f`.
    pub fn resolvent<'s>(
        &'s self,
        beta: f64,
        w: Complex64,
        f: &ModelElement<'_>,
    ) -> Result<ModelElement<'s>, SpaceError> {
        let sw = self.spectrum_point_check(beta, w)?;
        let s = self.s_beta(beta);
        let bracket = EntireFunction::combination(vec![
            (ONE, f.function().clone()),
            (-f.eval(w) / sw, s.into_function()),
        ]);
        Ok(self.wrap(EntireFunction::divided_difference(bracket, w)))
    }

    /// `[(S_beta - w)^{-1} f](z)`; at `z = w` this is the removable value
    /// `f'(w) - s'(w) f(w) / s(w)`.
    pub fn resolvent_apply(
        &self,
        beta: f64,
        w: Complex64,
        f: &ModelElement<'_>,
        z: Complex64,
    ) -> Result<Complex64, SpaceError> {
        Ok(self.resolvent(beta, w, f)?.eval(z))
    }

    /// `g_x = s_beta / (z - x)` for a zero `x` of `s_beta`.
    pub fn eigenfunction(&self, beta: f64, x: f64) -> Result<ModelElement<'_>, SpaceError> {
        let s = self.s_beta(beta);
        let residual = s.eval_real(x).abs();
        if residual > EIGENVALUE_TOL * self.e().eval_real(x).norm() {
            return Err(SpaceError::InvalidEigenvalue {
                beta: s.beta(),
                x,
                residual,
            });
        }
        Ok(self.wrap(EntireFunction::divided_difference(
            s.into_function(),
            Complex64::new(x, 0.0),
        )))
    }

    /// `k(., conj w)`, spanning `Ker(S* - w)`. It is orthogonal to
    /// `(z - conj w) f` for every `f` in the domain of multiplication.
    pub fn deficiency_element(&self, w: Complex64) -> ModelElement<'_> {
        self.kernel_function(w.conj())
    }

    /// `[I + (z - v)(S_gamma - z)^{-1}] phi`, which maps `Ker(S* - v)` onto
    /// `Ker(S* - z)`.
    pub fn cayley_transfer<'s>(
        &'s self,
        gamma: f64,
        z: Complex64,
        v: Complex64,
        phi: &ModelElement<'_>,
    ) -> Result<ModelElement<'s>, SpaceError> {
        if z == v {
            return Ok(self.wrap(phi.function().clone()));
        }
        let r = self.resolvent(gamma, z, phi)?;
        Ok(self.wrap(EntireFunction::combination(vec![
            (ONE, phi.function().clone()),
            (z - v, r.into_function()),
        ])))
    }

    /// `||f - c g|| / ||f||` with `c = f(p)/g(p)` taken at the sample point
    /// where `|g|` is largest; zero iff `f` is a multiple of `g`.
    pub fn collinearity_residual(
        &self,
        f: &ModelElement<'_>,
        g: &ModelElement<'_>,
    ) -> Result<f64, SpaceError> {
        let samples = [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.5),
            Complex64::new(-0.5, 0.5),
            Complex64::new(0.5, -0.5),
            Complex64::new(-0.5, -0.5),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
        ];
        let p = samples
            .iter()
            .copied()
            .max_by(|a, b| g.eval(*a).norm().partial_cmp(&g.eval(*b).norm()).unwrap())
            .unwrap();
        let c = f.eval(p) / g.eval(p);
        let r = f.add_scaled(-c, g);
        let nf = f.norm()?;
        Ok(if nf > 0.0 { r.norm()? / nf } else { r.norm()? })
    }

    /// Seed for [`DeBrangesSpace::xi_gauge`]: the eigenfunction at `v` of the
    /// extension `S_{beta_v}` with `s_{beta_v}(v) = 0`. The point `v` must not
    /// be in the spectrum of `S_gamma`. An eigenfunction of `S_gamma` itself
    /// would be annihilated by the transfer operator.
    pub fn xi_seed(&self, gamma: f64, v: f64) -> Result<XiSeed, SpaceError> {
        let gamma = reduce_angle(gamma);
        let sv = self.s_beta(gamma).eval_real(v);
        if !v.is_finite() || sv.abs() <= EIGENVALUE_TOL * self.e().eval_real(v).norm() {
            return Err(SpaceError::InvalidSeed {
                gamma,
                v,
                reason: format!("s_gamma(v) = {sv:.3e}; v must lie off the spectrum of S_gamma"),
            });
        }
        let beta_v = self.beta_at(v)?;
        let psi = self.eigenfunction(beta_v, v)?.into_function();
        Ok(XiSeed {
            gamma,
            v,
            beta_v,
            psi,
        })
    }

    /// The Cayley family built from a seed, `psi(z) = T_{z <- v} psi_v`; it is
    /// defined for `s_gamma(z) != 0`.
    pub fn seed_family(&self, seed: &XiSeed, z: Complex64) -> Result<ModelElement<'_>, SpaceError> {
        let psi = self.wrap(seed.psi.clone());
        self.cayley_transfer(seed.gamma, z, Complex64::new(seed.v, 0.0), &psi)
    }

    /// `xi(z) = s_gamma(z) [I + (z - v)(S_gamma - z)^{-1}] psi_v`, written so
    /// that it stays entire in `z` across the zeros of `s_gamma`:
    /// `xi(z) = s_gamma(z) psi_v + (z - v) DD{s_gamma(z) psi_v - psi_v(z) s_gamma, z}`.
    pub fn xi_gauge(&self, seed: &XiSeed, z: Complex64) -> ModelElement<'_> {
        let s = self.s_beta(seed.gamma);
        let sz = s.eval(z);
        let pz = seed.psi.eval(z);
        let bracket = EntireFunction::combination(vec![
            (sz, seed.psi.clone()),
            (-pz, s.into_function()),
        ]);
        self.wrap(EntireFunction::combination(vec![
            (sz, seed.psi.clone()),
            (z - seed.v, EntireFunction::divided_difference(bracket, z)),
        ]))
    }

    /// `<xi(conj z), f>`, the model image of `f` under the gauge.
    pub fn xi_pairing(
        &self,
        seed: &XiSeed,
        z: Complex64,
        f: &ModelElement<'_>,
    ) -> Result<Complex64, SpaceError> {
        let xi = self.xi_gauge(seed, z.conj());
        self.inner_with(&xi, f, &self.tight_quadrature())
    }

    /// Looks for an angle whose `s_gamma` lies in the space. Finite spaces
    /// have exactly one candidate, the angle that cancels the leading
    /// coefficient of `e`. Other spaces are screened on `grid` equally spaced
    /// angles by the growth of truncated norms.
    pub fn domain_orthocomplement(&self, grid: usize) -> Result<DomainComplement, SpaceError> {
        if let Some(coeffs) = self.e().coefficients() {
            let lead = coeffs[coeffs.len() - 1];
            let gamma = reduce_angle(-lead.arg());
            let witness = self.s_beta(gamma).into_function();
            let residual = self
                .membership_residual(&self.wrap(witness.clone()))
                .unwrap_or(f64::INFINITY);
            let scale = witness
                .coefficients()
                .map_or(1.0, |c| c.iter().map(|v| v.norm()).fold(0.0, f64::max));
            let found = (residual <= MEMBERSHIP_TOL * scale.max(1.0)).then_some((gamma, witness));
            return Ok(DomainComplement {
                found,
                trace: vec![(gamma, residual)],
            });
        }
        let mut trace = Vec::with_capacity(grid);
        let mut found = None;
        for k in 0..grid {
            let gamma = PI * k as f64 / grid as f64;
            let witness = self.s_beta(gamma).into_function();
            let norms = self.partial_norms(&witness, 6)?;
            let n = norms.len();
            let growth = norms[n - 1].1 / norms[n - 2].1;
            trace.push((gamma, growth));
            if found.is_none() && (growth - 1.0).abs() < 1e-3 {
                found = Some((gamma, witness));
            }
        }
        Ok(DomainComplement { found, trace })
    }

    /// The isometry `f -> f (z - conj w)/(z - w)` of the space for an element with `f(w) = 0`.
    pub fn zero_reflection<'s>(
        &'s self,
        f: &ModelElement<'_>,
        w: Complex64,
    ) -> Result<ModelElement<'s>, SpaceError> {
        let fw = f.eval(w);
        let scale = self.kernel(w, w).re.sqrt() * f.norm()?;
        if fw.norm() > 1e-10 * scale.max(1e-300) {
            return Err(SpaceError::NotVanishing { w, value: fw });
        }
        let linear = EntireFunction::polynomial(vec![-w.conj(), ONE]);
        Ok(self.wrap(EntireFunction::product(
            linear,
            EntireFunction::divided_difference(f.function().clone(), w),
        )))
    }

    /// `f - (f(w)/k(w,w)) k(., w)`, the projection of `f` onto the elements
    /// that vanish at `w`.
    pub fn vanishing_at<'s>(&'s self, f: &ModelElement<'_>, w: Complex64) -> ModelElement<'s> {
        let k = self.kernel_function(w);
        let c = -f.eval(w) / k.eval(w);
        self.wrap(EntireFunction::combination(vec![
            (ONE, f.function().clone()),
            (c, k.into_function()),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly() -> DeBrangesSpace {
        DeBrangesSpace::polynomial(2).unwrap()
    }

    fn pw() -> DeBrangesSpace {
        DeBrangesSpace::paley_wiener(PI).unwrap()
    }

    #[test]
    fn resolvent_of_z_is_one() {
        let s = poly();
        let z = s.element(EntireFunction::identity()).unwrap();
        let r = s.resolvent(PI / 2.0, c(0.0, 0.0), &z).unwrap();
        for p in [c(0.0, 0.0), c(1.5, -2.0), c(-3.0, 0.1)] {
            assert!((r.eval(p) - ONE).norm() < 1e-12);
        }
    }

    #[test]
    fn resolvent_at_spectrum_point_errors() {
        let s = pw();
        let f = s.kernel_function(c(0.0, 1.0));
        assert!(matches!(
            s.resolvent(0.0, c(0.0, 0.0), &f),
            Err(SpaceError::SpectrumPoint { .. })
        ));
    }

    #[test]
    fn resolvent_removable_value() {
        let s = pw();
        let f = s.kernel_function(c(0.2, 0.7));
        let w = c(0.3, 0.4);
        let sb = s.s_beta(0.0);
        let (fw, dfw) = f.function().eval_with_derivative(w);
        let (sw, dsw) = sb.function().eval_with_derivative(w);
        let expect = dfw - dsw * fw / sw;
        let got = s.resolvent_apply(0.0, w, &f, w).unwrap();
        assert!((got - expect).norm() < 1e-10, "{got} vs {expect}");
    }

    #[test]
    fn resolvent_identity_pointwise() {
        let s = pw();
        let f = s.kernel_function(c(0.0, 1.0));
        let (w1, w2) = (c(0.0, 1.0), c(0.0, 2.0));
        let r1 = s.resolvent(0.0, w1, &f).unwrap();
        let r2 = s.resolvent(0.0, w2, &f).unwrap();
        let r12 = s.resolvent(0.0, w1, &r2).unwrap();
        for p in [c(0.3, 0.0), c(-1.2, 0.5), c(2.0, -0.4)] {
            let lhs = r1.eval(p) - r2.eval(p);
            let rhs = (w1 - w2) * r12.eval(p);
            assert!((lhs - rhs).norm() < 1e-10, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn eigenfunctions() {
        let s = poly();
        let close = |got: &[Complex64], want: [Complex64; 2]| {
            got.len() == 2 && got.iter().zip(want).all(|(g, w)| (g - w).norm() < 1e-15)
        };
        let g = s.eigenfunction(PI / 2.0, 1.0).unwrap();
        assert!(close(g.function().coefficients().unwrap(), [ONE, ONE]));
        let g = s.eigenfunction(PI / 2.0, -1.0).unwrap();
        assert!(close(g.function().coefficients().unwrap(), [-ONE, ONE]));
        assert!(matches!(
            s.eigenfunction(PI / 2.0, 0.5),
            Err(SpaceError::InvalidEigenvalue { .. })
        ));
        let p = pw();
        let g = p.eigenfunction(0.0, 0.0).unwrap();
        assert!((g.eval(c(0.0, 0.0)) - c(PI, 0.0)).norm() < 1e-12);
        let z = c(0.7, 0.2);
        assert!((g.eval(z) - (z * PI).sin() / z).norm() < 1e-12);
    }

    #[test]
    fn deficiency_orthogonality() {
        let s = poly();
        let d = s.deficiency_element(c(0.0, 0.0));
        assert!((d.eval(c(5.0, 1.0)) - c(2.0 / PI, 0.0)).norm() < 1e-12);
        let z = s.element(EntireFunction::identity()).unwrap();
        assert!(d.inner(&z).unwrap().norm() < 1e-12);
        // dom(S) = span{1}; check (z - conj w) * 1 for non-real w
        let w = c(0.4, 0.9);
        let d = s.deficiency_element(w);
        let g = s.element(EntireFunction::polynomial(vec![-w.conj(), ONE])).unwrap();
        assert!(d.inner(&g).unwrap().norm() < 1e-12);
    }

    #[test]
    fn cayley_transfer_polynomial() {
        let s = poly();
        let (v, z) = (c(0.0, 1.0), c(0.0, 2.0));
        let phi = s.deficiency_element(v);
        let psi = s.cayley_transfer(PI / 2.0, z, v, &phi).unwrap();
        let target = s.deficiency_element(z);
        assert!(s.collinearity_residual(&psi, &target).unwrap() < 1e-12);
        let back = s.cayley_transfer(PI / 2.0, v, z, &psi).unwrap();
        for p in [c(0.0, 0.0), c(1.0, 1.0)] {
            assert!((back.eval(p) - phi.eval(p)).norm() < 1e-12);
        }
        let same = s.cayley_transfer(PI / 2.0, v, v, &phi).unwrap();
        assert_eq!(same.function(), phi.function());
    }

    #[test]
    fn xi_gauge_polynomial() {
        let s = poly();
        assert!(matches!(
            s.xi_seed(PI / 2.0, 1.0),
            Err(SpaceError::InvalidSeed { .. })
        ));
        let seed = s.xi_seed(PI / 2.0, 0.0).unwrap();
        // s_{pi/2}(0) = -1, the seed is the eigenfunction 2 of s_0 = 2z at 0
        assert!((seed.beta_v).abs() < 1e-15);
        let at_v = s.xi_gauge(&seed, c(0.0, 0.0));
        assert!((at_v.eval(c(3.0, 0.0)) - c(-2.0, 0.0)).norm() < 1e-12);
        // across the spectrum point z = 1 the family stays finite and non-zero
        let at_1 = s.xi_gauge(&seed, c(1.0, 0.0));
        assert!(at_1.norm().unwrap() > 0.1);
        for z in [c(0.3, 0.8), c(-1.4, -0.2)] {
            let a = s.xi_gauge(&seed, z).sharp();
            let b = s.xi_gauge(&seed, z.conj());
            for p in [c(0.0, 0.0), c(1.0, -1.0)] {
                assert!((a.eval(p) - b.eval(p)).norm() < 1e-12);
            }
            // xi(z) spans Ker(S* - z), i.e. is a multiple of k(., conj z)
            let d = s.deficiency_element(z);
            assert!(s.collinearity_residual(&s.xi_gauge(&seed, z), &d).unwrap() < 1e-12);
        }
    }

    #[test]
    fn domain_complement_polynomial() {
        let s = poly();
        let dc = s.domain_orthocomplement(64).unwrap();
        let (gamma, w) = dc.found.unwrap();
        assert!(gamma.abs() < 1e-15);
        let coeffs = w.coefficients().unwrap();
        assert!((coeffs[1] - c(2.0, 0.0)).norm() < 1e-15 && coeffs[0].norm() < 1e-15);
        assert!(coeffs.len() < 3 || coeffs[2].norm() < 1e-15);
    }

    #[test]
    fn zero_reflection_and_sharp_are_isometries_polynomial() {
        let s = poly();
        let w = c(0.5, 1.5);
        let f = s.element(EntireFunction::polynomial(vec![c(1.0, 2.0), c(-0.5, 0.3)])).unwrap();
        let g = s.vanishing_at(&f, w);
        assert!(g.eval(w).norm() < 1e-12);
        let h = s.zero_reflection(&g, w).unwrap();
        assert!((h.norm().unwrap() - g.norm().unwrap()).abs() < 1e-12);
        assert!((f.sharp().norm().unwrap() - f.norm().unwrap()).abs() < 1e-12);
        assert!(matches!(
            s.zero_reflection(&f, w),
            Err(SpaceError::NotVanishing { .. })
        ));
    }
}
