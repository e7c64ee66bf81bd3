//! Single-mode Gaussian states as (mean vector, covariance matrix) pairs.
//!
//! Convention: the vacuum covariance is the identity and a coherent state of
//! mean photon number `n0` has mean `(2*sqrt(n0), 0)`. In these units a
//! thermal state of occupation `n` has covariance `(2n+1)*I` and the
//! uncertainty relation reads `det(cov) >= 1`.

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};

/// Absolute tolerance for state validity checks (symmetry, uncertainty).
pub const STATE_TOL: f64 = 1e-12;

/// A single-mode Gaussian state: quadrature means and a 2x2 covariance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    mean: Vector2<f64>,
    cov: Matrix2<f64>,
}

impl GaussianState {
    /// Builds a state after checking symmetry, positive diagonals and the
    /// uncertainty relation `det(cov) >= 1 - STATE_TOL`.
    pub fn new(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<Self> {
        if !(mean.iter().all(|m| m.is_finite()) && cov.iter().all(|c| c.is_finite())) {
            return Err(Error::NonPositiveVariance);
        }
        let skew = (cov[(0, 1)] - cov[(1, 0)]).abs();
        if skew > STATE_TOL {
            return Err(Error::AsymmetricCovariance(skew));
        }
        if cov[(0, 0)] <= 0.0 || cov[(1, 1)] <= 0.0 {
            return Err(Error::NonPositiveVariance);
        }
        let det = cov.determinant();
        if det < 1.0 - STATE_TOL {
            return Err(Error::UncertaintyViolation(det));
        }
        Ok(Self { mean, cov })
    }

    /// Vacuum state: zero mean, identity covariance.
    pub fn vacuum() -> Self {
        Self {
            mean: Vector2::zeros(),
            cov: Matrix2::identity(),
        }
    }

    /// Coherent state of mean photon number `n0`, displaced along q.
    pub fn coherent(n0: f64) -> Result<Self> {
        if !n0.is_finite() || n0 < 0.0 {
            return Err(Error::InvalidPhotonNumber(n0));
        }
        Ok(Self {
            mean: Vector2::new(2.0 * n0.sqrt(), 0.0),
            cov: Matrix2::identity(),
        })
    }

    /// Squeezed vacuum with covariance `diag(e^{2s}, e^{-2s})`.
    ///
    /// The anti-squeezed quadrature is q; the mean photon number is sinh^2(s).
    pub fn squeezed(s: f64) -> Self {
        assert!(s.is_finite(), "squeezing parameter must be finite");
        let up = (2.0 * s).exp();
        assert!(up.is_finite() && up > 0.0, "squeezing parameter too large");
        Self {
            mean: Vector2::zeros(),
            cov: Matrix2::new(up, 0.0, 0.0, 1.0 / up),
        }
    }

    /// Thermal state of mean occupation `n0`: covariance `(2*n0+1)*I`.
    pub fn thermal(n0: f64) -> Result<Self> {
        if !n0.is_finite() || n0 < 0.0 {
            return Err(Error::InvalidPhotonNumber(n0));
        }
        Ok(Self {
            mean: Vector2::zeros(),
            cov: Matrix2::identity() * (2.0 * n0 + 1.0),
        })
    }

    pub fn mean(&self) -> Vector2<f64> {
        self.mean
    }

    pub fn cov(&self) -> Matrix2<f64> {
        self.cov
    }

    /// Mean photon number `(tr(cov) - 2)/4 + |mean|^2/4`.
    pub fn mean_photon_number(&self) -> f64 {
        (self.cov.trace() - 2.0) / 4.0 + self.mean.norm_squared() / 4.0
    }

    /// Purity `1/sqrt(det(cov))`, in (0, 1] with 1 for pure states.
    pub fn purity(&self) -> f64 {
        1.0 / self.cov.determinant().sqrt()
    }

    /// Mean and variance of the rotated quadrature `cos(theta) q + sin(theta) p`.
    pub fn quadrature_stats(&self, theta: f64) -> (f64, f64) {
        let u = Vector2::new(theta.cos(), theta.sin());
        let mean = u.dot(&self.mean);
        let var = u.dot(&(self.cov * u));
        (mean, var)
    }
}

/// Uhlmann fidelity (squared-overlap convention) of two single-mode Gaussian
/// states:
///
/// ```text
/// F = 2 exp(-1/2 d^T (Sa+Sb)^-1 d) / (sqrt(D + L) - sqrt(L))
/// D = det(Sa+Sb),  L = (det Sa - 1)(det Sb - 1)
/// ```
///
/// The denominator is evaluated as `D / (sqrt(D+L) + sqrt(L))` so that highly
/// mixed, nearly identical states do not cancel catastrophically.
pub fn fidelity(a: &GaussianState, b: &GaussianState) -> Result<f64> {
    if a == b {
        return Ok(1.0);
    }
    let sum = a.cov + b.cov;
    let big_delta = sum.determinant();
    let inv = sum.try_inverse().ok_or(Error::SingularCovariance)?;
    if !(big_delta > 0.0) {
        return Err(Error::SingularCovariance);
    }
    let lambda = ((a.cov.determinant() - 1.0) * (b.cov.determinant() - 1.0)).max(0.0);
    let delta = b.mean - a.mean;
    let exponent = -0.5 * delta.dot(&(inv * delta));
    let f = 2.0 * exponent.exp() * ((big_delta + lambda).sqrt() + lambda.sqrt()) / big_delta;
    Ok(f.clamp(0.0, 1.0))
}

/// A quasi-monochromatic wave-packet mode, optionally carrying a temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec {
    omega: f64,
    temperature: Option<f64>,
}

impl ModeSpec {
    pub fn new(omega: f64, temperature: Option<f64>) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidFrequency(omega));
        }
        if let Some(t) = temperature {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::InvalidTemperature(t));
            }
        }
        Ok(Self { omega, temperature })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn temperature(&self) -> Option<f64> {
        self.temperature
    }
}

/// Bose-Einstein occupation `n = 1/(e^{omega/T} - 1)` of a mode at temperature T.
pub fn thermal_number_from_temperature(mode: &ModeSpec) -> Result<f64> {
    let t = mode.temperature.ok_or(Error::MissingTemperature)?;
    Ok(1.0 / (mode.omega / t).exp_m1())
}

/// Inverse of [`thermal_number_from_temperature`]: `T = omega / ln(1 + 1/n)`.
pub fn temperature_from_thermal_number(omega: f64, nbar: f64) -> Result<f64> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::InvalidFrequency(omega));
    }
    if !nbar.is_finite() || nbar <= 0.0 {
        return Err(Error::InvalidOccupation(nbar));
    }
    Ok(omega / (1.0 / nbar).ln_1p())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn vacuum_is_pure_and_empty() {
        let v = GaussianState::vacuum();
        assert_eq!(v.mean(), Vector2::zeros());
        assert_eq!(v.cov(), Matrix2::identity());
        assert_eq!(v.cov().determinant(), 1.0);
        assert_eq!(v.mean_photon_number(), 0.0);
        assert_eq!(v.purity(), 1.0);
    }

    #[test]
    fn coherent_displacement_convention() {
        let c = GaussianState::coherent(4.0).unwrap();
        assert_abs_diff_eq!(c.mean()[0], 4.0, epsilon = 1e-15);
        assert_eq!(c.mean()[1], 0.0);
        assert_eq!(c.cov(), Matrix2::identity());
        assert_eq!(GaussianState::coherent(0.0).unwrap(), GaussianState::vacuum());
        assert_relative_eq!(
            GaussianState::coherent(10.0).unwrap().mean_photon_number(),
            10.0,
            max_relative = 1e-14
        );
        assert!(matches!(
            GaussianState::coherent(-1.0),
            Err(Error::InvalidPhotonNumber(_))
        ));
    }

    #[test]
    fn squeezed_covariance_and_energy() {
        assert_eq!(GaussianState::squeezed(0.0), GaussianState::vacuum());
        let s = GaussianState::squeezed(1.0);
        assert_relative_eq!(s.cov()[(0, 0)], f64::exp(2.0), max_relative = 1e-15);
        assert_relative_eq!(s.cov()[(1, 1)], f64::exp(-2.0), max_relative = 1e-15);
        assert_relative_eq!(s.cov().determinant(), 1.0, max_relative = 1e-12);

        // mean photon number is sinh^2(s)
        let s10 = GaussianState::squeezed(10.0_f64.sqrt().asinh());
        assert_relative_eq!(s10.mean_photon_number(), 10.0, max_relative = 1e-12);
        for s in [-1.5, -0.3, 0.7, 2.0] {
            let state = GaussianState::squeezed(s);
            assert_relative_eq!(
                state.mean_photon_number(),
                s.sinh().powi(2),
                max_relative = 1e-12,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn thermal_covariance_and_purity() {
        assert_eq!(GaussianState::thermal(0.0).unwrap(), GaussianState::vacuum());
        let t = GaussianState::thermal(1.0).unwrap();
        assert_eq!(t.cov(), Matrix2::identity() * 3.0);
        assert_relative_eq!(t.purity(), 1.0 / 3.0, max_relative = 1e-14);
        assert_eq!(GaussianState::thermal(2.0).unwrap().mean_photon_number(), 2.0);
        assert!(GaussianState::thermal(-0.1).is_err());
    }

    #[test]
    fn photon_number_matches_constructor_argument_on_grid() {
        for n0 in [0.0, 0.1, 1.0, 10.0, 100.0] {
            assert_abs_diff_eq!(
                GaussianState::coherent(n0).unwrap().mean_photon_number(),
                n0,
                epsilon = 1e-12 * (1.0 + n0)
            );
            assert_abs_diff_eq!(
                GaussianState::thermal(n0).unwrap().mean_photon_number(),
                n0,
                epsilon = 1e-12 * (1.0 + n0)
            );
        }
    }

    #[test]
    fn constructor_outputs_satisfy_state_invariants() {
        let states = [
            GaussianState::vacuum(),
            GaussianState::coherent(7.3).unwrap(),
            GaussianState::squeezed(-1.2),
            GaussianState::thermal(4.5).unwrap(),
        ];
        for st in states {
            assert_eq!(st.cov()[(0, 1)], st.cov()[(1, 0)]);
            assert!(st.cov().determinant() >= 1.0 - STATE_TOL);
            assert!(st.purity() > 0.0 && st.purity() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn state_validation_rejects_bad_covariances() {
        let m = Vector2::zeros();
        assert!(matches!(
            GaussianState::new(m, Matrix2::new(1.0, 0.5, -0.5, 1.0)),
            Err(Error::AsymmetricCovariance(_))
        ));
        assert!(matches!(
            GaussianState::new(m, Matrix2::new(0.5, 0.0, 0.0, 0.5)),
            Err(Error::UncertaintyViolation(_))
        ));
        assert!(matches!(
            GaussianState::new(m, Matrix2::new(-1.0, 0.0, 0.0, -2.0)),
            Err(Error::NonPositiveVariance)
        ));
    }

    // Fock-basis oracle: the overlap of the vacuum with a thermal state of
    // occupation n is the ground-state weight of the geometric photon
    // distribution, 1/(n+1).
    fn vacuum_thermal_overlap(n: f64) -> f64 {
        1.0 / (n + 1.0)
    }

    #[test]
    fn fidelity_vacuum_thermal_matches_fock_oracle() {
        for n in [0.5, 1.0, 2.0] {
            let f = fidelity(&GaussianState::vacuum(), &GaussianState::thermal(n).unwrap()).unwrap();
            assert_abs_diff_eq!(f, vacuum_thermal_overlap(n), epsilon = 1e-12);
        }
    }

    #[test]
    fn fidelity_vacuum_coherent_matches_overlap_oracle() {
        // |<0|alpha>|^2 = e^{-|alpha|^2} with |alpha|^2 = n0
        for n0 in [0.25, 1.0, 3.0] {
            let f = fidelity(&GaussianState::vacuum(), &GaussianState::coherent(n0).unwrap()).unwrap();
            assert_abs_diff_eq!(f, (-n0).exp(), epsilon = 1e-12);
        }
    }

    #[test]
    fn fidelity_opposite_squeezing_matches_overlap_oracle() {
        // |<s|-s>|^2 = 1/cosh(2s) for squeezed vacua of opposite sign
        for s in [0.3, 0.9, 1.5] {
            let f = fidelity(&GaussianState::squeezed(s), &GaussianState::squeezed(-s)).unwrap();
            assert_relative_eq!(f, 1.0 / (2.0 * s).cosh(), max_relative = 1e-12);
        }
    }

    #[test]
    fn fidelity_is_symmetric_bounded_and_one_on_identical() {
        let a = GaussianState::thermal(0.7).unwrap();
        let b = GaussianState::coherent(2.0).unwrap();
        let fab = fidelity(&a, &b).unwrap();
        let fba = fidelity(&b, &a).unwrap();
        assert_eq!(fab, fba);
        assert!(fab > 0.0 && fab < 1.0);
        assert_eq!(fidelity(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn quadrature_stats_follow_the_covariance() {
        let t = GaussianState::thermal(1.0).unwrap();
        for theta in [0.0, 0.4, std::f64::consts::FRAC_PI_2, 2.2] {
            let (m, v) = t.quadrature_stats(theta);
            assert_eq!(m, 0.0);
            assert_relative_eq!(v, 3.0, max_relative = 1e-14);
        }

        let c = GaussianState::coherent(10.0).unwrap();
        let (m, v) = c.quadrature_stats(0.0);
        assert_relative_eq!(m, 2.0 * 10.0_f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(v, 1.0, max_relative = 1e-14);

        let s = GaussianState::squeezed(1.0);
        let (m, v) = s.quadrature_stats(std::f64::consts::FRAC_PI_2);
        assert_eq!(m, 0.0);
        assert_relative_eq!(v, f64::exp(-2.0), max_relative = 1e-12);
    }

    #[test]
    fn bose_einstein_relation_and_inverse() {
        // omega/T = ln 2 gives n = 1
        let mode = ModeSpec::new(std::f64::consts::LN_2, Some(1.0)).unwrap();
        assert_relative_eq!(thermal_number_from_temperature(&mode).unwrap(), 1.0, max_relative = 1e-12);

        // monotone decay towards zero occupation at low temperature
        let mut last = f64::INFINITY;
        for t in [2.0, 1.0, 0.5, 0.25, 0.05] {
            let mode = ModeSpec::new(1.0, Some(t)).unwrap();
            let n = thermal_number_from_temperature(&mode).unwrap();
            assert!(n < last && n > 0.0);
            last = n;
        }

        // round trip to 1e-12 relative
        let mode = ModeSpec::new(1.0, Some(0.7)).unwrap();
        let n = thermal_number_from_temperature(&mode).unwrap();
        let t = temperature_from_thermal_number(1.0, n).unwrap();
        assert_relative_eq!(t, 0.7, max_relative = 1e-12);

        assert!(ModeSpec::new(0.0, None).is_err());
        assert!(ModeSpec::new(1.0, Some(-0.1)).is_err());
        assert!(matches!(
            thermal_number_from_temperature(&ModeSpec::new(1.0, None).unwrap()),
            Err(Error::MissingTemperature)
        ));
        assert!(temperature_from_thermal_number(1.0, 0.0).is_err());
    }
}
