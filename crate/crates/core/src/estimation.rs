//! Fisher information for estimating the channel parameter `y`.
//!
//! The quantum Fisher information is computed numerically from the fidelity
//! between neighbouring channel outputs,
//!
//! ```text
//! H(y) = lim  8 (1 - sqrt(F(rho_y, rho_{y+e}))) / e^2,
//! ```
//!
//! evaluated with a centred difference and one Richardson extrapolation step.
//! Closed forms are provided for coherent probes (exact) and for thermal and
//! squeezed probes in the large-energy regime. The classical Fisher
//! information of a homodyne measurement follows from the Gaussian outcome
//! law: `FI = m'^2/v + v'^2/(2 v^2)` with `m, v` the rotated-quadrature mean
//! and variance of the output state.

use nalgebra::Vector2;

use crate::channel::Scenario;
use crate::error::{Error, Result};
use crate::gaussian::{fidelity, GaussianState};

/// Relative size of the default finite-difference step for [`qfi_numeric`],
/// as a fraction of the physical range width.
pub const QFI_STEP_FRACTION: f64 = 1e-4;

/// Input probe prepared upstream of the channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProbeSpec {
    Vacuum,
    /// Coherent state of mean photon number `n0`.
    Coherent(f64),
    /// Squeezed vacuum of squeezing parameter `s` (energy `sinh^2 s`).
    Squeezed(f64),
    /// Thermal state of mean occupation `n0`.
    Thermal(f64),
}

impl ProbeSpec {
    /// Squeezed probe carrying mean photon number `n0`, i.e. `s = asinh(sqrt(n0))`.
    pub fn squeezed_with_energy(n0: f64) -> Result<Self> {
        if !n0.is_finite() || n0 < 0.0 {
            return Err(Error::InvalidPhotonNumber(n0));
        }
        Ok(ProbeSpec::Squeezed(n0.sqrt().asinh()))
    }

    /// The Gaussian state this probe describes.
    pub fn state(&self) -> Result<GaussianState> {
        match *self {
            ProbeSpec::Vacuum => Ok(GaussianState::vacuum()),
            ProbeSpec::Coherent(n0) => GaussianState::coherent(n0),
            ProbeSpec::Squeezed(s) => {
                if !s.is_finite() || !(2.0 * s).exp().is_finite() || (2.0 * s).exp() <= 0.0 {
                    return Err(Error::InvalidSqueezing(s));
                }
                Ok(GaussianState::squeezed(s))
            }
            ProbeSpec::Thermal(n0) => GaussianState::thermal(n0),
        }
    }

    pub fn mean_photon_number(&self) -> Result<f64> {
        Ok(self.state()?.mean_photon_number())
    }
}

/// Channel output for the given probe, scenario and channel parameter.
pub fn output_state(probe: &ProbeSpec, scenario: &Scenario, y: f64) -> Result<GaussianState> {
    scenario.channel_for(y)?.apply(&probe.state()?)
}

/// Mean, variance and their y-derivatives for the rotated quadrature of the
/// channel output. The derivatives exist in closed form for every Gaussian
/// probe since `x(y)` is affine and the output law is
/// `m = sqrt(x) u.d`, `v = x u^T cov u + y`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadratureLaw {
    pub mean: f64,
    pub var: f64,
    pub dmean: f64,
    pub dvar: f64,
}

pub(crate) fn quadrature_law(
    probe: &ProbeSpec,
    scenario: &Scenario,
    y: f64,
    theta: f64,
) -> Result<QuadratureLaw> {
    let st = probe.state()?;
    let x = scenario.x_for(y).max(0.0);
    let dx = -1.0 / (2.0 * scenario.ambient_n() + 1.0);
    let u = Vector2::new(theta.cos(), theta.sin());
    let md = u.dot(&st.mean());
    let sv = u.dot(&(st.cov() * u));
    let sx = x.sqrt();
    let dmean = if md == 0.0 { 0.0 } else { md * dx / (2.0 * sx) };
    Ok(QuadratureLaw {
        mean: sx * md,
        var: x * sv + y,
        dmean,
        dvar: sv * dx + 1.0,
    })
}

fn bures_second_difference(
    probe: &ProbeSpec,
    scenario: &Scenario,
    y: f64,
    eps: f64,
) -> Result<f64> {
    let lo = output_state(probe, scenario, y - eps)?;
    let hi = output_state(probe, scenario, y + eps)?;
    let f = fidelity(&lo, &hi)?;
    Ok(8.0 * (1.0 - f.sqrt()) / (2.0 * eps).powi(2))
}

/// Quantum Fisher information from the fidelity limit, using a centred
/// difference of half-width `step` (default `1e-4` of the range width) and
/// one Richardson extrapolation step over `step` and `step/2`.
pub fn qfi_numeric(probe: &ProbeSpec, scenario: &Scenario, y: f64, step: Option<f64>) -> Result<f64> {
    let range = scenario.y_range();
    let eps = step.unwrap_or(QFI_STEP_FRACTION * range.width());
    if !range.contains_interior(y) || !(eps > 0.0) || y - eps < range.lo || y + eps > range.hi {
        return Err(Error::StepLeavesRange {
            y,
            step: eps,
            lo: range.lo,
            hi: range.hi,
        });
    }
    let coarse = bures_second_difference(probe, scenario, y, eps)?;
    let fine = bures_second_difference(probe, scenario, y, eps / 2.0)?;
    Ok(((4.0 * fine - coarse) / 3.0).max(0.0))
}

/// Exact quantum Fisher information of a coherent probe of energy `n0`:
/// `H = n0 / ((1 + 2 nbar)(1 + 2 nbar - y))`.
pub fn qfi_coherent_exact(nbar: f64, y: f64, n0: f64) -> Result<f64> {
    check_nbar_n0(nbar, n0)?;
    check_y_below_ceiling(nbar, y, 0.0)?;
    let w = 1.0 + 2.0 * nbar;
    Ok(n0 / (w * (w - y)))
}

/// Large-energy quantum Fisher information of a thermal probe:
/// `H = 1 / (1 + 2 nbar - y)^2`.
pub fn qfi_thermal_asymptotic(nbar: f64, y: f64) -> Result<f64> {
    check_nbar_n0(nbar, 0.0)?;
    check_y_below_ceiling(nbar, y, 0.0)?;
    Ok(1.0 / (1.0 + 2.0 * nbar - y).powi(2))
}

/// Quoted large-energy quantum Fisher information of a squeezed probe of
/// energy `n0`: `H = (3/4)(1 + 2 nbar)^2 n0 / (y (1 + 2 nbar - y))`.
pub fn qfi_squeezed_asymptotic(nbar: f64, y: f64, n0: f64) -> Result<f64> {
    check_nbar_n0(nbar, n0)?;
    check_y_below_ceiling(nbar, y, f64::MIN_POSITIVE)?;
    let w = 1.0 + 2.0 * nbar;
    Ok(0.75 * w * w * n0 / (y * (w - y)))
}

fn check_nbar_n0(nbar: f64, n0: f64) -> Result<()> {
    if !nbar.is_finite() || nbar < 0.0 {
        return Err(Error::InvalidOccupation(nbar));
    }
    if !n0.is_finite() || n0 < 0.0 {
        return Err(Error::InvalidPhotonNumber(n0));
    }
    Ok(())
}

fn check_y_below_ceiling(nbar: f64, y: f64, lo: f64) -> Result<()> {
    let hi = 2.0 * nbar + 1.0;
    if !y.is_finite() || y < lo || y >= hi {
        return Err(Error::YOutOfRange { y, lo, hi });
    }
    Ok(())
}

/// Classical Fisher information of a homodyne measurement at angle `theta`.
///
/// For a coherent probe measured along the displacement (`theta = 0`) the
/// output variance is constant along the thermality line and the homodyne
/// information equals the exact quantum Fisher information.
pub fn fisher_homodyne(probe: &ProbeSpec, scenario: &Scenario, y: f64, theta: f64) -> Result<f64> {
    let range = scenario.y_range();
    if !range.contains_interior(y) {
        return Err(Error::YOutOfRange {
            y,
            lo: range.lo,
            hi: range.hi,
        });
    }
    let law = quadrature_law(probe, scenario, y, theta)?;
    Ok(law.dmean * law.dmean / law.var + law.dvar * law.dvar / (2.0 * law.var * law.var))
}

/// Cramer-Rao bound on the variance of any unbiased estimate of `y` from `n`
/// independent outcomes: `1 / (n F)`.
pub fn cramer_rao_bound(fisher: f64, n: u64) -> Result<f64> {
    if !fisher.is_finite() || fisher <= 0.0 {
        return Err(Error::NonPositiveFisher(fisher));
    }
    if n == 0 {
        return Err(Error::ZeroSamples);
    }
    Ok(1.0 / (n as f64 * fisher))
}

/// One row of a QFI scan for a single probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QfiScanRow {
    pub y: f64,
    pub qfi_numeric: f64,
    /// Closed form where one exists for the probe (exact for coherent,
    /// large-energy for thermal and squeezed, none for vacuum or for
    /// ambient-corrected scenarios).
    pub qfi_closed_form: Option<f64>,
    /// Homodyne Fisher information along the displacement direction.
    pub fisher_homodyne: f64,
}

pub fn qfi_scan_row(
    probe: &ProbeSpec,
    scenario: &Scenario,
    y: f64,
    step: Option<f64>,
) -> Result<QfiScanRow> {
    let numeric = qfi_numeric(probe, scenario, y, step)?;
    let closed = if scenario.ambient_n() == 0.0 {
        let nbar = scenario.observed_n();
        match *probe {
            ProbeSpec::Vacuum => None,
            ProbeSpec::Coherent(n0) => Some(qfi_coherent_exact(nbar, y, n0)?),
            ProbeSpec::Thermal(_) => Some(qfi_thermal_asymptotic(nbar, y)?),
            ProbeSpec::Squeezed(s) => {
                Some(qfi_squeezed_asymptotic(nbar, y, s.sinh().powi(2))?)
            }
        }
    } else {
        None
    };
    Ok(QfiScanRow {
        y,
        qfi_numeric: numeric,
        qfi_closed_form: closed,
        fisher_homodyne: fisher_homodyne(probe, scenario, y, 0.0)?,
    })
}
