//! The one-parameter family of single-mode thermal channels compatible with
//! an observed thermal output.
//!
//! A channel is the pair `(x, y)` acting as `d' = X d`, `cov' = X cov X^T + y I`
//! with `X = diag(sqrt(|x|), sgn(x) sqrt(|x|))`. Channels taking the vacuum to
//! a thermal state of occupation `nbar` satisfy `|x| + y = 2*nbar + 1`, so one
//! real parameter `y` remains once thermality is observed.

use nalgebra::{Matrix2, Matrix4, Vector2};

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;

/// Slack used when checking the physicality bound `y >= |x-1|/2`.
pub const PHYSICALITY_TOL: f64 = 1e-12;

/// Default tolerance for matching the named channels in [`ThermalChannel::classify`].
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Closed interval of admissible `y` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YRange {
    pub lo: f64,
    pub hi: f64,
}

impl YRange {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Membership in the closed interval, with `PHYSICALITY_TOL` slack.
    pub fn contains(&self, y: f64) -> bool {
        y >= self.lo - PHYSICALITY_TOL && y <= self.hi + PHYSICALITY_TOL
    }

    /// Strict interior membership (used by derivative-based quantities).
    pub fn contains_interior(&self, y: f64) -> bool {
        y > self.lo && y < self.hi
    }
}

/// Admissible added-noise values for channels on the thermality line of `nbar`:
/// `[2*nbar/3, 2*nbar + 1]`.
pub fn physical_y_range(nbar: f64) -> YRange {
    YRange {
        lo: 2.0 * nbar / 3.0,
        hi: 2.0 * nbar + 1.0,
    }
}

/// Named points and regions of the channel family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelClass {
    Hawking,
    ClassicalAddNoise,
    ZeroTransmission,
    Lossy,
    Amplifying,
    Unphysical,
}

impl ChannelClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChannelClass::Hawking => "hawking",
            ChannelClass::ClassicalAddNoise => "classical-add-noise",
            ChannelClass::ZeroTransmission => "zero-transmission",
            ChannelClass::Lossy => "lossy",
            ChannelClass::Amplifying => "amplifying",
            ChannelClass::Unphysical => "unphysical",
        }
    }
}

/// A single-mode thermal channel `(x, y)`.
///
/// Instances with `y < |x-1|/2` can be represented (map-plotting needs them)
/// but are rejected by every operation that applies the channel to a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalChannel {
    x: f64,
    y: f64,
}

impl ThermalChannel {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "channel parameters must be finite");
        assert!(y >= 0.0, "added noise must be nonnegative");
        Self { x, y }
    }

    /// The amplification channel produced by a horizon of occupation `nbar`:
    /// `x = nbar + 1`, `y = nbar`.
    pub fn hawking(nbar: f64) -> Self {
        Self::new(nbar + 1.0, nbar)
    }

    /// Channel on the thermality line of `nbar` with added noise `y`.
    pub fn from_thermality(nbar: f64, y: f64) -> Result<Self> {
        let range = physical_y_range(nbar);
        if !y.is_finite() || !range.contains(y) {
            return Err(Error::YOutOfRange {
                y,
                lo: range.lo,
                hi: range.hi,
            });
        }
        let x = (2.0 * nbar + 1.0 - y).max(0.0);
        Ok(Self { x, y })
    }

    /// Channel identified from an ambient-temperature measurement, see
    /// [`Scenario::channel_for`].
    pub fn from_ambient(scenario: &Scenario, y: f64) -> Result<Self> {
        scenario.channel_for(y)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Complete positivity: `y >= |x - 1|/2`.
    pub fn is_physical(&self) -> bool {
        self.y >= (self.x - 1.0).abs() / 2.0 - PHYSICALITY_TOL
    }

    /// Entanglement with any ancilla is destroyed once `y >= (|x| + 1)/2`.
    pub fn is_entanglement_breaking(&self) -> bool {
        self.y >= (self.x.abs() + 1.0) / 2.0 - PHYSICALITY_TOL
    }

    /// Applies the channel: `d' = X d`, `cov' = X cov X^T + y I`.
    pub fn apply(&self, state: &GaussianState) -> Result<GaussianState> {
        if !self.is_physical() {
            return Err(Error::UnphysicalChannel { x: self.x, y: self.y });
        }
        let root = self.x.abs().sqrt();
        let sign = if self.x < 0.0 { -1.0 } else { 1.0 };
        let xm = Matrix2::new(root, 0.0, 0.0, sign * root);
        let mean = xm * state.mean();
        let cov = xm * state.cov() * xm.transpose() + Matrix2::identity() * self.y;
        GaussianState::new(mean, cov)
    }

    /// Region/name of the channel on the thermality line of `nbar`.
    ///
    /// Unphysical channels classify first; on-line channels then match the
    /// named points (Hawking at `y = nbar`, add-noise at `y = 2*nbar`,
    /// zero-transmission at `y = 2*nbar + 1`) before falling back to
    /// lossy (`x < 1`) or amplifying (`x > 1`). Channels off the line by more
    /// than `tol` are rejected.
    pub fn classify(&self, nbar: f64, tol: f64) -> Result<ChannelClass> {
        if !self.is_physical() {
            return Ok(ChannelClass::Unphysical);
        }
        if (self.x.abs() + self.y - (2.0 * nbar + 1.0)).abs() > tol {
            return Err(Error::OffThermalityLine {
                x: self.x,
                y: self.y,
                nbar,
            });
        }
        let class = if (self.y - nbar).abs() <= tol {
            ChannelClass::Hawking
        } else if (self.y - 2.0 * nbar).abs() <= tol {
            ChannelClass::ClassicalAddNoise
        } else if (self.y - (2.0 * nbar + 1.0)).abs() <= tol {
            ChannelClass::ZeroTransmission
        } else if self.x < 1.0 {
            ChannelClass::Lossy
        } else {
            ChannelClass::Amplifying
        };
        Ok(class)
    }

    /// Mean occupation observed when the channel acts on a thermal state of
    /// occupation `ambient_n`: `2n' + 1 = x (2 n_T + 1) + y`.
    pub fn predicted_thermal_number(&self, ambient_n: f64) -> Result<f64> {
        if !self.is_physical() {
            return Err(Error::UnphysicalChannel { x: self.x, y: self.y });
        }
        if !ambient_n.is_finite() || ambient_n < 0.0 {
            return Err(Error::InvalidOccupation(ambient_n));
        }
        Ok((self.x * (2.0 * ambient_n + 1.0) + self.y - 1.0) / 2.0)
    }
}

/// The thermality context of an experiment: the mean occupation measured from
/// the horizon (`observed_n`, equal to `nbar` when the probe environment is at
/// zero temperature, `n'` otherwise) and the ambient occupation `ambient_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    observed_n: f64,
    ambient_n: f64,
}

impl Scenario {
    pub fn new(observed_n: f64, ambient_n: f64) -> Result<Self> {
        if !observed_n.is_finite() || observed_n < 0.0 || !ambient_n.is_finite() || ambient_n < 0.0 {
            return Err(Error::InvalidScenario);
        }
        Ok(Self { observed_n, ambient_n })
    }

    /// Zero-ambient scenario where the observed occupation is `nbar` itself.
    pub fn from_nbar(nbar: f64) -> Result<Self> {
        Self::new(nbar, 0.0)
    }

    pub fn observed_n(&self) -> f64 {
        self.observed_n
    }

    pub fn ambient_n(&self) -> f64 {
        self.ambient_n
    }

    /// Transmissivity fixed by the observed thermality:
    /// `x = (2n' + 1 - y) / (2 n_T + 1)`.
    pub fn x_for(&self, y: f64) -> f64 {
        (2.0 * self.observed_n + 1.0 - y) / (2.0 * self.ambient_n + 1.0)
    }

    /// Admissible `y` interval for this scenario. Reduces to
    /// [`physical_y_range`] of the observed occupation when the ambient
    /// occupation vanishes.
    pub fn y_range(&self) -> YRange {
        let a = 2.0 * self.observed_n + 1.0;
        let b = 2.0 * self.ambient_n + 1.0;
        let lo = if a >= b {
            (a - b) / (2.0 * b + 1.0)
        } else {
            (b - a) / (2.0 * b - 1.0)
        };
        YRange { lo, hi: a }
    }

    /// Channel identified by this scenario at parameter `y`.
    pub fn channel_for(&self, y: f64) -> Result<ThermalChannel> {
        let range = self.y_range();
        if !y.is_finite() || !range.contains(y) {
            return Err(Error::YOutOfRange {
                y,
                lo: range.lo,
                hi: range.hi,
            });
        }
        let ch = ThermalChannel::new(self.x_for(y).max(0.0), y.max(0.0));
        if !ch.is_physical() {
            return Err(Error::UnphysicalChannel { x: ch.x, y: ch.y });
        }
        Ok(ch)
    }
}

/// Horizon occupation implied by the dimensionless frequency ratio
/// `Omega = 2 pi omega / kappa`: squeezing `r = arctanh(e^-Omega)` gives
/// `nbar = sinh^2(r) = 1/(e^{2 Omega} - 1)`.
pub fn hawking_nbar(omega_ratio: f64) -> Result<f64> {
    if !omega_ratio.is_finite() || omega_ratio <= 0.0 {
        return Err(Error::InvalidFrequencyRatio(omega_ratio));
    }
    Ok(1.0 / (2.0 * omega_ratio).exp_m1())
}

/// Two-mode squeezes the two-mode vacuum by `r` and traces out the second
/// mode, returning the reduced state of the first.
///
/// The 4x4 covariance after squeezing has diagonal blocks `cosh(2r) I` and
/// off-diagonal blocks `sinh(2r) diag(1, -1)`; the reduced state is thermal
/// with occupation `sinh^2(r)` and must coincide with the Hawking channel of
/// that occupation applied to the vacuum.
pub fn two_mode_squeeze_vacuum_then_trace(r: f64) -> GaussianState {
    assert!(r.is_finite() && r >= 0.0, "squeezing must be nonnegative");
    let ch = r.cosh();
    let sh = r.sinh();
    #[rustfmt::skip]
    let s = Matrix4::new(
        ch,  0.0, sh,  0.0,
        0.0, ch,  0.0, -sh,
        sh,  0.0, ch,  0.0,
        0.0, -sh, 0.0, ch,
    );
    let cov4 = s * Matrix4::identity() * s.transpose();
    let reduced = cov4.fixed_view::<2, 2>(0, 0).into_owned();
    GaussianState::new(Vector2::zeros(), reduced)
        .expect("reduced two-mode squeezed vacuum is a valid state")
}
