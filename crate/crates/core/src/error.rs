use thiserror::Error;

/// Errors raised by state constructors, channel builders and estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mean photon number must be nonnegative and finite, got {0}")]
    InvalidPhotonNumber(f64),

    #[error("squeezing parameter must be finite and moderate, got {0}")]
    InvalidSqueezing(f64),

    #[error("covariance matrix is not symmetric (|c12 - c21| = {0:e})")]
    AsymmetricCovariance(f64),

    #[error("covariance diagonal must be strictly positive")]
    NonPositiveVariance,

    #[error("covariance violates the uncertainty relation, det = {0}")]
    UncertaintyViolation(f64),

    #[error("sum of covariances is singular")]
    SingularCovariance,

    #[error("mode frequency must be positive and finite, got {0}")]
    InvalidFrequency(f64),

    #[error("temperature must be positive and finite, got {0}")]
    InvalidTemperature(f64),

    #[error("thermal occupation must be positive and finite, got {0}")]
    InvalidOccupation(f64),

    #[error("mode carries no temperature")]
    MissingTemperature,

    #[error("channel (x = {x}, y = {y}) is unphysical: y < |x - 1|/2")]
    UnphysicalChannel { x: f64, y: f64 },

    #[error("y = {y} lies outside the physical range [{lo}, {hi}]")]
    YOutOfRange { y: f64, lo: f64, hi: f64 },

    #[error("channel (x = {x}, y = {y}) is off the thermality line for nbar = {nbar}")]
    OffThermalityLine { x: f64, y: f64, nbar: f64 },

    #[error("frequency ratio must be positive and finite, got {0}")]
    InvalidFrequencyRatio(f64),

    #[error("scenario occupations must be nonnegative and finite")]
    InvalidScenario,

    #[error("step {step} around y = {y} leaves the physical range [{lo}, {hi}]")]
    StepLeavesRange { y: f64, step: f64, lo: f64, hi: f64 },

    #[error("Fisher information must be positive, got {0}")]
    NonPositiveFisher(f64),

    #[error("requested sample count must be at least 1")]
    ZeroSamples,

    #[error("a campaign needs at least two repetitions")]
    TooFewRepetitions,

    #[error("homodyne record holds no outcomes")]
    EmptyRecord,

    #[error("homodyne record holds non-finite outcomes")]
    NonFiniteOutcome,

    #[error("moment inversion requires a coherent probe of positive intensity measured at theta = 0")]
    MomentsRequiresCoherent,

    #[error("likelihood is degenerate over the physical range")]
    DegenerateLikelihood,
}

pub type Result<T> = std::result::Result<T, Error>;
