use thiserror::Error;

/// Errors produced by model validation and the closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tier {field} must be strictly positive and finite, got {value}")]
    InvalidTierParameter { field: &'static str, value: f64 },

    #[error("model needs at least one tier")]
    EmptyModel,

    #[error("spatial dimension {0} unsupported, expected 1, 2 or 3")]
    UnsupportedDimension(u32),

    #[error("path loss exponent alpha = {alpha} must exceed the dimension d = {dimension}")]
    AlphaNotAboveDimension { alpha: f64, dimension: u32 },

    #[error("epsilon = {0} must be finite and non-negative")]
    InvalidEpsilon(f64),

    #[error("delta = {0} outside the supported band [1e-6, 1 - 1e-6]")]
    DeltaOutOfBand(f64),

    #[error("delta = {0} must lie strictly inside (0, 1)")]
    DeltaOutOfRange(f64),

    #[error("slot count n = {got} must be at least {min}")]
    SlotCountTooSmall { min: u32, got: u32 },

    #[error("tier index {index} out of range for a {tiers}-tier model")]
    TierIndexOutOfRange { index: usize, tiers: usize },

    #[error("distance must be finite and non-negative, got {0}")]
    InvalidDistance(f64),

    #[error("operation requires bounded path loss (epsilon > 0)")]
    SingularPathLoss,

    #[error("monotonicity verdict needs at least two tiers")]
    SingleTierModel,

    #[error("fading moments invalid: mean = {mean}, second moment = {second_moment}")]
    InvalidFadingMoments { mean: f64, second_moment: f64 },

    #[error("spatial correlation with separation > 0 is only evaluated in d = 2, got d = {0}")]
    CrossTermDimension(u32),

    #[error("quadrature did not converge: estimated error {error:.3e} exceeds tolerance {tolerance:.3e}")]
    QuadratureNonConvergence { error: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
