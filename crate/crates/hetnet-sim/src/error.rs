use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error(transparent)]
    Model(#[from] corrmath::Error),

    #[error("{field} must be {requirement}, got {value}")]
    InvalidPlan { field: &'static str, requirement: &'static str, value: f64 },

    #[error("estimator requires singular path loss (epsilon = 0) to match the SIR model")]
    RequiresSingularPathLoss,

    #[error("estimator requires bounded path loss (epsilon > 0); moments diverge otherwise")]
    RequiresBoundedPathLoss,

    #[error("temporal mode requires separation = 0, got {0}")]
    TemporalSeparationNonzero(f64),

    #[error("conditional estimate undefined: no trial satisfied the conditioning event ({trials} trials)")]
    EmptyConditioningEvent { trials: u64 },

    #[error("degenerate sample: zero variance in {0} interference series")]
    DegenerateSample(&'static str),
}

pub type Result<T> = std::result::Result<T, SimError>;
