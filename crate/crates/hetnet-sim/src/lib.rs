//! Monte Carlo engine for K-tier heterogeneous network models: reproducible
//! point-pattern sampling, SIR success events, and interference statistics.

pub mod error;
pub mod estimate;
pub mod plan;
pub mod realization;
pub mod rng;
pub mod sir;

pub use error::{Result, SimError};
pub use estimate::{
    estimate_conditional_success, estimate_corr_coefficient, estimate_interference_moments,
    estimate_joint_success, CorrMode, Estimate, FadingKind,
};
pub use plan::{default_window_radius, SimPlan, TRUNCATION_FRACTION};
pub use realization::{sample_realization, BsPoint, Realization};
pub use rng::{derive_seed, trial_rng};
pub use sir::{conditional_indicators, joint_success_indicator, sir_at_origin};
