//! Closed-form interference-correlation and link-success expressions for
//! K-tier heterogeneous cellular networks under Poisson base-station
//! placement and Rayleigh fading.
//!
//! Everything here is a pure function of its inputs: no I/O, no shared
//! mutable state, safe to call from any number of threads. The Monte Carlo
//! counterpart lives in the `hetnet-sim` crate.

pub mod correlation;
pub mod error;
pub mod model;
pub mod moments;
pub mod monotonicity;
pub mod quad;
pub mod special;
pub mod success;

pub use correlation::{spatial_corr_coefficient, temporal_corr_coefficient};
pub use error::{Error, Result};
pub use model::{unit_ball_volume, FadingMoments, NetworkModel, TierParams, DELTA_BAND};
pub use moments::{
    interference_mean, interference_variance, path_loss_integral, path_loss_sq_integral,
};
pub use monotonicity::{monotonicity_verdict, Direction, MonotonicityVerdict, FLAT_TOLERANCE};
pub use special::{diversity_polynomial, gamma_one_plus, sinc_factor};
pub use success::{
    conditional_success, joint_success, joint_success_bounds, orthogonal_per_bs_joint_success,
    orthogonal_tier_joint_success, per_bs_joint_success,
};
