//! Monotonicity classification: does raising a tier's density or power help?

use crate::error::{Error, Result};
use crate::model::NetworkModel;

/// Sign of `d p^(n) / d lambda_m` (equivalently `d p^(n) / d P_m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotonicityVerdict {
    pub direction: Direction,
    /// `beta_m^-delta - (sum_{i != m} lambda_i P_i^delta beta_i^-delta) / (sum_{i != m} lambda_i P_i^delta)`
    pub margin: f64,
}

/// Exact-zero classification is meaningless in floating point; margins within
/// this relative tolerance of zero are reported Flat.
pub const FLAT_TOLERANCE: f64 = 1e-12;

/// Classifies how the joint success probability responds to increasing the
/// density or transmit power of tier `tier_m`. Both derivatives share the
/// sign of the margin.
pub fn monotonicity_verdict(model: &NetworkModel, tier_m: usize) -> Result<MonotonicityVerdict> {
    if model.num_tiers() < 2 {
        return Err(Error::SingleTierModel);
    }
    let target = model.tier(tier_m)?;
    let delta = model.delta();
    let mut weighted = 0.0;
    let mut weight = 0.0;
    for (i, t) in model.tiers().iter().enumerate() {
        if i == tier_m {
            continue;
        }
        let w = t.density * t.power.powf(delta);
        weighted += w * t.threshold.powf(-delta);
        weight += w;
    }
    let own = target.threshold.powf(-delta);
    let margin = own - weighted / weight;
    let direction = if margin.abs() <= FLAT_TOLERANCE * own {
        Direction::Flat
    } else if margin > 0.0 {
        Direction::Increasing
    } else {
        Direction::Decreasing
    };
    Ok(MonotonicityVerdict { direction, margin })
}
