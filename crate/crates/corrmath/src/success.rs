//! Joint and conditional success probabilities over n time slots.

use crate::error::{Error, Result};
use crate::model::{check_delta_band, unit_ball_volume, NetworkModel, TierParams};
use crate::special::{diversity_polynomial, gamma_one_plus, sinc_factor};

fn check_slots(n: u32, min: u32) -> Result<u32> {
    if n < min {
        Err(Error::SlotCountTooSmall { min, got: n })
    } else {
        Ok(n)
    }
}

fn check_distance(r: f64) -> Result<f64> {
    if r.is_finite() && r >= 0.0 {
        Ok(r)
    } else {
        Err(Error::InvalidDistance(r))
    }
}

/// `sum_l lambda_l * P_l^delta` over all tiers.
fn power_weighted_density(tiers: &[TierParams], delta: f64) -> f64 {
    tiers.iter().map(|t| t.density * t.power.powf(delta)).sum()
}

/// `sum_i lambda_i * P_i^delta * beta_i^-delta` over all tiers.
fn threshold_weighted_density(tiers: &[TierParams], delta: f64) -> f64 {
    tiers
        .iter()
        .map(|t| t.density * t.power.powf(delta) * t.threshold.powf(-delta))
        .sum()
}

/// Probability that the typical user at the origin is served by the given BS
/// (tier `tier_index`, distance `bs_distance`) in all of `n` successive slots:
///
/// `exp(-c_d * (pi d/sin pi d) * (beta_i/P_i)^delta * sum_l lambda_l P_l^delta * D_n(delta) * r^d)`
pub fn per_bs_joint_success(
    model: &NetworkModel,
    tier_index: usize,
    bs_distance: f64,
    n: u32,
) -> Result<f64> {
    let tier = model.tier(tier_index)?;
    let r = check_distance(bs_distance)?;
    check_slots(n, 1)?;
    let delta = model.delta();
    let exponent = model.unit_ball_volume()
        * sinc_factor(delta)?
        * (tier.threshold / tier.power).powf(delta)
        * power_weighted_density(model.tiers(), delta)
        * diversity_polynomial(n, delta)?
        * r.powi(model.dimension() as i32);
    Ok((-exponent).exp())
}

/// Network-wide joint success probability over `n` successive slots:
///
/// `p^(n) = sum_i lambda_i P_i^delta beta_i^-delta / ((pi d/sin pi d) * D_n(delta) * sum_l lambda_l P_l^delta)`
///
/// Satisfies `p^(n) = p^(1) / D_n(delta)`. Exact for all thresholds > 1;
/// for thresholds <= 1 see [`NetworkModel::approximate_regime`].
pub fn joint_success(model: &NetworkModel, n: u32) -> Result<f64> {
    check_slots(n, 1)?;
    let delta = model.delta();
    let num = threshold_weighted_density(model.tiers(), delta);
    let den = sinc_factor(delta)?
        * diversity_polynomial(n, delta)?
        * power_weighted_density(model.tiers(), delta);
    Ok(num / den)
}

/// Sandwich bounds `(lower, upper)` on the joint success probability,
/// obtained from `n^delta < D_n(delta) < n^delta / Gamma(1 + delta)`.
pub fn joint_success_bounds(model: &NetworkModel, n: u32) -> Result<(f64, f64)> {
    check_slots(n, 1)?;
    let delta = model.delta();
    let ratio = threshold_weighted_density(model.tiers(), delta)
        / power_weighted_density(model.tiers(), delta);
    let upper = ratio / (sinc_factor(delta)? * (n as f64).powf(delta));
    let lower = gamma_one_plus(delta) * upper;
    Ok((lower, upper))
}

/// Probability that slot `n` succeeds given the first `n - 1` did:
/// `D_{n-1}(delta) / D_n(delta) = (n - 1) / (n - 1 + delta)`.
///
/// Independent of every tier parameter; strictly increasing in `n` with
/// limit 1.
pub fn conditional_success(n: u32, delta: f64) -> Result<f64> {
    check_slots(n, 2)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let m = (n - 1) as f64;
    Ok(m / (m + delta))
}

/// Per-tier joint success probability when tiers occupy orthogonal spectrum:
/// `beta_i^-delta / ((pi d/sin pi d) * D_n(delta))`, free of density and power.
pub fn orthogonal_tier_joint_success(tier: &TierParams, delta: f64, n: u32) -> Result<f64> {
    check_slots(n, 1)?;
    check_delta_band(delta)?;
    Ok(tier.threshold.powf(-delta) / (sinc_factor(delta)? * diversity_polynomial(n, delta)?))
}

/// Per-BS joint success probability under orthogonal spectrum:
/// `exp(-c_d * (pi d/sin pi d) * lambda_i * beta_i^delta * D_n(delta) * r^d)`.
pub fn orthogonal_per_bs_joint_success(
    tier: &TierParams,
    dimension: u32,
    delta: f64,
    bs_distance: f64,
    n: u32,
) -> Result<f64> {
    if !(1..=3).contains(&dimension) {
        return Err(Error::UnsupportedDimension(dimension));
    }
    let r = check_distance(bs_distance)?;
    check_slots(n, 1)?;
    let exponent = unit_ball_volume(dimension)
        * sinc_factor(delta)?
        * tier.density
        * tier.threshold.powf(delta)
        * diversity_polynomial(n, delta)?
        * r.powi(dimension as i32);
    Ok((-exponent).exp())
}
