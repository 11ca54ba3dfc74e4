//! Network and fading parameter types.
//!
//! All numeric parameters are in linear scale; dB conversion belongs to the
//! CLI boundary.

use crate::error::{Error, Result};

/// Operations that depend on the sinc factor reject `delta` outside this band:
/// `sin(pi * delta)` vanishes at both endpoints and the results underflow to 0
/// long before that.
pub const DELTA_BAND: (f64, f64) = (1e-6, 1.0 - 1e-6);

fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidTierParameter { field, value })
    }
}

/// One tier of base stations: density `lambda` (per unit d-volume),
/// transmit power `P` and SIR threshold `beta`, all linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TierParams {
    pub density: f64,
    pub power: f64,
    pub threshold: f64,
}

impl TierParams {
    pub fn new(density: f64, power: f64, threshold: f64) -> Result<Self> {
        Ok(Self {
            density: require_positive("density", density)?,
            power: require_positive("power", power)?,
            threshold: require_positive("threshold", threshold)?,
        })
    }

    /// The closed forms assume `beta > 1` (at most one association candidate
    /// network-wide). Thresholds at or below 1 are representable but results
    /// carry an approximate-regime flag.
    pub fn is_approximate_regime(&self) -> bool {
        self.threshold <= 1.0
    }
}

/// First and second moments of the fading power coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingMoments {
    mean: f64,
    second_moment: f64,
}

impl FadingMoments {
    pub fn new(mean: f64, second_moment: f64) -> Result<Self> {
        let ok = mean.is_finite()
            && second_moment.is_finite()
            && mean > 0.0
            && second_moment > 0.0
            && second_moment >= mean * mean;
        if ok {
            Ok(Self { mean, second_moment })
        } else {
            Err(Error::InvalidFadingMoments { mean, second_moment })
        }
    }

    /// Unit-mean exponential power fading (Rayleigh amplitude): E[h] = 1, E[h^2] = 2.
    pub fn rayleigh() -> Self {
        Self { mean: 1.0, second_moment: 2.0 }
    }

    /// Deterministic unit fading: h = 1 in every slot.
    pub fn deterministic_unit() -> Self {
        Self { mean: 1.0, second_moment: 1.0 }
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn second_moment(&self) -> f64 {
        self.second_moment
    }
}

/// A K-tier network with its propagation constants.
///
/// `epsilon = 0` selects the singular path loss `g(x) = |x|^-alpha`;
/// `epsilon > 0` selects the bounded law `g(x) = 1 / (|x|^alpha + epsilon)`,
/// under which the interference moments are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkModel {
    tiers: Vec<TierParams>,
    alpha: f64,
    dimension: u32,
    epsilon: f64,
}

impl NetworkModel {
    pub fn new(tiers: Vec<TierParams>, alpha: f64, dimension: u32, epsilon: f64) -> Result<Self> {
        if tiers.is_empty() {
            return Err(Error::EmptyModel);
        }
        if !(1..=3).contains(&dimension) {
            return Err(Error::UnsupportedDimension(dimension));
        }
        if !alpha.is_finite() || alpha <= dimension as f64 {
            return Err(Error::AlphaNotAboveDimension { alpha, dimension });
        }
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        Ok(Self { tiers, alpha, dimension, epsilon })
    }

    /// Convenience constructor for the planar singular-path-loss model used by
    /// the joint-success analysis.
    pub fn planar(tiers: Vec<TierParams>, alpha: f64) -> Result<Self> {
        Self::new(tiers, alpha, 2, 0.0)
    }

    pub fn tiers(&self) -> &[TierParams] {
        &self.tiers
    }

    pub fn tier(&self, index: usize) -> Result<&TierParams> {
        self.tiers.get(index).ok_or(Error::TierIndexOutOfRange {
            index,
            tiers: self.tiers.len(),
        })
    }

    pub fn num_tiers(&self) -> usize {
        self.tiers.len()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The stability index `delta = d / alpha`, in (0, 1) by construction.
    pub fn delta(&self) -> f64 {
        self.dimension as f64 / self.alpha
    }

    /// Volume of the d-dimensional unit ball.
    pub fn unit_ball_volume(&self) -> f64 {
        unit_ball_volume(self.dimension)
    }

    pub fn is_singular(&self) -> bool {
        self.epsilon == 0.0
    }

    /// True when any tier threshold is <= 1, where the single-candidate association argument
    /// behind the closed forms is no longer exact.
    pub fn approximate_regime(&self) -> bool {
        self.tiers.iter().any(TierParams::is_approximate_regime)
    }

    /// Path gain at distance `r` under the model's path loss law.
    pub fn path_gain(&self, r: f64) -> f64 {
        1.0 / (r.powf(self.alpha) + self.epsilon)
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::new(self.tiers.clone(), self.alpha, self.dimension, epsilon)
    }
}

pub fn unit_ball_volume(dimension: u32) -> f64 {
    match dimension {
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => unreachable!("dimension validated at construction"),
    }
}

pub(crate) fn check_delta_band(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    if delta < DELTA_BAND.0 || delta > DELTA_BAND.1 {
        return Err(Error::DeltaOutOfBand(delta));
    }
    Ok(delta)
}
