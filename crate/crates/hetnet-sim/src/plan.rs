//! Monte Carlo run plans and the simulation-window sizing rules.

use crate::error::{Result, SimError};
use corrmath::quad::integrate_to_inf_rel;
use corrmath::NetworkModel;

/// Expected truncated-interference fraction allowed by the bounded-path-loss
/// window rule.
pub const TRUNCATION_FRACTION: f64 = 1e-3;

/// How a Monte Carlo estimate is to be produced: sampling window, trial and
/// slot counts, master seed and a worker-count hint. Results are a pure
/// function of (model, plan); the parallelism hint never changes values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimPlan {
    pub window_radius: f64,
    pub trials: u64,
    pub slots: u32,
    pub master_seed: u64,
    pub parallelism: usize,
}

impl SimPlan {
    pub fn new(
        window_radius: f64,
        trials: u64,
        slots: u32,
        master_seed: u64,
        parallelism: usize,
    ) -> Result<Self> {
        if !(window_radius.is_finite() && window_radius > 0.0) {
            return Err(SimError::InvalidPlan {
                field: "window_radius",
                requirement: "finite and positive",
                value: window_radius,
            });
        }
        if trials < 1 {
            return Err(SimError::InvalidPlan {
                field: "trials",
                requirement: "at least 1",
                value: trials as f64,
            });
        }
        if slots < 1 {
            return Err(SimError::InvalidPlan {
                field: "slots",
                requirement: "at least 1",
                value: slots as f64,
            });
        }
        if parallelism < 1 {
            return Err(SimError::InvalidPlan {
                field: "parallelism",
                requirement: "at least 1",
                value: parallelism as f64,
            });
        }
        Ok(Self { window_radius, trials, slots, master_seed, parallelism })
    }

    /// Plan with the default window for the given model (see [`default_window_radius`]).
    pub fn for_model(
        model: &NetworkModel,
        trials: u64,
        slots: u32,
        master_seed: u64,
        parallelism: usize,
    ) -> Result<Self> {
        Self::new(default_window_radius(model)?, trials, slots, master_seed, parallelism)
    }

    pub fn with_seed(mut self, master_seed: u64) -> Self {
        self.master_seed = master_seed;
        self
    }

    pub fn with_slots(mut self, slots: u32) -> Self {
        self.slots = slots;
        self
    }
}

/// Default sampling radius.
///
/// Singular path loss (SIR runs): `30 * (max_k lambda_k)^(-1/d)`, guarded by
/// the window-doubling invariance test. Bounded path loss: the smallest
/// power-of-two multiple of that radius whose expected truncated interference
/// fraction is below [`TRUNCATION_FRACTION`].
pub fn default_window_radius(model: &NetworkModel) -> Result<f64> {
    let lambda_max = model
        .tiers()
        .iter()
        .map(|t| t.density)
        .fold(f64::NEG_INFINITY, f64::max);
    let d = model.dimension() as f64;
    let base = 30.0 * lambda_max.powf(-1.0 / d);
    if model.is_singular() {
        return Ok(base);
    }
    // tier weights cancel in the truncated fraction: it is a ratio of radial
    // integrals of g_eps alone
    let alpha = model.alpha();
    let eps = model.epsilon();
    let di = model.dimension() as i32;
    let radial = |from: f64| {
        integrate_to_inf_rel(move |r| r.powi(di - 1) / (r.powf(alpha) + eps), from, 1e-9)
    };
    let total = radial(0.0)?;
    let mut radius = base.min(64.0 * eps.powf(1.0 / alpha)).max(1.0);
    loop {
        let fraction = radial(radius)? / total;
        if fraction < TRUNCATION_FRACTION {
            return Ok(radius);
        }
        radius *= 2.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use corrmath::TierParams;

    fn model(eps: f64, lambda: f64) -> NetworkModel {
        NetworkModel::new(vec![TierParams::new(lambda, 1.0, 2.0).unwrap()], 4.0, 2, eps).unwrap()
    }

    #[test]
    fn singular_rule_scales_with_density() {
        let r1 = default_window_radius(&model(0.0, 1.0)).unwrap();
        let r4 = default_window_radius(&model(0.0, 4.0)).unwrap();
        assert_eq!(r1, 30.0);
        assert_eq!(r4, 15.0);
    }

    #[test]
    fn bounded_rule_meets_truncation_target() {
        let m = model(1.0, 1.0);
        let radius = default_window_radius(&m).unwrap();
        // analytic tail for alpha=4, eps=1: fraction ~ (1/(2 R^2)) / (pi/4)
        let fraction = (1.0 / (2.0 * radius * radius)) / (std::f64::consts::PI / 4.0);
        assert!(fraction < TRUNCATION_FRACTION, "R = {radius}");
    }

    #[test]
    fn plan_validation() {
        assert!(SimPlan::new(10.0, 100, 2, 0, 1).is_ok());
        assert!(SimPlan::new(0.0, 100, 2, 0, 1).is_err());
        assert!(SimPlan::new(10.0, 0, 2, 0, 1).is_err());
        assert!(SimPlan::new(10.0, 100, 0, 0, 1).is_err());
        assert!(SimPlan::new(10.0, 100, 2, 0, 0).is_err());
    }
}
