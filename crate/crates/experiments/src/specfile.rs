//! JSON sweep descriptions for user-supplied (non-preset) runs.
//!
//! The on-disk form is deliberately plain — primitive fields only — and is
//! validated on conversion, so hand-edited files cannot smuggle in an
//! inconsistent model.

use crate::error::{ExpError, Result};
use crate::spec::{Outputs, SweepSpec, SweepVariable};
use corrmath::{NetworkModel, TierParams};
use hetnet_sim::SimPlan;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TierFile {
    pub density: f64,
    pub power: f64,
    /// Linear threshold, not dB.
    pub threshold: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecFile {
    pub label: String,
    pub tiers: Vec<TierFile>,
    pub alpha: f64,
    #[serde(default = "default_dimension")]
    pub dimension: u32,
    #[serde(default)]
    pub epsilon: f64,
    /// One of: beta_db, density, power, separation, slots, alpha, epsilon.
    pub sweep_variable: String,
    /// Required for the per-tier variables, 0-based.
    #[serde(default)]
    pub sweep_tier: Option<usize>,
    pub grid: Vec<f64>,
    /// Subset of: analytic, simulated, bounds, conditional, correlation.
    pub outputs: Vec<String>,
    pub trials: u64,
    #[serde(default = "default_slots")]
    pub slots: u32,
    #[serde(default)]
    pub seed: u64,
    /// Falls back to the model's default window when absent.
    #[serde(default)]
    pub window_radius: Option<f64>,
    #[serde(default)]
    pub parallelism: Option<usize>,
}

fn default_dimension() -> u32 {
    2
}

fn default_slots() -> u32 {
    2
}

impl SpecFile {
    pub fn into_spec(self) -> Result<SweepSpec> {
        let tiers = self
            .tiers
            .iter()
            .map(|t| TierParams::new(t.density, t.power, t.threshold))
            .collect::<corrmath::Result<Vec<_>>>()?;
        let model = NetworkModel::new(tiers, self.alpha, self.dimension, self.epsilon)?;

        let tier = || {
            self.sweep_tier.ok_or_else(|| {
                ExpError::InvalidSpec(format!(
                    "sweep_variable '{}' needs sweep_tier",
                    self.sweep_variable
                ))
            })
        };
        let sweep_variable = match self.sweep_variable.as_str() {
            "beta_db" => SweepVariable::BetaDb { tier: tier()? },
            "density" => SweepVariable::Density { tier: tier()? },
            "power" => SweepVariable::Power { tier: tier()? },
            "separation" => SweepVariable::Separation,
            "slots" => SweepVariable::Slots,
            "alpha" => SweepVariable::Alpha,
            "epsilon" => SweepVariable::Epsilon,
            other => {
                return Err(ExpError::InvalidSpec(format!("unknown sweep_variable '{other}'")))
            }
        };

        let mut outputs = Outputs::default();
        for name in &self.outputs {
            match name.as_str() {
                "analytic" => outputs.analytic = true,
                "simulated" => outputs.simulated = true,
                "bounds" => outputs.bounds = true,
                "conditional" => outputs.conditional = true,
                "correlation" => outputs.correlation = true,
                other => {
                    return Err(ExpError::InvalidSpec(format!("unknown output '{other}'")))
                }
            }
        }

        let parallelism = self.parallelism.unwrap_or(1);
        let plan = match self.window_radius {
            Some(r) => SimPlan::new(r, self.trials, self.slots, self.seed, parallelism)?,
            None => SimPlan::for_model(&model, self.trials, self.slots, self.seed, parallelism)?,
        };

        let spec = SweepSpec {
            label: self.label,
            base_model: model,
            sweep_variable,
            grid: self.grid,
            outputs,
            plan,
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn load_spec(path: &Path) -> Result<SweepSpec> {
    let text = std::fs::read_to_string(path)?;
    let file: SpecFile = serde_json::from_str(&text)
        .map_err(|e| ExpError::InvalidSpec(format!("{}: {e}", path.display())))?;
    file.into_spec()
}
