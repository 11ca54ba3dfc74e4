//! Sweep descriptions: what to vary, over which grid, and which columns to
//! produce.

use crate::error::{ExpError, Result};
use corrmath::{NetworkModel, TierParams};
use hetnet_sim::SimPlan;

/// The quantity varied along the grid. Tier indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepVariable {
    /// SIR threshold of one tier, grid values in dB.
    BetaDb { tier: usize },
    /// BS density of one tier, linear.
    Density { tier: usize },
    /// Transmit power of one tier, linear.
    Power { tier: usize },
    /// Spatial separation of the two interference observation points.
    Separation,
    /// Number of consecutive slots n.
    Slots,
    /// Path-loss exponent.
    Alpha,
    /// Path-loss bound epsilon.
    Epsilon,
}

/// Which columns a sweep populates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Outputs {
    pub analytic: bool,
    pub simulated: bool,
    pub bounds: bool,
    /// Interpret the target quantity as the conditional success probability.
    pub conditional: bool,
    /// Interpret the target quantity as the interference correlation
    /// coefficient.
    pub correlation: bool,
}

/// One parameter sweep: a base model, a variable with its grid, the requested
/// columns and the Monte Carlo plan shared (modulo per-row seeds) by all rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Identifier used for CSV file names, e.g. "fig3" or "fig6_alpha3".
    pub label: String,
    pub base_model: NetworkModel,
    pub sweep_variable: SweepVariable,
    pub grid: Vec<f64>,
    pub outputs: Outputs,
    pub plan: SimPlan,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(ExpError::InvalidSpec("empty grid".into()));
        }
        let increasing = self.grid.windows(2).all(|w| w[0] < w[1]);
        let decreasing = self.grid.windows(2).all(|w| w[0] > w[1]);
        if self.grid.len() > 1 && !increasing && !decreasing {
            return Err(ExpError::InvalidSpec("grid must be strictly monotone".into()));
        }
        if self.outputs.conditional && self.outputs.correlation {
            return Err(ExpError::InvalidSpec(
                "conditional and correlation outputs are mutually exclusive".into(),
            ));
        }
        if self.outputs.correlation {
            let eps_ok = match self.sweep_variable {
                SweepVariable::Epsilon => self.grid.iter().all(|&e| e > 0.0),
                _ => self.base_model.epsilon() > 0.0,
            };
            if !eps_ok {
                return Err(ExpError::InvalidSpec(
                    "correlation output requires epsilon > 0".into(),
                ));
            }
        } else if matches!(self.sweep_variable, SweepVariable::Separation) {
            return Err(ExpError::InvalidSpec(
                "separation sweeps only make sense for correlation output".into(),
            ));
        }
        if let SweepVariable::BetaDb { tier }
        | SweepVariable::Density { tier }
        | SweepVariable::Power { tier } = self.sweep_variable
        {
            if tier >= self.base_model.num_tiers() {
                return Err(ExpError::InvalidSpec(format!(
                    "sweep tier {tier} out of range for a {}-tier model",
                    self.base_model.num_tiers()
                )));
            }
        }
        if matches!(self.sweep_variable, SweepVariable::Slots) {
            if self.grid.iter().any(|&v| v < 1.0 || v.fract() != 0.0) {
                return Err(ExpError::InvalidSpec("slot grid must be positive integers".into()));
            }
        }
        Ok(())
    }

    /// The model for one grid value, plus the slot count and observation-point
    /// separation the row should use.
    pub(crate) fn row_inputs(&self, value: f64) -> Result<(NetworkModel, u32, f64)> {
        let m = &self.base_model;
        let rebuilt = |tiers: Vec<TierParams>, alpha: f64| {
            NetworkModel::new(tiers, alpha, m.dimension(), m.epsilon())
        };
        let retier = |tier: usize, f: &dyn Fn(&TierParams) -> Result<TierParams>| {
            let mut tiers = Vec::with_capacity(m.num_tiers());
            for (i, t) in m.tiers().iter().enumerate() {
                tiers.push(if i == tier { f(t)? } else { *t });
            }
            Ok::<_, ExpError>(tiers)
        };
        let mut slots = self.plan.slots;
        let mut separation = 0.0;
        let model = match self.sweep_variable {
            SweepVariable::BetaDb { tier } => rebuilt(
                retier(tier, &|t| {
                    Ok(TierParams::new(t.density, t.power, db_to_linear(value))?)
                })?,
                m.alpha(),
            )?,
            SweepVariable::Density { tier } => rebuilt(
                retier(tier, &|t| Ok(TierParams::new(value, t.power, t.threshold)?))?,
                m.alpha(),
            )?,
            SweepVariable::Power { tier } => rebuilt(
                retier(tier, &|t| Ok(TierParams::new(t.density, value, t.threshold)?))?,
                m.alpha(),
            )?,
            SweepVariable::Separation => {
                separation = value;
                m.clone()
            }
            SweepVariable::Slots => {
                slots = value as u32;
                m.clone()
            }
            SweepVariable::Alpha => rebuilt(m.tiers().to_vec(), value)?,
            SweepVariable::Epsilon => m.with_epsilon(value)?,
        };
        Ok((model, slots, separation))
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// One grid point's results. Absent columns were either not requested or
/// failed; failures leave a note in `flags`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub sweep_value: f64,
    pub analytic: Option<f64>,
    pub sim: Option<hetnet_sim::Estimate>,
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    pub flags: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> NetworkModel {
        NetworkModel::planar(
            vec![
                TierParams::new(1.0, 10.0, 1.0).unwrap(),
                TierParams::new(2.0, 1.0, 2.0).unwrap(),
            ],
            3.0,
        )
        .unwrap()
    }

    fn spec(variable: SweepVariable, grid: Vec<f64>, outputs: Outputs) -> SweepSpec {
        SweepSpec {
            label: "t".into(),
            base_model: base(),
            sweep_variable: variable,
            grid,
            outputs,
            plan: SimPlan::new(10.0, 10, 2, 0, 1).unwrap(),
        }
    }

    #[test]
    fn validation_rejects_bad_grids() {
        let out = Outputs { analytic: true, ..Default::default() };
        assert!(spec(SweepVariable::Alpha, vec![], out).validate().is_err());
        assert!(spec(SweepVariable::Alpha, vec![3.0, 3.0], out).validate().is_err());
        assert!(spec(SweepVariable::Alpha, vec![3.0, 5.0, 4.0], out).validate().is_err());
        assert!(spec(SweepVariable::Alpha, vec![5.0, 4.0, 3.0], out).validate().is_ok());
        assert!(spec(SweepVariable::BetaDb { tier: 2 }, vec![0.0, 1.0], out)
            .validate()
            .is_err());
        assert!(spec(SweepVariable::Slots, vec![2.0, 2.5], out).validate().is_err());
        // correlation on a singular base model
        let corr = Outputs { analytic: true, correlation: true, ..Default::default() };
        assert!(spec(SweepVariable::Separation, vec![0.0, 1.0], corr).validate().is_err());
    }

    #[test]
    fn beta_db_row_converts_to_linear_threshold() {
        let out = Outputs { analytic: true, ..Default::default() };
        let s = spec(SweepVariable::BetaDb { tier: 1 }, vec![-4.0, 10.0], out);
        let (m, slots, _) = s.row_inputs(10.0).unwrap();
        assert!((m.tiers()[1].threshold - 10.0).abs() < 1e-12);
        assert_eq!(m.tiers()[0].threshold, 1.0);
        assert_eq!(slots, 2);
    }

    #[test]
    fn slots_row_overrides_plan_slots() {
        let out = Outputs { analytic: true, conditional: true, ..Default::default() };
        let s = spec(SweepVariable::Slots, vec![2.0, 3.0], out);
        let (m, slots, _) = s.row_inputs(3.0).unwrap();
        assert_eq!(slots, 3);
        assert_eq!(m, base());
    }
}
