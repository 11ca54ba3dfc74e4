//! Canned sweep setups for the reference figures.

use crate::error::{ExpError, Result};
use crate::spec::{db_to_linear, Outputs, SweepSpec, SweepVariable};
use corrmath::{NetworkModel, TierParams};
use hetnet_sim::{derive_seed, SimPlan};

/// Default trial counts: success probabilities resolve to ~0.0016 binomial
/// standard error, correlation runs use paired samples.
pub const SUCCESS_TRIALS: u64 = 100_000;
pub const CORR_TRIALS: u64 = 200_000;

const PRESET_SEED: u64 = 0x5EED_0001;

/// A figure is one or more labeled sweeps (one per curve family member).
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: String,
    pub series: Vec<SweepSpec>,
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..points)
        .map(|i| 10f64.powf(a + (b - a) * i as f64 / (points - 1) as f64))
        .collect()
}

fn two_tier(lambda2: f64, p1: f64, p2: f64, beta1: f64, beta2: f64, alpha: f64) -> NetworkModel {
    NetworkModel::planar(
        vec![
            TierParams::new(1.0, p1, beta1).expect("valid tier"),
            TierParams::new(lambda2, p2, beta2).expect("valid tier"),
        ],
        alpha,
    )
    .expect("valid model")
}

fn plan_for(model: &NetworkModel, trials: u64, slots: u32, series_index: u64) -> SimPlan {
    SimPlan::for_model(
        model,
        trials,
        slots,
        derive_seed(PRESET_SEED, series_index),
        default_parallelism(),
    )
    .expect("valid plan")
}

/// The dB values of the threshold series shared by the density and power
/// figures. 0 dB is the exactly-equal-threshold case; 1 dB is the labeled
/// near-equal one.
const BETA2_SERIES_DB: [f64; 4] = [-4.0, -2.0, 0.0, 1.0];

pub fn figure_preset(name: &str) -> Result<Preset> {
    let series = match name {
        "fig2" => {
            // correlation vs separation, alpha = 4, per epsilon
            let grid: Vec<f64> = (0..13).map(|i| i as f64 * 0.25).collect();
            [1.0, 0.1, 0.01]
                .iter()
                .enumerate()
                .map(|(i, &eps)| {
                    let model = NetworkModel::new(
                        vec![TierParams::new(1.0, 1.0, 2.0).expect("valid tier")],
                        4.0,
                        2,
                        eps,
                    )
                    .expect("valid model");
                    SweepSpec {
                        label: format!("fig2_eps{eps}"),
                        plan: plan_for(&model, CORR_TRIALS, 2, i as u64),
                        base_model: model,
                        sweep_variable: SweepVariable::Separation,
                        grid: grid.clone(),
                        outputs: Outputs {
                            analytic: true,
                            simulated: true,
                            correlation: true,
                            ..Default::default()
                        },
                    }
                })
                .collect()
        }
        "fig3" => {
            // joint success vs beta_2; n=2, P_1=10P_2, lambda_2=2lambda_1,
            // beta_1 = 0 dB, alpha = 3
            let model = two_tier(2.0, 10.0, 1.0, 1.0, 1.0, 3.0);
            vec![SweepSpec {
                label: "fig3".into(),
                plan: plan_for(&model, SUCCESS_TRIALS, 2, 0),
                base_model: model,
                sweep_variable: SweepVariable::BetaDb { tier: 1 },
                grid: (0..8).map(|i| -4.0 + 2.0 * i as f64).collect(),
                outputs: Outputs {
                    analytic: true,
                    simulated: true,
                    bounds: true,
                    ..Default::default()
                },
            }]
        }
        "fig4" => beta2_family(name, SweepVariable::Density { tier: 1 }, log_grid(0.1, 10.0, 11), 10.0, 1.0),
        "fig5" => beta2_family(name, SweepVariable::Power { tier: 1 }, log_grid(1.0, 100.0, 11), 100.0, 1.0),
        "fig6" => {
            // conditional success vs n at beta_1 = beta_2, per alpha
            [3.0, 6.0]
                .iter()
                .enumerate()
                .map(|(i, &alpha)| {
                    let model = two_tier(2.0, 10.0, 1.0, 1.0, 1.0, alpha);
                    SweepSpec {
                        label: format!("fig6_alpha{alpha}"),
                        plan: plan_for(&model, SUCCESS_TRIALS, 2, i as u64),
                        base_model: model,
                        sweep_variable: SweepVariable::Slots,
                        grid: (2..=10).map(f64::from).collect(),
                        outputs: Outputs {
                            analytic: true,
                            simulated: true,
                            conditional: true,
                            ..Default::default()
                        },
                    }
                })
                .collect()
        }
        other => return Err(ExpError::UnknownPreset(other.into())),
    };
    for s in &series {
        s.validate()?;
    }
    Ok(Preset { name: name.into(), series })
}

/// Density/power sweeps share their structure: n=2, beta_1 = 0 dB, alpha = 3,
/// one series per beta_2 in [`BETA2_SERIES_DB`].
fn beta2_family(
    name: &str,
    variable: SweepVariable,
    grid: Vec<f64>,
    p1: f64,
    p2: f64,
) -> Vec<SweepSpec> {
    BETA2_SERIES_DB
        .iter()
        .enumerate()
        .map(|(i, &beta2_db)| {
            let model = two_tier(2.0, p1, p2, 1.0, db_to_linear(beta2_db), 3.0);
            SweepSpec {
                label: format!("{name}_beta2_{beta2_db}db"),
                plan: plan_for(&model, SUCCESS_TRIALS, 2, i as u64),
                base_model: model,
                sweep_variable: variable,
                grid: grid.clone(),
                outputs: Outputs {
                    analytic: true,
                    simulated: true,
                    bounds: true,
                    ..Default::default()
                },
            }
        })
        .collect()
}
