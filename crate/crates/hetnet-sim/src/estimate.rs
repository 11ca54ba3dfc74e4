//! Statistical estimators over independent trials.
//!
//! Trials execute in parallel but are collected in trial order and reduced
//! serially, so every estimate is bit-identical across worker counts.

use crate::error::{Result, SimError};
use crate::plan::SimPlan;
use crate::realization::sample_realization;
use crate::rng::trial_rng;
use crate::sir::{conditional_indicators, joint_success_indicator};
use corrmath::NetworkModel;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;

/// Stream label reserved for bootstrap resampling so it never collides with a
/// trial index (trial indices are < plan.trials).
const BOOTSTRAP_STREAM: u64 = u64::MAX;

const BOOTSTRAP_RESAMPLES: usize = 1000;

/// A simulated quantity with its uncertainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub trials: u64,
}

impl Estimate {
    fn new(value: f64, std_error: f64, trials: u64) -> Self {
        Self {
            value,
            std_error,
            ci95: (value - 1.96 * std_error, value + 1.96 * std_error),
            trials,
        }
    }

    fn bernoulli(successes: u64, trials: u64) -> Self {
        let p = successes as f64 / trials as f64;
        let se = (p * (1.0 - p) / trials as f64).sqrt();
        Self::new(p, se, trials)
    }

    /// z-score of this estimate against a reference value.
    pub fn z_score(&self, reference: f64) -> f64 {
        (self.value - reference) / self.std_error
    }

    pub fn ci_overlaps(&self, other: &Estimate) -> bool {
        self.ci95.0 <= other.ci95.1 && other.ci95.0 <= self.ci95.1
    }
}

/// Fading law used by the moment and correlation estimators. SIR runs are
/// always Rayleigh, matching the system model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FadingKind {
    Rayleigh,
    /// h = 1 in every slot; geometry sampling is unchanged, so a run with the
    /// same seed shares its point pattern with the Rayleigh run.
    DeterministicUnit,
}

/// Correlation estimator mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrMode {
    /// Same location, two slots; separation must be 0.
    Temporal,
    /// Two locations `separation` apart, two slots.
    SpatioTemporal,
}

/// Maps trials through `f` on a pool of `plan.parallelism` workers.
fn collect_trials<T, F>(plan: &SimPlan, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.parallelism)
        .build()
        .expect("worker pool construction");
    pool.install(|| (0..plan.trials).into_par_iter().map(f).collect())
}

/// Monte Carlo estimate of the joint success probability over `plan.slots`
/// slots: the fraction of trials in which some BS clears its tier threshold
/// in every slot. Uses the singular path loss of the SIR model.
pub fn estimate_joint_success(model: &NetworkModel, plan: &SimPlan) -> Result<Estimate> {
    if !model.is_singular() {
        return Err(SimError::RequiresSingularPathLoss);
    }
    let indicators = collect_trials(plan, |trial| {
        let realization = sample_realization(model, plan, trial).expect("valid inputs");
        joint_success_indicator(&realization, model)
    });
    let successes = indicators.iter().filter(|&&b| b).count() as u64;
    Ok(Estimate::bernoulli(successes, plan.trials))
}

/// Ratio estimator of the conditional success probability: trials where one
/// BS covers all `n` slots over trials where one covers the first `n - 1`.
/// Standard error by nonparametric bootstrap (1000 resamples).
pub fn estimate_conditional_success(
    model: &NetworkModel,
    plan: &SimPlan,
    n: u32,
) -> Result<Estimate> {
    if !model.is_singular() {
        return Err(SimError::RequiresSingularPathLoss);
    }
    if n < 2 {
        return Err(SimError::Model(corrmath::Error::SlotCountTooSmall { min: 2, got: n }));
    }
    let plan = plan.with_slots(n);
    let pairs = collect_trials(&plan, |trial| {
        let realization = sample_realization(model, &plan, trial).expect("valid inputs");
        conditional_indicators(&realization, model)
    });
    let both = pairs.iter().filter(|&&(a, _)| a).count() as u64;
    let prefix = pairs.iter().filter(|&&(_, b)| b).count() as u64;
    if prefix == 0 {
        return Err(SimError::EmptyConditioningEvent { trials: plan.trials });
    }
    let value = both as f64 / prefix as f64;

    // bootstrap over the trial-level categories (both / prefix-only / neither);
    // resampling category counts is equivalent to resampling trial indices
    let trials = plan.trials;
    let mut rng = trial_rng(plan.master_seed, BOOTSTRAP_STREAM);
    let p_both = both as f64 / trials as f64;
    let p_prefix_only = (prefix - both) as f64 / trials as f64;
    let mut resamples = Vec::with_capacity(BOOTSTRAP_RESAMPLES);
    for _ in 0..BOOTSTRAP_RESAMPLES {
        let rb = Binomial::new(trials, p_both).expect("probability in range").sample(&mut rng);
        let rest = trials - rb;
        let q = if p_both >= 1.0 { 0.0 } else { p_prefix_only / (1.0 - p_both) };
        let rp = Binomial::new(rest, q.min(1.0)).expect("probability in range").sample(&mut rng);
        let denom = rb + rp;
        if denom > 0 {
            resamples.push(rb as f64 / denom as f64);
        }
    }
    let mean = resamples.iter().sum::<f64>() / resamples.len() as f64;
    let var = resamples.iter().map(|r| (r - mean).powi(2)).sum::<f64>()
        / (resamples.len() - 1) as f64;
    Ok(Estimate::new(value, var.sqrt(), trials))
}

fn interference_at<F: Fn(usize, u32) -> f64>(
    realization: &crate::realization::Realization,
    model: &NetworkModel,
    origin: [f64; 3],
    slot: u32,
    fading_of: &F,
) -> f64 {
    realization
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            model.tiers()[p.tier].power * fading_of(i, slot) * model.path_gain(p.distance_to(origin))
        })
        .sum()
}

/// Sample mean and variance of the total interference at the typical user
/// under bounded path loss, with standard errors.
pub fn estimate_interference_moments(
    model: &NetworkModel,
    plan: &SimPlan,
    fading: FadingKind,
) -> Result<(Estimate, Estimate)> {
    if model.is_singular() {
        return Err(SimError::RequiresBoundedPathLoss);
    }
    let plan = plan.with_slots(1);
    let samples: Vec<f64> = collect_trials(&plan, |trial| {
        let realization = sample_realization(model, &plan, trial).expect("valid inputs");
        let fading_of = |i: usize, slot: u32| match fading {
            FadingKind::Rayleigh => realization.fading(i, slot),
            FadingKind::DeterministicUnit => 1.0,
        };
        interference_at(&realization, model, [0.0; 3], 0, &fading_of)
    });
    let t = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / t;
    let m2 = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (t - 1.0);
    let m4 = samples.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / t;
    let mean_est = Estimate::new(mean, (m2 / t).sqrt(), plan.trials);
    // asymptotic SE of the sample variance
    let var_se = ((m4 - m2 * m2).max(0.0) / t).sqrt();
    let var_est = Estimate::new(m2, var_se, plan.trials);
    Ok((mean_est, var_est))
}

/// Pearson correlation of the interference pair (I_t1(u), I_t2(v)) with u at
/// the origin, v at distance `separation`, shared geometry and independent
/// per-slot fading. Standard error via the Fisher z-transform.
pub fn estimate_corr_coefficient(
    model: &NetworkModel,
    plan: &SimPlan,
    separation: f64,
    mode: CorrMode,
    fading: FadingKind,
) -> Result<Estimate> {
    if model.is_singular() {
        return Err(SimError::RequiresBoundedPathLoss);
    }
    if mode == CorrMode::Temporal && separation != 0.0 {
        return Err(SimError::TemporalSeparationNonzero(separation));
    }
    let plan = plan.with_slots(2);
    let v = [separation, 0.0, 0.0];
    let pairs: Vec<(f64, f64)> = collect_trials(&plan, |trial| {
        let realization = sample_realization(model, &plan, trial).expect("valid inputs");
        let fading_of = |i: usize, slot: u32| match fading {
            FadingKind::Rayleigh => realization.fading(i, slot),
            FadingKind::DeterministicUnit => 1.0,
        };
        (
            interference_at(&realization, model, [0.0; 3], 0, &fading_of),
            interference_at(&realization, model, v, 1, &fading_of),
        )
    });
    let t = pairs.len() as f64;
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / t;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / t;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (x, y) in &pairs {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(SimError::DegenerateSample(if sxx == 0.0 { "first" } else { "second" }));
    }
    let r = sxy / (sxx.sqrt() * syy.sqrt());
    let z_se = 1.0 / (t - 3.0).sqrt();
    let se = (1.0 - r * r) * z_se;
    Ok(Estimate::new(r, se, plan.trials))
}
