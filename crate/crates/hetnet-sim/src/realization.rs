//! One sampled network snapshot: BS locations and per-slot fading.

use crate::error::Result;
use crate::plan::SimPlan;
use crate::rng::trial_rng;
use corrmath::NetworkModel;
use rand::Rng;
use rand_distr::{Distribution, Exp1, Poisson};

/// A base station drawn inside the sampling window. Unused trailing
/// coordinates are zero for d < 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BsPoint {
    pub location: [f64; 3],
    pub tier: usize,
}

impl BsPoint {
    pub fn norm(&self) -> f64 {
        let [x, y, z] = self.location;
        (x * x + y * y + z * z).sqrt()
    }

    pub fn distance_to(&self, other: [f64; 3]) -> f64 {
        let dx = self.location[0] - other[0];
        let dy = self.location[1] - other[1];
        let dz = self.location[2] - other[2];
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Immutable snapshot of one trial: the point pattern is shared by all slots,
/// fading is redrawn independently per point and slot.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    points: Vec<BsPoint>,
    /// row-major [point][slot]
    fading: Vec<f64>,
    slots: u32,
}

impl Realization {
    pub fn points(&self) -> &[BsPoint] {
        &self.points
    }

    pub fn slots(&self) -> u32 {
        self.slots
    }

    /// Fading power coefficient of `point` in `slot`, h ~ exp(1).
    pub fn fading(&self, point: usize, slot: u32) -> f64 {
        self.fading[point * self.slots as usize + slot as usize]
    }

    /// Test constructor with explicit points and fading values.
    pub fn from_parts(points: Vec<BsPoint>, fading: Vec<f64>, slots: u32) -> Self {
        assert_eq!(fading.len(), points.len() * slots as usize);
        Self { points, fading, slots }
    }
}

fn sample_direction<R: Rng>(rng: &mut R, dimension: u32) -> [f64; 3] {
    match dimension {
        1 => {
            if rng.random::<bool>() {
                [1.0, 0.0, 0.0]
            } else {
                [-1.0, 0.0, 0.0]
            }
        }
        2 => {
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            [theta.cos(), theta.sin(), 0.0]
        }
        3 => {
            // z uniform on [-1, 1], azimuth uniform
            let z: f64 = rng.random_range(-1.0..1.0);
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            let s = (1.0 - z * z).sqrt();
            [s * theta.cos(), s * theta.sin(), z]
        }
        _ => unreachable!("dimension validated at model construction"),
    }
}

/// Samples the K-tier point pattern and fading for one trial.
///
/// A pure function of (model, plan.master_seed, plan.slots, trial_index):
/// per-tier counts are Poisson with mean `lambda_k c_d R^d`, locations are
/// uniform in the window ball, and every point gets `slots` independent
/// exp(1) fading draws. Execution order and parallelism play no part.
pub fn sample_realization(
    model: &NetworkModel,
    plan: &SimPlan,
    trial_index: u64,
) -> Result<Realization> {
    let mut rng = trial_rng(plan.master_seed, trial_index);
    let d = model.dimension();
    let radius = plan.window_radius;
    let window_volume = model.unit_ball_volume() * radius.powi(d as i32);
    let mut points = Vec::new();
    for (tier, params) in model.tiers().iter().enumerate() {
        let mean = params.density * window_volume;
        let count = Poisson::new(mean)
            .expect("positive Poisson mean by model invariants")
            .sample(&mut rng) as u64;
        for _ in 0..count {
            let dir = sample_direction(&mut rng, d);
            let r = radius * rng.random::<f64>().powf(1.0 / d as f64);
            points.push(BsPoint {
                location: [dir[0] * r, dir[1] * r, dir[2] * r],
                tier,
            });
        }
    }
    let slots = plan.slots;
    let mut fading = Vec::with_capacity(points.len() * slots as usize);
    for _ in 0..points.len() {
        for _ in 0..slots {
            fading.push(Exp1.sample(&mut rng));
        }
    }
    Ok(Realization { points, fading, slots })
}
