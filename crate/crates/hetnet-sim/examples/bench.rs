//! Rough timing probe for the estimators.

use corrmath::{NetworkModel, TierParams};
use hetnet_sim::{estimate_joint_success, SimPlan};
use std::time::Instant;

fn main() {
    let model = NetworkModel::planar(
        vec![
            TierParams::new(1.0, 10.0, 1.0).unwrap(),
            TierParams::new(2.0, 1.0, 1.0).unwrap(),
        ],
        3.0,
    )
    .unwrap();
    let trials: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000);
    let plan = SimPlan::for_model(&model, trials, 2, 7, 1).unwrap();
    println!("window radius {}", plan.window_radius);
    let t0 = Instant::now();
    let est = estimate_joint_success(&model, &plan).unwrap();
    println!("{trials} trials: {:?} -> {est:?}", t0.elapsed());
}
