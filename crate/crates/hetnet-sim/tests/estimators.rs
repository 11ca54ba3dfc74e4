//! Statistical contracts of the estimators that need more trials than the
//! in-module unit tests. Kept affordable with d = 1 models (sparse windows).

use corrmath::{NetworkModel, TierParams};
use hetnet_sim::{
    estimate_conditional_success, estimate_interference_moments, estimate_joint_success,
    FadingKind, SimPlan,
};

fn line_model(alpha: f64, beta: f64) -> NetworkModel {
    NetworkModel::new(vec![TierParams::new(1.0, 1.0, beta).unwrap()], alpha, 1, 0.0).unwrap()
}

#[test]
fn std_error_scales_as_inverse_sqrt_trials() {
    let m = line_model(4.0, 2.0);
    let small = SimPlan::for_model(&m, 1_000, 1, 5, 1).unwrap();
    let large = SimPlan::for_model(&m, 100_000, 1, 5, 1).unwrap();
    let a = estimate_joint_success(&m, &small).unwrap();
    let b = estimate_joint_success(&m, &large).unwrap();
    let ratio = b.std_error / a.std_error;
    // ideal 1/sqrt(100) = 0.1
    assert!((0.05..=0.2).contains(&ratio), "se ratio {ratio}");
}

#[test]
fn conditional_grows_with_alpha() {
    // delta = 1/alpha in d = 1; smaller delta -> higher conditional success
    let m3 = line_model(3.0, 2.0);
    let m6 = line_model(6.0, 2.0);
    let p3 = SimPlan::for_model(&m3, 30_000, 2, 21, 1).unwrap();
    let p6 = SimPlan::for_model(&m6, 30_000, 2, 21, 1).unwrap();
    let c3 = estimate_conditional_success(&m3, &p3, 2).unwrap();
    let c6 = estimate_conditional_success(&m6, &p6, 2).unwrap();
    assert!(c6.value > c3.value, "alpha=6 {c6:?} vs alpha=3 {c3:?}");
    assert!(c3.z_score(0.75).abs() < 3.0); // 1/(1 + 1/3)
    assert!(c6.z_score(6.0 / 7.0).abs() < 3.0);
}

#[test]
fn conditional_invariant_under_power_scaling() {
    let base = line_model(4.0, 2.0);
    let scaled = NetworkModel::new(
        vec![TierParams::new(1.0, 10.0, 2.0).unwrap()],
        4.0,
        1,
        0.0,
    )
    .unwrap();
    let plan_a = SimPlan::for_model(&base, 30_000, 2, 33, 1).unwrap();
    let plan_b = SimPlan::for_model(&scaled, 30_000, 2, 34, 1).unwrap();
    let a = estimate_conditional_success(&base, &plan_a, 2).unwrap();
    let b = estimate_conditional_success(&scaled, &plan_b, 2).unwrap();
    assert!(a.ci_overlaps(&b), "{a:?} vs {b:?}");
}

#[test]
fn moment_scaling_laws() {
    let base = NetworkModel::new(vec![TierParams::new(1.0, 1.0, 2.0).unwrap()], 4.0, 1, 1.0)
        .unwrap();
    let doubled = NetworkModel::new(vec![TierParams::new(1.0, 2.0, 2.0).unwrap()], 4.0, 1, 1.0)
        .unwrap();
    let plan = |m: &NetworkModel, seed| SimPlan::for_model(m, 20_000, 1, seed, 1).unwrap();
    let (m1, v1) =
        estimate_interference_moments(&base, &plan(&base, 1), FadingKind::Rayleigh).unwrap();
    let (m2, v2) =
        estimate_interference_moments(&doubled, &plan(&doubled, 2), FadingKind::Rayleigh).unwrap();
    // powers x2 -> mean x2, variance x4
    let z_mean = (m2.value - 2.0 * m1.value)
        / (m2.std_error.hypot(2.0 * m1.std_error));
    let z_var = (v2.value - 4.0 * v1.value) / (v2.std_error.hypot(4.0 * v1.std_error));
    assert!(z_mean.abs() < 3.0, "mean scaling z {z_mean}");
    assert!(z_var.abs() < 3.0, "variance scaling z {z_var}");
}

#[test]
fn rayleigh_doubles_deterministic_variance() {
    // E[h^2] = 2 vs 1 at identical geometry (same seed, same point stream)
    let m = NetworkModel::new(vec![TierParams::new(1.0, 1.0, 2.0).unwrap()], 4.0, 1, 1.0)
        .unwrap();
    let plan = SimPlan::for_model(&m, 20_000, 1, 9, 1).unwrap();
    let (_, v_ray) = estimate_interference_moments(&m, &plan, FadingKind::Rayleigh).unwrap();
    let (m_det, v_det) =
        estimate_interference_moments(&m, &plan, FadingKind::DeterministicUnit).unwrap();
    let z = (v_ray.value - 2.0 * v_det.value)
        / (v_ray.std_error.hypot(2.0 * v_det.std_error));
    assert!(z.abs() < 3.0, "variance ratio z {z}");
    assert!(m_det.std_error < v_det.std_error + 1.0); // sanity: finite errors
}
