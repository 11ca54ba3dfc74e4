//! Interference moments under the bounded path loss law.
//!
//! Both moments are intensity-weighted integrals of g or g^2 over the whole
//! space; they diverge under the singular law, so epsilon > 0 is required.

use crate::error::{Error, Result};
use crate::model::{FadingMoments, NetworkModel};
use crate::quad::integrate_to_inf_rel;

pub(crate) const QUAD_REL_TOL: f64 = 1e-9;

fn require_bounded(model: &NetworkModel) -> Result<()> {
    if model.is_singular() {
        Err(Error::SingularPathLoss)
    } else {
        Ok(())
    }
}

/// Surface area of the unit sphere in d dimensions, `c_d * d`.
fn sphere_surface(model: &NetworkModel) -> f64 {
    model.unit_ball_volume() * model.dimension() as f64
}

/// `int_{R^d} g_eps(x) dx`, by radial quadrature.
pub fn path_loss_integral(model: &NetworkModel) -> Result<f64> {
    require_bounded(model)?;
    let d = model.dimension() as i32;
    let alpha = model.alpha();
    let eps = model.epsilon();
    let radial = integrate_to_inf_rel(
        |r| r.powi(d - 1) / (r.powf(alpha) + eps),
        0.0,
        QUAD_REL_TOL,
    )?;
    Ok(sphere_surface(model) * radial)
}

/// `int_{R^d} g_eps(x)^2 dx`, by radial quadrature.
pub fn path_loss_sq_integral(model: &NetworkModel) -> Result<f64> {
    require_bounded(model)?;
    let d = model.dimension() as i32;
    let alpha = model.alpha();
    let eps = model.epsilon();
    let radial = integrate_to_inf_rel(
        |r| {
            let g = 1.0 / (r.powf(alpha) + eps);
            r.powi(d - 1) * g * g
        },
        0.0,
        QUAD_REL_TOL,
    )?;
    Ok(sphere_surface(model) * radial)
}

/// Beta-identity closed form of the radial g integral,
/// `int_0^inf r^{d-1} / (r^alpha + eps) dr = eps^{delta-1} * pi / (alpha sin pi delta)`.
/// Kept as an internal cross-check route against the quadrature path.
pub fn path_loss_integral_closed_form(model: &NetworkModel) -> Result<f64> {
    require_bounded(model)?;
    let delta = model.delta();
    let alpha = model.alpha();
    let radial = model.epsilon().powf(delta - 1.0) * std::f64::consts::PI
        / (alpha * (std::f64::consts::PI * delta).sin());
    Ok(sphere_surface(model) * radial)
}

/// Mean total interference at the typical user:
/// `sum_j lambda_j P_j E[h] int g_eps`.
pub fn interference_mean(model: &NetworkModel, fading: &FadingMoments) -> Result<f64> {
    let integral = path_loss_integral(model)?;
    let weight: f64 = model.tiers().iter().map(|t| t.density * t.power).sum();
    Ok(weight * fading.mean() * integral)
}

/// Variance of the total interference:
/// `sum_j lambda_j P_j^2 E[h^2] int g_eps^2`.
pub fn interference_variance(model: &NetworkModel, fading: &FadingMoments) -> Result<f64> {
    let integral = path_loss_sq_integral(model)?;
    let weight: f64 = model.tiers().iter().map(|t| t.density * t.power * t.power).sum();
    Ok(weight * fading.second_moment() * integral)
}
