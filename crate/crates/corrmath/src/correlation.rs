//! Interference correlation coefficients.

use crate::error::{Error, Result};
use crate::model::{FadingMoments, NetworkModel};
use crate::moments::QUAD_REL_TOL;
use crate::quad::{converging_simpson, integrate_to_inf_rel};

/// Temporal correlation coefficient of interference at one location across
/// two slots: `(E[h])^2 / E[h^2]`.
///
/// Under the unit-mean fading of the system model this reduces to `1/E[h^2]`
/// (0.5 for Rayleigh). The general form carries the squared-mean factor from
/// the cross-moment derivation; the two coincide whenever `E[h] = 1`.
pub fn temporal_corr_coefficient(fading: &FadingMoments) -> f64 {
    fading.mean() * fading.mean() / fading.second_moment()
}

/// Spatio-temporal correlation coefficient of interference between two
/// locations at separation `tau`, evaluated by quadrature:
///
/// `rho = (E[h])^2 int g(x) g(x - tau e) dx / (E[h^2] int g^2(x) dx)`
///
/// Requires bounded path loss; the cross term with `tau > 0` is evaluated in
/// polar form and supported for d = 2 only. Non-increasing in `tau`; equals
/// the temporal coefficient at `tau = 0` and tends to 0 as `eps` shrinks for
/// fixed `tau > 0`.
pub fn spatial_corr_coefficient(
    model: &NetworkModel,
    separation: f64,
    fading: &FadingMoments,
) -> Result<f64> {
    if model.is_singular() {
        return Err(Error::SingularPathLoss);
    }
    if !separation.is_finite() || separation < 0.0 {
        return Err(Error::InvalidDistance(separation));
    }
    if separation > 0.0 && model.dimension() != 2 {
        return Err(Error::CrossTermDimension(model.dimension()));
    }
    let alpha = model.alpha();
    let eps = model.epsilon();
    let g_of_sq = move |dist_sq: f64| 1.0 / (dist_sq.powf(0.5 * alpha) + eps);
    let tau = separation;

    // int g g_tau dx = 2 int_0^inf r g(r) [int_0^pi g(sqrt(r^2 + tau^2 - 2 r tau cos th)) dth] dr
    let cross = integrate_to_inf_rel(
        |r| {
            let inner = converging_simpson(
                |theta: f64| {
                    let dist_sq = r * r + tau * tau - 2.0 * r * tau * theta.cos();
                    g_of_sq(dist_sq.max(0.0))
                },
                0.0,
                std::f64::consts::PI,
                1e-12,
            )
            .expect("inner angular integrand is smooth");
            2.0 * r * g_of_sq(r * r) * inner
        },
        0.0,
        QUAD_REL_TOL,
    )?;

    let g2 = 2.0 * std::f64::consts::PI
        * integrate_to_inf_rel(
            |r| {
                let g = g_of_sq(r * r);
                r * g * g
            },
            0.0,
            QUAD_REL_TOL,
        )?;

    let fading_factor = fading.mean() * fading.mean() / fading.second_moment();
    Ok(fading_factor * cross / g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TierParams;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn model(alpha: f64, eps: f64) -> NetworkModel {
        NetworkModel::new(vec![TierParams::new(1.0, 1.0, 2.0).unwrap()], alpha, 2, eps).unwrap()
    }

    #[test]
    fn temporal_values() {
        assert_eq!(temporal_corr_coefficient(&FadingMoments::rayleigh()), 0.5);
        assert_eq!(temporal_corr_coefficient(&FadingMoments::deterministic_unit()), 1.0);
        assert_eq!(temporal_corr_coefficient(&FadingMoments::new(1.0, 4.0).unwrap()), 0.25);
    }

    #[test]
    fn spatial_at_zero_separation_equals_temporal() {
        let m = model(4.0, 1.0);
        let rho = spatial_corr_coefficient(&m, 0.0, &FadingMoments::rayleigh()).unwrap();
        assert_abs_diff_eq!(rho, 0.5, epsilon = 1e-7);
    }

    #[test]
    fn spatial_pinned_values() {
        // 40-digit double-integral references, d=2, alpha=4, tau=1, Rayleigh
        let cases = [(1.0, 0.334013200550373), (0.1, 0.148559627188914), (0.01, 0.024514839380113)];
        for (eps, expected) in cases {
            let rho = spatial_corr_coefficient(&model(4.0, eps), 1.0, &FadingMoments::rayleigh())
                .unwrap();
            assert_relative_eq!(rho, expected, max_relative = 1e-6);
        }
    }

    #[test]
    fn spatial_decreases_with_separation() {
        let m = model(4.0, 1.0);
        let ray = FadingMoments::rayleigh();
        let rho1 = spatial_corr_coefficient(&m, 1.0, &ray).unwrap();
        let rho2 = spatial_corr_coefficient(&m, 2.0, &ray).unwrap();
        assert_relative_eq!(rho2, 0.111601072478453, max_relative = 1e-6);
        assert!(rho1 > rho2);
    }

    #[test]
    fn spatial_large_separation_is_small() {
        let m = model(4.0, 1e-4);
        // tau >= 100 * eps^(1/alpha)
        let rho = spatial_corr_coefficient(&m, 100.0 * 1e-1, &FadingMoments::rayleigh()).unwrap();
        assert!(rho < 0.01, "rho = {rho}");
    }

    #[test]
    fn singular_and_dimension_errors() {
        let m = model(4.0, 0.0);
        assert_eq!(
            spatial_corr_coefficient(&m, 1.0, &FadingMoments::rayleigh()).unwrap_err(),
            Error::SingularPathLoss
        );
        let m3 =
            NetworkModel::new(vec![TierParams::new(1.0, 1.0, 2.0).unwrap()], 5.0, 3, 1.0).unwrap();
        assert_eq!(
            spatial_corr_coefficient(&m3, 1.0, &FadingMoments::rayleigh()).unwrap_err(),
            Error::CrossTermDimension(3)
        );
        // tau = 0 works in any dimension
        assert!(spatial_corr_coefficient(&m3, 0.0, &FadingMoments::rayleigh()).is_ok());
    }
}
