//! Special-function building blocks: the sinc factor and the diversity
//! polynomial.

use crate::error::{Error, Result};
use crate::model::check_delta_band;
use statrs::function::gamma::{gamma, ln_gamma};

/// `pi * delta / sin(pi * delta)` for `delta` in (0, 1).
///
/// Continuous and > 1 on the open interval, with limits 1 as `delta -> 0`
/// and infinity as `delta -> 1`. Rejects `delta` outside the supported band.
pub fn sinc_factor(delta: f64) -> Result<f64> {
    let delta = check_delta_band(delta)?;
    let x = std::f64::consts::PI * delta;
    Ok(x / x.sin())
}

/// The diversity polynomial `D_n(delta) = Gamma(n + delta) / (Gamma(n) * Gamma(1 + delta))`.
///
/// Evaluated in log-gamma space so that n up to 10^6 and beyond stays inside
/// double range (Gamma(n) itself overflows near n = 171).
pub fn diversity_polynomial(n: u32, delta: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::SlotCountTooSmall { min: 1, got: n });
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    if n == 1 {
        // Gamma(1 + delta) / (Gamma(1) Gamma(1 + delta)); exact, where the
        // log-space route would leak a few ulps of ln_gamma rounding
        return Ok(1.0);
    }
    let n = n as f64;
    Ok((ln_gamma(n + delta) - ln_gamma(n) - ln_gamma(1.0 + delta)).exp())
}

/// `Gamma(1 + delta)`, used by the joint-success sandwich bounds.
pub fn gamma_one_plus(delta: f64) -> f64 {
    gamma(1.0 + delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sinc_factor_half() {
        assert_relative_eq!(
            sinc_factor(0.5).unwrap(),
            std::f64::consts::FRAC_PI_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn sinc_factor_two_thirds() {
        // pinned from a 40-digit evaluation of (2pi/3)/sin(2pi/3)
        assert_relative_eq!(
            sinc_factor(2.0 / 3.0).unwrap(),
            2.418399152312290,
            max_relative = 1e-12
        );
    }

    #[test]
    fn sinc_factor_small_delta_limit() {
        assert!((sinc_factor(1e-6).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sinc_factor_matches_gamma_identity() {
        // Gamma(1 - delta) * Gamma(1 + delta) = pi delta / sin(pi delta)
        for delta in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let lhs = gamma(1.0 - delta) * gamma(1.0 + delta);
            assert_relative_eq!(sinc_factor(delta).unwrap(), lhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn sinc_factor_rejects_band_violations() {
        assert!(sinc_factor(0.0).is_err());
        assert!(sinc_factor(1.0).is_err());
        assert!(sinc_factor(1e-9).is_err());
        assert!(sinc_factor(1.0 - 1e-9).is_err());
    }

    #[test]
    fn diversity_polynomial_base_cases() {
        for delta in [0.05, 0.5, 0.95] {
            assert_eq!(diversity_polynomial(1, delta).unwrap(), 1.0);
        }
        // D_2(delta) = 1 + delta
        assert_relative_eq!(diversity_polynomial(2, 0.5).unwrap(), 1.5, max_relative = 1e-12);
    }

    #[test]
    fn diversity_polynomial_sandwich_n10() {
        // n^delta < D_n < n^delta / Gamma(1 + delta), pinned endpoints for n = 10, delta = 2/3
        let d = diversity_polynomial(10, 2.0 / 3.0).unwrap();
        assert_relative_eq!(d, 5.085158402657429, max_relative = 1e-12);
        let lo = 10f64.powf(2.0 / 3.0);
        let hi = lo / gamma_one_plus(2.0 / 3.0);
        assert!(lo < d && d < hi);
    }

    #[test]
    fn diversity_polynomial_large_n() {
        let delta = 0.5;
        let d = diversity_polynomial(1_000_000, delta).unwrap();
        assert!(d.is_finite());
        // asymptotically n^delta / Gamma(1 + delta)
        assert_relative_eq!(d, 1000.0 / gamma_one_plus(delta), max_relative = 1e-5);
    }

    #[test]
    fn diversity_polynomial_domain() {
        assert!(diversity_polynomial(0, 0.5).is_err());
        assert!(diversity_polynomial(2, 0.0).is_err());
        assert!(diversity_polynomial(2, 1.0).is_err());
    }
}
