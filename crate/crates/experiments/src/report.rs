//! Closed-form vs Monte Carlo agreement summary for a finished sweep.

use crate::error::{ExpError, Result};
use crate::spec::SweepRow;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub max_abs_z: f64,
    pub frac_within_3se: f64,
    pub bound_violations: u64,
    pub runtime_seconds: f64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max |z|            {:.3}", self.max_abs_z)?;
        writeln!(f, "frac |z| <= 3      {:.3}", self.frac_within_3se)?;
        writeln!(f, "bound violations   {}", self.bound_violations)?;
        write!(f, "runtime            {:.1} s", self.runtime_seconds)
    }
}

/// Per-row z-scores of the simulated estimates against the analytic column,
/// plus a count of rows whose analytic value escapes its own bounds (must be
/// zero for a healthy run). Every row must carry both columns.
pub fn compare_report(rows: &[SweepRow], runtime_seconds: f64) -> Result<Report> {
    if rows.is_empty() {
        return Err(ExpError::InvalidSpec("no rows to compare".into()));
    }
    let mut max_abs_z = 0.0f64;
    let mut within = 0u64;
    let mut violations = 0u64;
    for row in rows {
        let analytic = row.analytic.ok_or(ExpError::MissingColumn("analytic"))?;
        let sim = row.sim.ok_or(ExpError::MissingColumn("sim"))?;
        let z = if sim.std_error == 0.0 && sim.value == analytic {
            0.0
        } else {
            sim.z_score(analytic)
        };
        max_abs_z = max_abs_z.max(z.abs());
        if z.abs() <= 3.0 {
            within += 1;
        }
        if let (Some(lo), Some(hi)) = (row.lower_bound, row.upper_bound) {
            // tiny relative slack so boundary-equal values do not trip
            let slack = 1e-12 * analytic.abs().max(1.0);
            if analytic < lo - slack || analytic > hi + slack {
                violations += 1;
            }
        }
    }
    Ok(Report {
        max_abs_z,
        frac_within_3se: within as f64 / rows.len() as f64,
        bound_violations: violations,
        runtime_seconds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(analytic: f64, sim_value: f64, se: f64, bounds: Option<(f64, f64)>) -> SweepRow {
        let sim = {
            // synthetic estimates for report tests
            let plan_trials = 100;
            hetnet_sim::Estimate {
                value: sim_value,
                std_error: se,
                ci95: (sim_value - 1.96 * se, sim_value + 1.96 * se),
                trials: plan_trials,
            }
        };
        SweepRow {
            sweep_value: 0.0,
            analytic: Some(analytic),
            sim: Some(sim),
            lower_bound: bounds.map(|b| b.0),
            upper_bound: bounds.map(|b| b.1),
            flags: vec![],
        }
    }

    #[test]
    fn perfect_agreement_gives_zero_z() {
        let rows = vec![row(0.3, 0.3, 1e-9, None), row(0.4, 0.4, 1e-9, None)];
        let r = compare_report(&rows, 1.0).unwrap();
        assert_eq!(r.max_abs_z, 0.0);
        assert_eq!(r.frac_within_3se, 1.0);
        assert_eq!(r.bound_violations, 0);
    }

    #[test]
    fn corrupted_bounds_trip_the_detector() {
        let rows = vec![row(0.5, 0.5, 1e-3, Some((0.6, 0.7)))];
        assert_eq!(compare_report(&rows, 0.0).unwrap().bound_violations, 1);
        let ok = vec![row(0.65, 0.65, 1e-3, Some((0.6, 0.7)))];
        assert_eq!(compare_report(&ok, 0.0).unwrap().bound_violations, 0);
    }

    #[test]
    fn missing_columns_rejected() {
        let mut r = row(0.5, 0.5, 1e-3, None);
        r.sim = None;
        assert!(matches!(
            compare_report(&[r], 0.0),
            Err(ExpError::MissingColumn("sim"))
        ));
    }

    #[test]
    fn json_round_trips() {
        let rows = vec![row(0.3, 0.31, 0.01, None)];
        let rep = compare_report(&rows, 2.5).unwrap();
        let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
