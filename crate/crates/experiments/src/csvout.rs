//! Sweep results as CSV: one file per sweep, 12+ significant digits, LF line
//! endings, empty cells for absent columns.

use crate::error::Result;
use crate::spec::SweepRow;
use std::io::Write;
use std::path::Path;

pub const CSV_HEADER: &str =
    "sweep_value,analytic,sim_mean,sim_stderr,ci_lo,ci_hi,lower_bound,upper_bound,flags";

fn cell(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.12e}")).unwrap_or_default()
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let (sim_mean, sim_stderr, ci_lo, ci_hi) = match &row.sim {
            Some(e) => (Some(e.value), Some(e.std_error), Some(e.ci95.0), Some(e.ci95.1)),
            None => (None, None, None, None),
        };
        let line = [
            cell(Some(row.sweep_value)),
            cell(row.analytic),
            cell(sim_mean),
            cell(sim_stderr),
            cell(ci_lo),
            cell(ci_hi),
            cell(row.lower_bound),
            cell(row.upper_bound),
            row.flags.join(";"),
        ]
        .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn write_csv(path: &Path, rows: &[SweepRow]) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(rows_to_csv(rows).as_bytes())?;
    Ok(())
}
