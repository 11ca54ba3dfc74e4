//! Figure-style experiment harness: parameter sweeps pairing closed forms
//! with Monte Carlo estimates, CSV emission and agreement reports.

pub mod csvout;
pub mod error;
pub mod presets;
pub mod report;
pub mod run;
pub mod spec;
pub mod specfile;

pub use csvout::{rows_to_csv, write_csv, CSV_HEADER};
pub use error::{ExpError, Result};
pub use presets::{figure_preset, Preset, CORR_TRIALS, SUCCESS_TRIALS};
pub use report::{compare_report, Report};
pub use run::{run_sweep, APPROXIMATE_REGIME_FLAG};
pub use spec::{db_to_linear, Outputs, SweepRow, SweepSpec, SweepVariable};
pub use specfile::{load_spec, SpecFile, TierFile};
