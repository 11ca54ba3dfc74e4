//! Per-point diagnostics for the correlation-vs-separation preset.

use hetnet_experiments::{figure_preset, run_sweep};

fn main() {
    let trials: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let filter = std::env::args().nth(2);
    let max_points: usize = std::env::args().nth(3).and_then(|s| s.parse().ok()).unwrap_or(99);
    let preset = figure_preset("fig2").unwrap();
    for series in &preset.series {
        if let Some(f) = &filter {
            if !series.label.contains(f.as_str()) {
                continue;
            }
        }
        let mut s = series.clone();
        s.plan.trials = trials;
        s.grid.truncate(max_points);
        let rows = run_sweep(&s).unwrap();
        println!("series {} (window {})", s.label, s.plan.window_radius);
        for r in rows {
            let a = r.analytic.unwrap();
            let e = r.sim.unwrap();
            println!(
                "  tau {:>5.2}  analytic {:+.6}  sim {:+.6}  se {:.6}  z {:+.2}",
                r.sweep_value,
                a,
                e.value,
                e.std_error,
                e.z_score(a)
            );
        }
    }
}
