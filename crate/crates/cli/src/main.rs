//! `hetnet` — analytic evaluation, Monte Carlo simulation and figure-style
//! sweeps for K-tier cellular interference models.
//!
//! Exit codes are a stable scripting contract: 0 success, 2 validation
//! error, 3 mode/parameter conflict, 4 I/O failure. A nonzero bound-violation
//! count from a sweep report exits 1.

use clap::{Args, Parser, Subcommand, ValueEnum};
use corrmath::{
    conditional_success, joint_success, joint_success_bounds, monotonicity_verdict,
    spatial_corr_coefficient, temporal_corr_coefficient, FadingMoments, NetworkModel, TierParams,
};
use hetnet_experiments::{
    compare_report, db_to_linear, figure_preset, load_spec, run_sweep, write_csv, SweepRow,
    SweepSpec,
};
use hetnet_sim::{
    estimate_conditional_success, estimate_corr_coefficient, estimate_joint_success, CorrMode,
    Estimate, FadingKind, SimPlan,
};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "hetnet", version, about = "K-tier cellular SIR analysis and simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form success probabilities, bounds, verdicts and correlation
    Analytic(AnalyticArgs),
    /// Monte Carlo estimate side by side with the closed form
    Simulate(SimulateArgs),
    /// Run a figure preset or a sweep-spec file, writing CSV and a report
    Sweep(SweepArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Tier as density:power:threshold, threshold in dB unless --beta-linear;
    /// repeat once per tier
    #[arg(long = "tier", value_name = "L:P:B")]
    tiers: Vec<String>,
    /// Path-loss exponent
    #[arg(long, default_value_t = 4.0)]
    alpha: f64,
    /// Spatial dimension
    #[arg(long, default_value_t = 2)]
    dim: u32,
    /// Path-loss bound; 0 selects the singular law
    #[arg(long, default_value_t = 0.0)]
    epsilon: f64,
    /// Interpret tier thresholds as linear ratios instead of dB
    #[arg(long)]
    beta_linear: bool,
}

#[derive(Args)]
struct AnalyticArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Number of consecutive slots n
    #[arg(long, default_value_t = 2)]
    slots: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SimMode {
    /// Joint success probability over n slots
    Joint,
    /// Success in slot n given success in slots 1..n-1
    Conditional,
    /// Interference correlation across two slots at one location
    TemporalCorr,
    /// Interference correlation across two slots and two locations
    SpatialCorr,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Figure preset supplying model and plan (fig2..fig6); excludes --tier
    #[arg(long, conflicts_with = "tiers")]
    preset: Option<String>,
    /// With --preset: override the second tier's threshold (dB)
    #[arg(long, requires = "preset")]
    beta2_db: Option<f64>,
    #[arg(long, value_enum, default_value_t = SimMode::Joint)]
    mode: SimMode,
    #[arg(long, default_value_t = 2)]
    slots: u32,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampling window radius; defaults to the model-derived rule
    #[arg(long)]
    window_radius: Option<f64>,
    /// Observation-point separation for spatial-corr mode
    #[arg(long, default_value_t = 0.0)]
    separation: f64,
    /// Worker threads (default: HETNET_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Also write the result as a one-row CSV
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Figure preset name (fig2..fig6)
    #[arg(long, conflicts_with = "spec")]
    preset: Option<String>,
    /// JSON sweep-spec file
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Output directory for CSV files
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Override the plan's trial count
    #[arg(long)]
    trials: Option<u64>,
    /// Override the plan's master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: HETNET_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
}

struct CliError {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> CliError {
    CliError { code, message: message.into() }
}

impl From<corrmath::Error> for CliError {
    fn from(e: corrmath::Error) -> Self {
        fail(2, e.to_string())
    }
}

impl From<hetnet_sim::SimError> for CliError {
    fn from(e: hetnet_sim::SimError) -> Self {
        use hetnet_sim::SimError::*;
        let code = match e {
            RequiresBoundedPathLoss | RequiresSingularPathLoss | TemporalSeparationNonzero(_) => 3,
            EmptyConditioningEvent { .. } | DegenerateSample(_) => 3,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

impl From<hetnet_experiments::ExpError> for CliError {
    fn from(e: hetnet_experiments::ExpError) -> Self {
        use hetnet_experiments::ExpError::*;
        match e {
            Io(io) => fail(4, io.to_string()),
            Sim(s) => s.into(),
            Model(m) => m.into(),
            other => fail(2, other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        fail(4, e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analytic(args) => cmd_analytic(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

/// ~6 significant digits for terminal output.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (5 - x.abs().log10().floor() as i64).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

fn parse_model(args: &ModelArgs) -> Result<NetworkModel, CliError> {
    if args.tiers.is_empty() {
        return Err(fail(2, "at least one --tier lambda:P:beta is required"));
    }
    let mut tiers = Vec::with_capacity(args.tiers.len());
    for raw in &args.tiers {
        let parts: Vec<&str> = raw.split(':').collect();
        if parts.len() != 3 {
            return Err(fail(2, format!("tier '{raw}' is not lambda:P:beta")));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| fail(2, format!("tier '{raw}': {e}")))?;
        let beta = if args.beta_linear { nums[2] } else { db_to_linear(nums[2]) };
        tiers.push(TierParams::new(nums[0], nums[1], beta)?);
    }
    Ok(NetworkModel::new(tiers, args.alpha, args.dim, args.epsilon)?)
}

fn default_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("HETNET_THREADS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .max(1)
}

fn print_model(model: &NetworkModel) {
    for (i, t) in model.tiers().iter().enumerate() {
        println!(
            "config: tier {} density={} power={} threshold={} (linear)",
            i + 1,
            sig6(t.density),
            sig6(t.power),
            sig6(t.threshold)
        );
    }
    println!(
        "config: alpha={} dim={} epsilon={} delta={}",
        sig6(model.alpha()),
        model.dimension(),
        sig6(model.epsilon()),
        sig6(model.delta())
    );
    if model.approximate_regime() {
        println!("note: approximate-regime (some threshold <= 1; closed forms assume beta > 1)");
    }
}

fn cmd_analytic(args: AnalyticArgs) -> Result<(), CliError> {
    let model = parse_model(&args.model)?;
    let n = args.slots;
    print_model(&model);
    println!("config: slots={n}");

    println!("p(1)            {}", sig6(joint_success(&model, 1)?));
    let pn = joint_success(&model, n)?;
    let (lo, hi) = joint_success_bounds(&model, n)?;
    println!("p({n})            {}", sig6(pn));
    println!("bounds({n})       [{}, {}]", sig6(lo), sig6(hi));
    if n >= 2 {
        println!(
            "conditional({n})  {}",
            sig6(conditional_success(n, model.delta())?)
        );
    }
    for i in 0..model.num_tiers() {
        if model.num_tiers() < 2 {
            println!("verdict tier {}  n/a (single-tier model)", i + 1);
            continue;
        }
        let v = monotonicity_verdict(&model, i)?;
        println!(
            "verdict tier {}  {:?} (margin {})",
            i + 1,
            v.direction,
            sig6(v.margin)
        );
    }
    println!(
        "temporal corr   {}",
        sig6(temporal_corr_coefficient(&FadingMoments::rayleigh()))
    );
    Ok(())
}

fn preset_model_and_plan(
    name: &str,
    beta2_db: Option<f64>,
) -> Result<(NetworkModel, SimPlan), CliError> {
    let preset = figure_preset(name)?;
    let series = &preset.series[0];
    let mut model = series.base_model.clone();
    if let Some(db) = beta2_db {
        if model.num_tiers() < 2 {
            return Err(fail(3, "--beta2-db needs a two-tier preset"));
        }
        let mut tiers = model.tiers().to_vec();
        tiers[1] = TierParams::new(tiers[1].density, tiers[1].power, db_to_linear(db))?;
        model = NetworkModel::new(tiers, model.alpha(), model.dimension(), model.epsilon())?;
    }
    Ok((model, series.plan))
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let (model, preset_plan) = match &args.preset {
        Some(name) => {
            let (m, p) = preset_model_and_plan(name, args.beta2_db)?;
            (m, Some(p))
        }
        None => (parse_model(&args.model)?, None),
    };
    let threads = default_threads(args.threads);
    let window = match args.window_radius {
        Some(r) => r,
        None => preset_plan
            .map(|p| p.window_radius)
            .map_or_else(|| hetnet_sim::default_window_radius(&model).map_err(CliError::from), Ok)?,
    };
    let plan = SimPlan::new(window, args.trials, args.slots, args.seed, threads)?;

    print_model(&model);
    println!(
        "config: mode={} slots={} trials={} seed={} window_radius={} threads={} separation={}",
        match args.mode {
            SimMode::Joint => "joint",
            SimMode::Conditional => "conditional",
            SimMode::TemporalCorr => "temporal-corr",
            SimMode::SpatialCorr => "spatial-corr",
        },
        plan.slots,
        plan.trials,
        plan.master_seed,
        sig6(plan.window_radius),
        plan.parallelism,
        sig6(args.separation)
    );

    let fading = FadingMoments::rayleigh();
    let (analytic, est): (f64, Estimate) = match args.mode {
        SimMode::Joint => (
            joint_success(&model, plan.slots)?,
            estimate_joint_success(&model, &plan)?,
        ),
        SimMode::Conditional => (
            conditional_success(plan.slots, model.delta())?,
            estimate_conditional_success(&model, &plan, plan.slots)?,
        ),
        SimMode::TemporalCorr => {
            if model.is_singular() {
                return Err(fail(3, "temporal-corr mode requires --epsilon > 0"));
            }
            (
                temporal_corr_coefficient(&fading),
                estimate_corr_coefficient(&model, &plan, 0.0, CorrMode::Temporal, FadingKind::Rayleigh)?,
            )
        }
        SimMode::SpatialCorr => {
            if model.is_singular() {
                return Err(fail(3, "spatial-corr mode requires --epsilon > 0"));
            }
            (
                spatial_corr_coefficient(&model, args.separation, &fading)?,
                estimate_corr_coefficient(
                    &model,
                    &plan,
                    args.separation,
                    CorrMode::SpatioTemporal,
                    FadingKind::Rayleigh,
                )?,
            )
        }
    };

    let z = est.z_score(analytic);
    println!("analytic        {}", sig6(analytic));
    println!(
        "simulated       {} (se {}, 95% CI [{}, {}], {} trials)",
        sig6(est.value),
        sig6(est.std_error),
        sig6(est.ci95.0),
        sig6(est.ci95.1),
        est.trials
    );
    println!("z-score         {}", sig6(z));

    if let Some(path) = &args.out {
        let sweep_value = match args.mode {
            SimMode::SpatialCorr => args.separation,
            _ => plan.slots as f64,
        };
        let row = SweepRow {
            sweep_value,
            analytic: Some(analytic),
            sim: Some(est),
            lower_bound: None,
            upper_bound: None,
            flags: if model.approximate_regime() {
                vec![hetnet_experiments::APPROXIMATE_REGIME_FLAG.into()]
            } else {
                vec![]
            },
        };
        write_csv(path, &[row]).map_err(|e| fail(4, e.to_string()))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let mut series: Vec<SweepSpec> = match (&args.preset, &args.spec) {
        (Some(name), None) => figure_preset(name)?.series,
        (None, Some(path)) => vec![load_spec(path)?],
        _ => return Err(fail(2, "exactly one of --preset or --spec is required")),
    };
    let threads = default_threads(args.threads);
    for s in &mut series {
        if let Some(t) = args.trials {
            s.plan.trials = t;
        }
        if let Some(seed) = args.seed {
            s.plan.master_seed = seed;
        }
        s.plan.parallelism = threads;
    }

    std::fs::create_dir_all(&args.out)?;
    let mut violations = 0u64;
    for s in &series {
        println!(
            "config: series={} trials={} slots={} seed={} window_radius={} threads={} grid_points={}",
            s.label,
            s.plan.trials,
            s.plan.slots,
            s.plan.master_seed,
            sig6(s.plan.window_radius),
            s.plan.parallelism,
            s.grid.len()
        );
        let start = Instant::now();
        let rows = run_sweep(s)?;
        let runtime = start.elapsed().as_secs_f64();
        let path = args.out.join(format!("{}.csv", s.label));
        write_csv(&path, &rows)?;
        println!("wrote {}", path.display());
        if s.outputs.analytic && s.outputs.simulated {
            let report = compare_report(&rows, runtime)?;
            println!("report: {}", s.label);
            println!("{report}");
            let json_path = args.out.join(format!("{}_report.json", s.label));
            std::fs::write(&json_path, report.to_json())?;
            println!("wrote {}", json_path.display());
            violations += report.bound_violations;
        }
    }
    if violations > 0 {
        return Err(fail(1, format!("{violations} bound violation(s) across series")));
    }
    Ok(())
}
