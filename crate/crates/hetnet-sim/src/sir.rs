//! SIR evaluation at the typical user and the per-trial success events.

use crate::realization::Realization;
use corrmath::NetworkModel;

/// Received power of `point` at the origin in `slot`: `P h g(|x|)`.
fn received_power(realization: &Realization, point: usize, slot: u32, model: &NetworkModel) -> f64 {
    let p = &realization.points()[point];
    model.tiers()[p.tier].power * realization.fading(point, slot) * model.path_gain(p.norm())
}

/// SIR of candidate BS `candidate_index` at the origin in `slot`, with the
/// candidate's own term excluded from the interference sum.
///
/// A lone BS sees zero interference; its SIR is reported as +infinity and
/// beats any finite threshold.
pub fn sir_at_origin(
    realization: &Realization,
    candidate_index: usize,
    slot: u32,
    model: &NetworkModel,
) -> f64 {
    let own = received_power(realization, candidate_index, slot, model);
    let mut interference = 0.0;
    for point in 0..realization.points().len() {
        if point != candidate_index {
            interference += received_power(realization, point, slot, model);
        }
    }
    if interference == 0.0 {
        f64::INFINITY
    } else {
        own / interference
    }
}

/// Per-BS success-run lengths: for each BS, the number of leading slots in
/// which its SIR clears its tier threshold, stopping at the first failure.
///
/// Computed with one pass of slot totals, so a whole trial costs
/// O(points * slots).
fn success_run_lengths(realization: &Realization, model: &NetworkModel) -> Vec<u32> {
    let n_points = realization.points().len();
    let slots = realization.slots();
    let mut totals = vec![0.0f64; slots as usize];
    let mut own = vec![0.0f64; n_points * slots as usize];
    for point in 0..n_points {
        for slot in 0..slots {
            let p = received_power(realization, point, slot, model);
            totals[slot as usize] += p;
            own[point * slots as usize + slot as usize] = p;
        }
    }
    let mut runs = vec![0u32; n_points];
    for (point, run) in runs.iter_mut().enumerate() {
        let beta = model.tiers()[realization.points()[point].tier].threshold;
        for slot in 0..slots {
            let s = own[point * slots as usize + slot as usize];
            let interference = totals[slot as usize] - s;
            // success iff s / I > beta, with I == 0 meaning infinite SIR
            let ok = interference <= 0.0 || s > beta * interference;
            if !ok {
                break;
            }
            *run += 1;
        }
    }
    runs
}

/// True iff some BS clears its threshold in all `slots` of the trial. With
/// thresholds <= 1 several BSs may qualify per slot; any single BS covering
/// every slot counts.
pub fn joint_success_indicator(realization: &Realization, model: &NetworkModel) -> bool {
    let slots = realization.slots();
    success_run_lengths(realization, model).iter().any(|&run| run == slots)
}

/// Indicators for the conditional-success ratio over `n = slots` slots:
/// (some BS succeeds in all n, some BS succeeds in the first n - 1).
pub fn conditional_indicators(realization: &Realization, model: &NetworkModel) -> (bool, bool) {
    let n = realization.slots();
    let runs = success_run_lengths(realization, model);
    let all = runs.iter().any(|&run| run == n);
    let prefix = runs.iter().any(|&run| run >= n - 1);
    (all, prefix)
}
