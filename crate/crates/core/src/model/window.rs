use crate::error::Result;
use crate::mixed_radix::flip_unchecked;

use super::instance::{Instance, Job, PeriodSystem};
use super::schedule::Schedule;
use super::verdict::{Verdict, Violation};

/// Feasible iff every windowed job satisfies `release <= s` and
/// `s + p <= deadline`.
pub fn window_check(instance: &Instance, schedule: &Schedule) -> Result<Verdict> {
    let starts = schedule.aligned(instance)?;
    for (job, s) in instance.jobs().iter().zip(starts) {
        if !job.has_window() {
            continue;
        }
        let (release, deadline) = job.window(instance.system())?;
        if s < release || s + job.p > deadline {
            return Ok(Verdict::single(&job.id, Violation::WindowViolation));
        }
    }
    Ok(Verdict::feasible())
}

/// Offsets `u` admissible in window `v`: `u + p <= w` and the window
/// constraint. Empty when `v` is not admissible.
pub fn allowed_u(system: &PeriodSystem, job: &Job, v: u64) -> Result<std::ops::RangeInclusive<u64>> {
    let (release, deadline) = job.window(system)?;
    let w = system.w();
    let base = v * w;
    let lo = release.saturating_sub(base);
    // s + p <= deadline  <=>  u <= deadline - p - v w
    let hi = match deadline.checked_sub(job.p + base) {
        Some(room) => room.min(w - job.p),
        #[allow(clippy::reversed_empty_ranges)]
        None => return Ok(1..=0),
    };
    Ok(lo..=hi)
}

/// Window indices `v < B_k` for which some start `u + v w` meets the window.
/// Not a contiguous range in general once mapped through the flip.
pub fn allowed_v(system: &PeriodSystem, job: &Job) -> Result<Vec<u64>> {
    let slots = system.base().partial_product(job.level)?;
    let mut out = Vec::new();
    for v in 0..slots {
        if !allowed_u(system, job, v)?.is_empty() {
            out.push(v);
        }
    }
    Ok(out)
}

/// Packing rows `h * flip(v, k, b)` induced by [`allowed_v`], ascending.
pub fn allowed_y(system: &PeriodSystem, job: &Job) -> Result<Vec<u64>> {
    let h = job.height(system)?;
    let mut ys: Vec<u64> = allowed_v(system, job)?
        .into_iter()
        .map(|v| h * flip_unchecked(v, job.level, system.base()))
        .collect();
    ys.sort_unstable();
    Ok(ys)
}
