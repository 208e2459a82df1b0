//! Exhaustive depth-first search over legal starts. These are oracles: if
//! the candidate space (product of per-job candidate counts) exceeds the
//! budget they refuse instead of sampling.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::model::{allowed_u, Instance, Schedule, Slot};

/// Smallest feasible window width and a witness schedule in that width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWidth {
    pub width: u64,
    pub schedule: Schedule,
}

/// Smallest `w' <= width_bound` for which the instance's jobs, with the same
/// harmonic chain and window width `w'`, admit a feasible schedule.
/// Returns `None` if no width up to the bound works.
pub fn brute_force_min_width(instance: &Instance, width_bound: u64, budget: u64) -> Result<Option<MinWidth>> {
    if width_bound < instance.max_p() {
        return Err(Error::Validation(format!(
            "width bound {width_bound} is below the longest job ({})",
            instance.max_p()
        )));
    }
    let lower = instance.max_p().max(instance.area_width_bound()).max(1);
    for w in lower..=width_bound {
        let scaled = instance.with_width(w)?;
        if let Some(schedule) = find_schedule(&scaled, budget)? {
            return Ok(Some(MinWidth { width: w, schedule }));
        }
    }
    Ok(None)
}

/// Any feasible schedule at the instance's own width, ignoring windows.
pub fn find_schedule(instance: &Instance, budget: u64) -> Result<Option<Schedule>> {
    let w = instance.system().w();
    let candidates: Vec<Vec<u64>> = (0..instance.len())
        .map(|idx| {
            let p = instance.jobs()[idx].p;
            (0..instance.slots(idx))
                .flat_map(|v| (0..=w - p).map(move |u| u + v * w))
                .collect()
        })
        .collect();
    search(instance, candidates, budget, true)
}

/// A feasible schedule in which every start also meets its job's window.
pub fn solve_with_windows(instance: &Instance, budget: u64) -> Result<Option<Schedule>> {
    let system = instance.system();
    let w = system.w();
    let candidates = instance
        .jobs()
        .iter()
        .enumerate()
        .map(|(idx, job)| {
            let mut starts = Vec::new();
            for v in 0..instance.slots(idx) {
                starts.extend(allowed_u(system, job, v)?.map(|u| u + v * w));
            }
            Ok(starts)
        })
        .collect::<Result<Vec<_>>>()?;
    search(instance, candidates, budget, false)
}

fn search(
    instance: &Instance,
    mut candidates: Vec<Vec<u64>>,
    budget: u64,
    shift_invariant: bool,
) -> Result<Option<Schedule>> {
    // Largest rectangles first prune earliest.
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by_key(|&i| Reverse(instance.jobs()[i].p as u128 * instance.height(i) as u128));

    // Shifting every start by a multiple of w maps feasible schedules to
    // feasible schedules, so without windows the first job can sit in v = 0.
    if shift_invariant {
        if let Some(&first) = order.first() {
            let w = instance.system().w();
            candidates[first].retain(|&s| s < w);
        }
    }

    let size = candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if size > budget as u128 {
        return Err(Error::BudgetExceeded { size, budget });
    }
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }

    let slots: Vec<Vec<Slot>> = candidates
        .iter()
        .enumerate()
        .map(|(idx, starts)| starts.iter().map(|&s| Slot::new(instance, idx, s)).collect())
        .collect();
    let mut state = Dfs {
        order: &order,
        slots: &slots,
        placed: Vec::with_capacity(order.len()),
        chosen: vec![0; instance.len()],
    };
    if !state.descend(0) {
        return Ok(None);
    }
    let starts: Vec<u64> = (0..instance.len())
        .map(|idx| candidates[idx][state.chosen[idx]])
        .collect();
    Ok(Some(Schedule::from_starts(instance, &starts)))
}

struct Dfs<'a> {
    order: &'a [usize],
    slots: &'a [Vec<Slot>],
    placed: Vec<Slot>,
    chosen: Vec<usize>,
}

impl Dfs<'_> {
    fn descend(&mut self, depth: usize) -> bool {
        let Some(&idx) = self.order.get(depth) else {
            return true;
        };
        for (c, slot) in self.slots[idx].iter().enumerate() {
            if self.placed.iter().any(|q| q.collides(slot)) {
                continue;
            }
            self.placed.push(*slot);
            self.chosen[idx] = c;
            if self.descend(depth + 1) {
                return true;
            }
            self.placed.pop();
        }
        false
    }
}
