//! Brute-force oracle: expand every occurrence over one hyperperiod and look
//! for overlapping intervals. Deliberately shares no logic with the
//! residue-based collision test.

use crate::error::Result;

use super::instance::Instance;
use super::schedule::Schedule;
use super::verdict::{Verdict, Violation};

/// Occurrence intervals `[s + k tau, s + k tau + p)` for `0 <= k < h`, in
/// increasing order.
pub fn occurrences(instance: &Instance, idx: usize, start: u64) -> Vec<(u64, u64)> {
    let period = instance.period(idx);
    let p = instance.jobs()[idx].p;
    (0..instance.height(idx))
        .map(|k| {
            let begin = start + k * period;
            (begin, begin + p)
        })
        .collect()
}

fn intervals_overlap(a: &[(u64, u64)], b: &[(u64, u64)]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (a0, a1) = a[i];
        let (b0, b1) = b[j];
        if a0 < b1 && b0 < a1 {
            return true;
        }
        if a1 <= b1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    false
}

/// Same contract as [`schedule_feasible`](super::schedule_feasible),
/// including the witness order.
pub fn timeline_check(instance: &Instance, schedule: &Schedule) -> Result<Verdict> {
    let starts = schedule.aligned(instance)?;
    let lanes: Vec<Vec<(u64, u64)>> = starts
        .iter()
        .enumerate()
        .map(|(idx, &s)| occurrences(instance, idx, s))
        .collect();
    let jobs = instance.jobs();
    for i in 0..lanes.len() {
        for j in i + 1..lanes.len() {
            if intervals_overlap(&lanes[i], &lanes[j]) {
                return Ok(Verdict::pair(&jobs[i].id, &jobs[j].id, Violation::Collision));
            }
        }
    }
    Ok(Verdict::feasible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed_radix::BaseVector;
    use crate::model::{Job, PeriodSystem};

    #[test]
    fn collision_example_overlaps_at_four() {
        let sys = PeriodSystem::new(2, BaseVector::new(vec![2, 2]).unwrap()).unwrap();
        let inst = Instance::new(sys, vec![Job::new("i", 1, 1), Job::new("j", 1, 2)]).unwrap();
        assert_eq!(occurrences(&inst, 0, 0), vec![(0, 1), (4, 5)]);
        assert_eq!(occurrences(&inst, 1, 4), vec![(4, 5)]);
        assert!(!timeline_check(&inst, &Schedule::from_starts(&inst, &[0, 4])).unwrap().is_feasible());
        assert!(timeline_check(&inst, &Schedule::from_starts(&inst, &[0, 2])).unwrap().is_feasible());
    }

    #[test]
    fn merge_handles_touching_intervals() {
        assert!(!intervals_overlap(&[(0, 1), (4, 5)], &[(1, 4), (5, 8)]));
        assert!(intervals_overlap(&[(0, 2)], &[(1, 3)]));
        assert!(!intervals_overlap(&[], &[(0, 3)]));
    }
}
