use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::instance::{Instance, Job, JobId, PeriodSystem};
use super::verdict::{Verdict, Violation};

/// First start `s_i` of every job. Occurrence `k` runs over
/// `[s_i + k tau_i, s_i + k tau_i + p_i)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Schedule {
    starts: BTreeMap<JobId, u64>,
}

impl Schedule {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a schedule from starts listed in the instance's job order.
    pub fn from_starts(instance: &Instance, starts: &[u64]) -> Self {
        assert_eq!(instance.len(), starts.len(), "one start per job");
        Schedule {
            starts: instance
                .jobs()
                .iter()
                .zip(starts)
                .map(|(job, &s)| (job.id.clone(), s))
                .collect(),
        }
    }

    pub fn insert(&mut self, id: impl Into<JobId>, start: u64) -> Option<u64> {
        self.starts.insert(id.into(), start)
    }

    pub fn get(&self, id: &JobId) -> Option<u64> {
        self.starts.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&JobId, u64)> {
        self.starts.iter().map(|(id, &s)| (id, s))
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Starts in instance order after checking coverage and legality:
    /// `0 <= s < tau` and `(s mod w) + p <= w`.
    pub fn aligned(&self, instance: &Instance) -> Result<Vec<u64>> {
        let ids: Vec<&JobId> = self.starts.keys().collect();
        check_coverage(instance, &ids)?;
        let w = instance.system().w();
        // BTreeMap order matches the instance's sorted job order.
        self.starts
            .values()
            .enumerate()
            .map(|(idx, &s)| {
                let job = &instance.jobs()[idx];
                let period = instance.period(idx);
                if s >= period {
                    return Err(Error::Validation(format!(
                        "job `{}`: start {s} is out of range 0..{period}",
                        job.id
                    )));
                }
                if s % w + job.p > w {
                    return Err(Error::Validation(format!(
                        "job `{}`: start {s} crosses a window boundary (u = {}, p = {}, w = {w})",
                        job.id,
                        s % w,
                        job.p
                    )));
                }
                Ok(s)
            })
            .collect()
    }
}

impl FromIterator<(JobId, u64)> for Schedule {
    fn from_iter<I: IntoIterator<Item = (JobId, u64)>>(iter: I) -> Self {
        Schedule {
            starts: iter.into_iter().collect(),
        }
    }
}

/// Fails unless `ids` (sorted) are exactly the instance's job ids.
pub(crate) fn check_coverage(instance: &Instance, ids: &[&JobId]) -> Result<()> {
    for id in ids {
        if instance.index_of(id).is_none() {
            return Err(Error::Validation(format!("unknown job id `{id}`")));
        }
    }
    if ids.len() != instance.len() {
        let missing: Vec<String> = instance
            .jobs()
            .iter()
            .filter(|j| ids.binary_search(&&j.id).is_err())
            .map(|j| format!("`{}`", j.id))
            .collect();
        return Err(Error::Validation(format!("missing job ids: {}", missing.join(", "))));
    }
    Ok(())
}

/// `s = u + v w` with `u < w`.
pub fn split_start(s: u64, system: &PeriodSystem, job: &Job) -> Result<(u64, u64)> {
    let period = job.period(system)?;
    if s >= period {
        return Err(Error::range("start", s, format!("0..{period}")));
    }
    Ok((s % system.w(), s / system.w()))
}

pub fn join_start(u: u64, v: u64, system: &PeriodSystem) -> u64 {
    u + v * system.w()
}

/// A job reduced to what the collision test needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Slot {
    /// `B_{k_i}`
    pub block: u64,
    pub p: u64,
    pub u: u64,
    pub v: u64,
}

impl Slot {
    pub fn new(instance: &Instance, idx: usize, s: u64) -> Self {
        let w = instance.system().w();
        Slot {
            block: instance.slots(idx),
            p: instance.jobs()[idx].p,
            u: s % w,
            v: s / w,
        }
    }

    /// Horizontal overlap of the `u` intervals, and `v_j = v_i + k B_{k_i}`
    /// for some `k >= 0` where `i` is the job with the shorter period.
    #[inline]
    pub fn collides(&self, other: &Slot) -> bool {
        if !(self.u < other.u + other.p && other.u < self.u + self.p) {
            return false;
        }
        let (fast, slow) = if self.block <= other.block {
            (self, other)
        } else {
            (other, self)
        };
        // v_fast < B_fast, so the k >= 0 condition reduces to a residue test.
        slow.v % fast.block == fast.v
    }
}

/// Whether two jobs with the given first starts ever run at the same time.
/// Starts must satisfy the schedule invariants.
pub fn schedule_collides(system: &PeriodSystem, a: (&Job, u64), b: (&Job, u64)) -> Result<bool> {
    let slot = |(job, s): (&Job, u64)| -> Result<Slot> {
        let (u, v) = split_start(s, system, job)?;
        Ok(Slot {
            block: system.base().partial_product(job.level)?,
            p: job.p,
            u,
            v,
        })
    };
    Ok(slot(a)?.collides(&slot(b)?))
}

/// Pairwise collision scan; the witness is the first colliding pair in
/// ascending id order.
pub fn schedule_feasible(instance: &Instance, schedule: &Schedule) -> Result<Verdict> {
    let starts = schedule.aligned(instance)?;
    let slots: Vec<Slot> = starts
        .iter()
        .enumerate()
        .map(|(idx, &s)| Slot::new(instance, idx, s))
        .collect();
    let jobs = instance.jobs();
    for i in 0..slots.len() {
        for j in i + 1..slots.len() {
            if slots[i].collides(&slots[j]) {
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

    fn system() -> PeriodSystem {
        PeriodSystem::new(2, BaseVector::new(vec![2, 2]).unwrap()).unwrap()
    }

    #[test]
    fn split_examples() {
        let sys = system();
        let job = Job::new("a", 1, 2);
        assert_eq!(split_start(0, &sys, &job).unwrap(), (0, 0));
        assert_eq!(split_start(5, &sys, &job).unwrap(), (1, 2));
        assert_eq!(split_start(7, &sys, &job).unwrap(), (1, 3));
        assert_eq!(join_start(1, 3, &sys), 7);
        assert!(split_start(8, &sys, &job).is_err());
    }

    #[test]
    fn collision_examples() {
        let sys = system();
        let i = Job::new("i", 1, 1);
        let j = Job::new("j", 1, 2);
        assert!(schedule_collides(&sys, (&i, 0), (&j, 4)).unwrap());
        assert!(schedule_collides(&sys, (&j, 4), (&i, 0)).unwrap());
        assert!(!schedule_collides(&sys, (&i, 0), (&j, 2)).unwrap());
        // disjoint u intervals never collide
        for v in 0..4 {
            assert!(!schedule_collides(&sys, (&i, 0), (&j, 1 + 2 * v)).unwrap());
        }
    }

    #[test]
    fn feasibility_examples() {
        let sys = system();
        let one = Instance::new(sys.clone(), vec![Job::new("a", 2, 1)]).unwrap();
        for s in [0, 2] {
            let sched = Schedule::from_starts(&one, &[s]);
            assert!(schedule_feasible(&one, &sched).unwrap().is_feasible());
        }

        let two = Instance::new(sys.clone(), vec![Job::new("i", 1, 1), Job::new("j", 1, 2)]).unwrap();
        let verdict = schedule_feasible(&two, &Schedule::from_starts(&two, &[0, 4])).unwrap();
        let witness = verdict.witness().unwrap();
        assert_eq!((witness.first.0.as_str(), witness.second.as_ref().unwrap().0.as_str()), ("i", "j"));
        assert_eq!(witness.violation, Violation::Collision);

        // touching intervals in the same window
        let same = Instance::new(sys, vec![Job::new("i", 1, 1), Job::new("j", 1, 1)]).unwrap();
        assert!(schedule_feasible(&same, &Schedule::from_starts(&same, &[2, 3])).unwrap().is_feasible());
    }

    #[test]
    fn coverage_and_legality_errors() {
        let sys = system();
        let inst = Instance::new(sys, vec![Job::new("a", 2, 1), Job::new("b", 1, 2)]).unwrap();
        let mut sched = Schedule::new();
        sched.insert("a", 0);
        assert!(schedule_feasible(&inst, &sched).unwrap_err().to_string().contains("missing"));
        sched.insert("b", 2);
        sched.insert("c", 0);
        assert!(schedule_feasible(&inst, &sched).unwrap_err().to_string().contains("unknown"));

        // start beyond the period, and a start crossing a window boundary
        assert!(schedule_feasible(&inst, &Schedule::from_starts(&inst, &[4, 0])).is_err());
        assert!(schedule_feasible(&inst, &Schedule::from_starts(&inst, &[1, 0])).is_err());
    }
}
