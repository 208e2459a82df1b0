//! The bijection between legal schedules and ruled packings.
//!
//! Schedule to packing: `x = u`, `y = h * flip(v, k, b)`.
//! Packing to schedule: `u = x`, `v = flip(y / h, k, bflip(b, k))`.
//!
//! A schedule is feasible iff its packing is.

use crate::error::{Error, Result};
use crate::mixed_radix::flip_unchecked;

use super::instance::Instance;
use super::packing::{Packing, Position};
use super::schedule::Schedule;

pub fn sched_to_pack(instance: &Instance, schedule: &Schedule) -> Result<Packing> {
    let starts = schedule.aligned(instance)?;
    let w = instance.system().w();
    let base = instance.system().base();
    Ok(instance
        .jobs()
        .iter()
        .zip(starts)
        .enumerate()
        .map(|(idx, (job, s))| {
            let (u, v) = (s % w, s / w);
            // v < B_k, and flip keeps values below B_k below B_k.
            let y = instance.height(idx) * flip_unchecked(v, job.level, base);
            (job.id.clone(), Position { x: u, y })
        })
        .collect())
}

pub fn pack_to_sched(instance: &Instance, packing: &Packing) -> Result<Schedule> {
    let rects = packing.rects(instance)?;
    let system = instance.system();
    let w = system.w();
    let hyper = system.hyper();
    instance
        .jobs()
        .iter()
        .zip(rects)
        .map(|(job, r)| {
            if r.x + r.width > w || r.y + r.height > hyper {
                return Err(Error::Validation(format!(
                    "job `{}`: rectangle at ({}, {}) leaves the {w} x {hyper} frame",
                    job.id, r.x, r.y
                )));
            }
            if !r.is_ruled() {
                return Err(Error::Validation(format!(
                    "job `{}`: y = {} is not a multiple of its height {}",
                    job.id, r.y, r.height
                )));
            }
            let flipped = system.base().bflip(job.level)?;
            let v = flip_unchecked(r.y / r.height, job.level, &flipped);
            Ok((job.id.clone(), r.x + v * w))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed_radix::BaseVector;
    use crate::model::{Job, JobId, PeriodSystem};

    fn instance(jobs: Vec<Job>) -> Instance {
        let sys = PeriodSystem::new(2, BaseVector::new(vec![2, 2]).unwrap()).unwrap();
        Instance::new(sys, jobs).unwrap()
    }

    fn position_of(inst: &Instance, s: u64) -> Position {
        let p = sched_to_pack(inst, &Schedule::from_starts(inst, &[s])).unwrap();
        p.get(&inst.jobs()[0].id).unwrap()
    }

    #[test]
    fn sched_to_pack_examples() {
        let level1 = instance(vec![Job::new("a", 1, 1)]);
        let level2 = instance(vec![Job::new("a", 1, 2)]);
        assert_eq!(position_of(&level1, 0), Position { x: 0, y: 0 });
        assert_eq!(position_of(&level2, 2), Position { x: 0, y: 2 });
        assert_eq!(position_of(&level1, 2), Position { x: 0, y: 2 });
    }

    #[test]
    fn pack_to_sched_inverts_examples() {
        for (inst, s) in [
            (instance(vec![Job::new("a", 1, 1)]), 0),
            (instance(vec![Job::new("a", 1, 2)]), 2),
            (instance(vec![Job::new("a", 1, 1)]), 2),
        ] {
            let sched = Schedule::from_starts(&inst, &[s]);
            let back = pack_to_sched(&inst, &sched_to_pack(&inst, &sched).unwrap()).unwrap();
            assert_eq!(back, sched);
        }
        let inst = instance(vec![Job::new("a", 2, 1)]);
        let mut origin = Packing::new();
        origin.insert("a", Position { x: 0, y: 0 });
        assert_eq!(pack_to_sched(&inst, &origin).unwrap().get(&JobId::from("a")), Some(0));
    }

    #[test]
    fn pack_to_sched_rejects_unruled() {
        let inst = instance(vec![Job::new("a", 1, 1)]);
        let mut p = Packing::new();
        p.insert("a", Position { x: 0, y: 1 });
        assert!(pack_to_sched(&inst, &p).unwrap_err().to_string().contains("multiple"));
        p.insert("a", Position { x: 0, y: 4 });
        assert!(pack_to_sched(&inst, &p).is_err());
    }
}
