//! Instances, schedules, ruled packings, and the checks and transforms
//! between them.

mod instance;
mod packing;
mod schedule;
mod timeline;
mod transform;
mod verdict;
mod window;

pub use instance::{Instance, Job, JobId, PeriodSystem};
pub use packing::{general_overlap, packing_collides, packing_feasible, Packing, Position, Rect};
pub use schedule::{join_start, schedule_collides, schedule_feasible, split_start, Schedule};
pub use timeline::{occurrences, timeline_check};
pub use transform::{pack_to_sched, sched_to_pack};
pub use verdict::{Verdict, Violation, Witness};
pub use window::{allowed_u, allowed_v, allowed_y, window_check};

pub(crate) use packing::check_rects;
pub(crate) use schedule::Slot;

/// Height of a job's rectangle, `H / B_{k_i}`.
pub fn height(job: &Job, system: &PeriodSystem) -> crate::Result<u64> {
    job.height(system)
}
