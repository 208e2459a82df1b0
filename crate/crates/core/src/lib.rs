//! Zero-jitter, non-preemptive periodic scheduling with harmonic periods on
//! one machine, and its equivalent ruled 2D packing.
//!
//! A job with processing time `p` and period `B_k * w` becomes a `p x H/B_k`
//! rectangle in a `w x H` frame. The mixed radix [`flip`](mixed_radix::flip)
//! maps a start `s = u + v w` to the corner `(u, h * flip(v, k, b))`, and a
//! schedule is collision free iff its packing is. The crate provides both
//! feasibility checks, the transforms, a brute-force timeline oracle, a
//! shelf-based width minimizer, an exact search, and a multi-machine mode.
//!
//! ```
//! use harmpack::{BaseVector, Instance, Job, PeriodSystem, Schedule};
//! use harmpack::{packing_feasible, sched_to_pack, schedule_feasible};
//!
//! let system = PeriodSystem::new(2, BaseVector::new(vec![2, 2])?)?;
//! let instance = Instance::new(system, vec![Job::new("i", 1, 1), Job::new("j", 1, 2)])?;
//! let schedule = Schedule::from_starts(&instance, &[0, 2]);
//! assert!(schedule_feasible(&instance, &schedule)?.is_feasible());
//!
//! let packing = sched_to_pack(&instance, &schedule)?;
//! assert!(packing_feasible(&instance, &packing)?.is_feasible());
//! # Ok::<(), harmpack::Error>(())
//! ```

pub mod error;
pub mod generate;
pub mod io;
pub mod mixed_radix;
pub mod model;
pub mod solvers;

pub use error::{Error, Result};
pub use mixed_radix::{BaseVector, DigitString};
pub use model::{
    allowed_v, allowed_y, pack_to_sched, packing_feasible, sched_to_pack, schedule_feasible,
    timeline_check, window_check, Instance, Job, JobId, Packing, PeriodSystem, Position, Schedule,
    Verdict, Violation,
};
pub use solvers::{
    brute_force_min_width, ffdh_ruled, pack_bins, solve_with_windows, BinResult, ShelfMode,
    SolverConfig, StripResult,
};
