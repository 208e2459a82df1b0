//! Seeded random instances.

use rand::Rng;

use crate::error::{Error, Result};
use crate::mixed_radix::BaseVector;
use crate::model::{Instance, Job, PeriodSystem};

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub radices: Vec<u64>,
    pub w: u64,
    pub p_max: u64,
    /// Chance that a job gets a release/deadline window.
    pub window_probability: f64,
}

/// Levels uniform over `1..=r`, processing times uniform over
/// `1..=min(p_max, w)`, and windows built from multiples of `w` that always
/// leave room for the job.
pub fn random_instance<R: Rng + ?Sized>(params: &GenParams, rng: &mut R) -> Result<Instance> {
    if params.w == 0 || params.p_max == 0 {
        return Err(Error::Validation("w and p_max must be positive".into()));
    }
    if !(0.0..=1.0).contains(&params.window_probability) {
        return Err(Error::Validation("window probability must lie in [0, 1]".into()));
    }
    let base = BaseVector::new(params.radices.clone())?;
    let system = PeriodSystem::new(params.w, base)?;
    let p_hi = params.p_max.min(params.w);
    let width = params.n.saturating_sub(1).to_string().len();
    let jobs = (0..params.n)
        .map(|i| {
            let level = rng.gen_range(1..=system.levels());
            let p = rng.gen_range(1..=p_hi);
            let job = Job::new(format!("j{i:0width$}"), p, level);
            if params.window_probability > 0.0 && rng.gen_bool(params.window_probability) {
                let slots = system.base().partial_product(level)?;
                let first = rng.gen_range(0..slots);
                let last = rng.gen_range(first + 1..=slots);
                Ok(job.with_window(Some(first * params.w), Some(last * params.w)))
            } else {
                Ok(job)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(system, jobs)
}
