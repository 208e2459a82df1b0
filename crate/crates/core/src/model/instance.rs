use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixed_radix::BaseVector;

/// Window width `w` plus the harmonic chain. Level `k` has period `B_k * w`
/// and the hyperperiod is `w * H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSystem {
    w: u64,
    base: BaseVector,
    hyperperiod: u64,
}

impl PeriodSystem {
    pub fn new(w: u64, base: BaseVector) -> Result<Self> {
        if w == 0 {
            return Err(Error::range("w", w, ">= 1"));
        }
        let hyperperiod = w
            .checked_mul(base.hyper())
            .ok_or_else(|| Error::Overflow(format!("hyperperiod {w} * {} exceeds u64", base.hyper())))?;
        Ok(PeriodSystem { w, base, hyperperiod })
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn base(&self) -> &BaseVector {
        &self.base
    }

    /// `H`, the height of the packing rectangle.
    pub fn hyper(&self) -> u64 {
        self.base.hyper()
    }

    /// `w * H`.
    pub fn hyperperiod(&self) -> u64 {
        self.hyperperiod
    }

    pub fn levels(&self) -> usize {
        self.base.len()
    }

    /// `T^k = B_k * w`.
    pub fn period(&self, level: usize) -> Result<u64> {
        self.check_level(level)?;
        Ok(self.base.partial_product(level)? * self.w)
    }

    /// `H / B_k`: occurrences per hyperperiod, and the rectangle height.
    pub fn height(&self, level: usize) -> Result<u64> {
        self.check_level(level)?;
        Ok(self.hyper() / self.base.partial_product(level)?)
    }

    /// Same chain with a different window width.
    pub fn with_width(&self, w: u64) -> Result<Self> {
        PeriodSystem::new(w, self.base.clone())
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level == 0 || level > self.levels() {
            return Err(Error::range("level", level as u64, format!("1..={}", self.levels())));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JobId(pub String);

impl fmt::Display for JobId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for JobId {
    fn from(s: &str) -> Self {
        JobId(s.to_owned())
    }
}

impl From<String> for JobId {
    fn from(s: String) -> Self {
        JobId(s)
    }
}

/// A strictly periodic, non-preemptive job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Job {
    pub id: JobId,
    /// Processing time.
    pub p: u64,
    /// 1-based index into the harmonic chain.
    pub level: usize,
    pub release: Option<u64>,
    pub deadline: Option<u64>,
}

impl Job {
    pub fn new(id: impl Into<JobId>, p: u64, level: usize) -> Self {
        Job {
            id: id.into(),
            p,
            level,
            release: None,
            deadline: None,
        }
    }

    pub fn with_window(mut self, release: Option<u64>, deadline: Option<u64>) -> Self {
        self.release = release;
        self.deadline = deadline;
        self
    }

    pub fn has_window(&self) -> bool {
        self.release.is_some() || self.deadline.is_some()
    }

    pub fn period(&self, system: &PeriodSystem) -> Result<u64> {
        system.period(self.level)
    }

    pub fn height(&self, system: &PeriodSystem) -> Result<u64> {
        system.height(self.level)
    }

    /// Effective `(release, deadline)`; a missing bound defaults to `0` or the period.
    pub fn window(&self, system: &PeriodSystem) -> Result<(u64, u64)> {
        let period = self.period(system)?;
        Ok((self.release.unwrap_or(0), self.deadline.unwrap_or(period)))
    }

    fn validate(&self, system: &PeriodSystem) -> Result<()> {
        if self.p == 0 || self.p > system.w() {
            return Err(Error::Validation(format!(
                "field `p`: {} is out of range 1..={}",
                self.p,
                system.w()
            )));
        }
        if self.level == 0 || self.level > system.levels() {
            return Err(Error::Validation(format!(
                "field `level`: {} is out of range 1..={}",
                self.level,
                system.levels()
            )));
        }
        if !self.has_window() {
            return Ok(());
        }
        let w = system.w();
        let period = self.period(system)?;
        let (release, deadline) = self.window(system)?;
        if release % w != 0 {
            return Err(Error::Validation(format!(
                "field `release`: {release} is not a multiple of w = {w}"
            )));
        }
        if deadline % w != 0 {
            return Err(Error::Validation(format!(
                "field `deadline`: {deadline} is not a multiple of w = {w}"
            )));
        }
        if deadline > period {
            return Err(Error::Validation(format!(
                "field `deadline`: {deadline} exceeds the period {period}"
            )));
        }
        if release.saturating_add(self.p) > deadline {
            return Err(Error::Validation(format!(
                "field `deadline`: release {release} + p {} exceeds deadline {deadline}",
                self.p
            )));
        }
        Ok(())
    }
}

/// A period system and its jobs. Jobs are kept sorted by id, which fixes the
/// scan order used for witnesses and tie-breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    system: PeriodSystem,
    jobs: Vec<Job>,
}

impl Instance {
    pub fn new(system: PeriodSystem, mut jobs: Vec<Job>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for job in &jobs {
            if !seen.insert(&job.id) {
                return Err(Error::Validation(format!("duplicate job id `{}`", job.id)));
            }
            job.validate(&system)
                .map_err(|e| Error::Validation(format!("job `{}`: {}", job.id, strip(&e))))?;
        }
        jobs.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(Instance { system, jobs })
    }

    pub fn system(&self) -> &PeriodSystem {
        &self.system
    }

    /// Jobs in ascending id order.
    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn index_of(&self, id: &JobId) -> Option<usize> {
        self.jobs.binary_search_by(|j| j.id.cmp(id)).ok()
    }

    pub fn period(&self, idx: usize) -> u64 {
        self.system
            .period(self.jobs[idx].level)
            .expect("levels are validated on construction")
    }

    pub fn height(&self, idx: usize) -> u64 {
        self.system
            .height(self.jobs[idx].level)
            .expect("levels are validated on construction")
    }

    /// `B_{k_i}`, the number of distinct window indices `v` for job `idx`.
    pub fn slots(&self, idx: usize) -> u64 {
        self.system
            .base()
            .partial_product(self.jobs[idx].level)
            .expect("levels are validated on construction")
    }

    pub fn max_p(&self) -> u64 {
        self.jobs.iter().map(|j| j.p).max().unwrap_or(0)
    }

    /// `sum p_i h_i`, the area the jobs occupy in the packing.
    pub fn area(&self) -> u128 {
        (0..self.len())
            .map(|i| self.jobs[i].p as u128 * self.height(i) as u128)
            .sum()
    }

    /// `ceil(sum p_i h_i / H)`, a lower bound on any feasible window width.
    pub fn area_width_bound(&self) -> u64 {
        let h = self.system.hyper() as u128;
        self.area().div_ceil(h) as u64
    }

    pub fn has_windows(&self) -> bool {
        self.jobs.iter().any(Job::has_window)
    }

    /// The same jobs in a system with window width `w`. Periods scale with
    /// `w`; absolute release/deadline times would not, so windowed instances
    /// are rejected.
    pub fn with_width(&self, w: u64) -> Result<Instance> {
        if self.has_windows() {
            return Err(Error::Validation(
                "cannot change the window width of an instance with release/deadline windows".into(),
            ));
        }
        Instance::new(self.system.with_width(w)?, self.jobs.clone())
    }
}

fn strip(e: &Error) -> String {
    match e {
        Error::Validation(msg) => msg.clone(),
        other => other.to_string(),
    }
}
