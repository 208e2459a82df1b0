use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::instance::{Instance, JobId};
use super::schedule::check_coverage;
use super::verdict::{Verdict, Violation};

/// Lower-left corner of a job's rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

/// An axis-aligned rectangle `[x, x + width) x [y, y + height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x: u64,
    pub y: u64,
    pub width: u64,
    pub height: u64,
}

impl Rect {
    pub fn is_ruled(&self) -> bool {
        self.y.is_multiple_of(self.height)
    }
}

/// Rectangle positions inside the `w x H` frame.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Packing {
    positions: BTreeMap<JobId, Position>,
}

impl Packing {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: impl Into<JobId>, pos: Position) -> Option<Position> {
        self.positions.insert(id.into(), pos)
    }

    pub fn get(&self, id: &JobId) -> Option<Position> {
        self.positions.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&JobId, Position)> {
        self.positions.iter().map(|(id, &p)| (id, p))
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Rectangles in instance order. Only checks that the ids match.
    pub fn rects(&self, instance: &Instance) -> Result<Vec<Rect>> {
        let ids: Vec<&JobId> = self.positions.keys().collect();
        check_coverage(instance, &ids)?;
        Ok(self
            .positions
            .values()
            .enumerate()
            .map(|(idx, pos)| Rect {
                x: pos.x,
                y: pos.y,
                width: instance.jobs()[idx].p,
                height: instance.height(idx),
            })
            .collect())
    }
}

impl FromIterator<(JobId, Position)> for Packing {
    fn from_iter<I: IntoIterator<Item = (JobId, Position)>>(iter: I) -> Self {
        Packing {
            positions: iter.into_iter().collect(),
        }
    }
}

/// Collision test for ruled rectangles. With `h_b <= h_a`, the pair overlaps
/// iff `y_a <= y_b < y_a + h_a` and the horizontal extents overlap; the
/// symmetric vertical case is impossible because `h_b | h_a`, `h_b | y_a`
/// and `h_b | y_b`.
pub fn packing_collides(a: &Rect, b: &Rect) -> bool {
    let (tall, short) = if b.height <= a.height { (a, b) } else { (b, a) };
    tall.y <= short.y
        && short.y < tall.y + tall.height
        && short.x < tall.x + tall.width
        && tall.x < short.x + short.width
}

/// Plain half-open rectangle intersection, no ruled assumption.
pub fn general_overlap(a: &Rect, b: &Rect) -> bool {
    a.x < b.x + b.width && b.x < a.x + a.width && a.y < b.y + b.height && b.y < a.y + a.height
}

/// Checks containment in `w x H`, the ruled property `y mod h = 0` and
/// pairwise disjointness, in that order. Witnesses follow ascending id order.
pub fn packing_feasible(instance: &Instance, packing: &Packing) -> Result<Verdict> {
    let rects = packing.rects(instance)?;
    Ok(check_rects(instance, &rects, instance.system().w()))
}

/// [`packing_feasible`] against a frame of width `w` instead of the system's.
pub(crate) fn check_rects(instance: &Instance, rects: &[Rect], w: u64) -> Verdict {
    let jobs = instance.jobs();
    let hyper = instance.system().hyper();
    for (job, r) in jobs.iter().zip(rects) {
        if r.x + r.width > w || r.y + r.height > hyper {
            return Verdict::single(&job.id, Violation::OutOfBounds);
        }
        if !r.is_ruled() {
            return Verdict::single(&job.id, Violation::RuledViolation);
        }
    }
    for i in 0..rects.len() {
        for j in i + 1..rects.len() {
            if packing_collides(&rects[i], &rects[j]) {
                return Verdict::pair(&jobs[i].id, &jobs[j].id, Violation::Overlap);
            }
        }
    }
    Verdict::feasible()
}
