use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::model::{check_rects, Instance, JobId, Packing, Position, Rect};

use super::{ShelfMode, SolverConfig};

/// A vertical strip as wide as its first (longest) job, filled bottom-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shelf {
    pub x_offset: u64,
    pub width: u64,
    /// Job ids bottom to top.
    pub contents: Vec<JobId>,
    pub used_height: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripResult {
    pub packing: Packing,
    pub shelves: Vec<Shelf>,
    pub width_used: u64,
}

/// Shelf under construction, holding job indices.
#[derive(Debug, Clone)]
pub(super) struct OpenShelf {
    pub x_offset: u64,
    pub width: u64,
    pub members: Vec<usize>,
    pub used: u64,
}

/// Jobs by non-increasing `p`, then non-increasing height, then ascending id.
pub(super) fn placement_order(instance: &Instance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..instance.len()).collect();
    // Instance order is id order, and the sort is stable.
    order.sort_by_key(|&i| (Reverse(instance.jobs()[i].p), Reverse(instance.height(i))));
    order
}

/// Index of the shelf that accepts job `idx`, if any.
pub(super) fn fitting_shelf(
    shelves: &[OpenShelf],
    mode: ShelfMode,
    instance: &Instance,
    idx: usize,
) -> Option<usize> {
    let p = instance.jobs()[idx].p;
    let h = instance.height(idx);
    let hyper = instance.system().hyper();
    let fits = |s: &OpenShelf| s.used + h <= hyper && p <= s.width;
    match mode {
        ShelfMode::FirstFit => shelves.iter().position(fits),
        ShelfMode::NextFit => shelves.len().checked_sub(1).filter(|&last| fits(&shelves[last])),
    }
}

/// Restacks every shelf by non-increasing height (ties by id) and assigns
/// coordinates. Heights form a divisibility chain, so each prefix sum is a
/// multiple of the next height and every `y` lands on its own ruling.
pub(super) fn finalize(instance: &Instance, open: Vec<OpenShelf>) -> Result<(Packing, Vec<Shelf>)> {
    let mut packing = Packing::new();
    let mut shelves = Vec::with_capacity(open.len());
    for mut shelf in open {
        shelf.members.sort_by_key(|&i| (Reverse(instance.height(i)), i));
        let mut y = 0;
        let mut contents = Vec::with_capacity(shelf.members.len());
        for &idx in &shelf.members {
            let h = instance.height(idx);
            let id = &instance.jobs()[idx].id;
            if y % h != 0 {
                return Err(Error::Internal(format!(
                    "shelf at x = {} places `{id}` at y = {y}, not a multiple of {h}",
                    shelf.x_offset
                )));
            }
            packing.insert(id.clone(), Position { x: shelf.x_offset, y });
            contents.push(id.clone());
            y += h;
        }
        if y != shelf.used {
            return Err(Error::Internal("restacking changed a shelf's height".into()));
        }
        shelves.push(Shelf {
            x_offset: shelf.x_offset,
            width: shelf.width,
            contents,
            used_height: shelf.used,
        });
    }
    Ok((packing, shelves))
}

/// Re-validates a solver packing inside a frame of width `w`.
pub(super) fn verify(instance: &Instance, packing: &Packing, w: u64) -> Result<()> {
    let rects: Vec<Rect> = packing.rects(instance)?;
    let verdict = check_rects(instance, &rects, w);
    if !verdict.is_feasible() {
        return Err(Error::Internal(format!("solver produced an invalid packing: {verdict}")));
    }
    Ok(())
}

/// First-fit decreasing height shelf packing in a strip of height `H`, with
/// each shelf restacked so the result is ruled. Release/deadline windows are
/// not considered.
pub fn ffdh_ruled(instance: &Instance, config: &SolverConfig) -> Result<StripResult> {
    if let Some(cap) = config.width_cap {
        if let Some(job) = instance.jobs().iter().find(|j| j.p > cap) {
            return Err(Error::InfeasibleInput(format!(
                "job `{}` has p = {} above the width cap {cap}",
                job.id, job.p
            )));
        }
    }

    let mut open: Vec<OpenShelf> = Vec::new();
    let mut width_used = 0;
    for idx in placement_order(instance) {
        let h = instance.height(idx);
        match fitting_shelf(&open, config.shelf_mode, instance, idx) {
            Some(s) => {
                open[s].members.push(idx);
                open[s].used += h;
            }
            None => {
                let p = instance.jobs()[idx].p;
                open.push(OpenShelf {
                    x_offset: width_used,
                    width: p,
                    members: vec![idx],
                    used: h,
                });
                width_used += p;
            }
        }
    }

    let (packing, shelves) = finalize(instance, open)?;
    verify(instance, &packing, width_used)?;
    Ok(StripResult {
        packing,
        shelves,
        width_used,
    })
}
