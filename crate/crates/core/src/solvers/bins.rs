use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{Instance, JobId, Packing};

use super::ffdh::{finalize, fitting_shelf, placement_order, verify, OpenShelf};
use super::{Shelf, ShelfMode};

/// Jobs spread over identical machines, each a `machine_width x H` ruled packing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinResult {
    pub assignments: BTreeMap<JobId, usize>,
    pub per_machine_packings: Vec<Packing>,
    pub per_machine_shelves: Vec<Vec<Shelf>>,
    pub machine_count: usize,
}

struct Machine {
    shelves: Vec<OpenShelf>,
    width: u64,
}

/// Hybrid first fit: jobs in FFDH order go to the first machine that has a
/// shelf with room (per `mode`) or enough spare width for a new shelf.
pub fn pack_bins(instance: &Instance, machine_width: u64, mode: ShelfMode) -> Result<BinResult> {
    if let Some(job) = instance.jobs().iter().find(|j| j.p > machine_width) {
        return Err(Error::InfeasibleInput(format!(
            "job `{}` has p = {} above the machine width {machine_width}",
            job.id, job.p
        )));
    }

    let mut machines: Vec<Machine> = Vec::new();
    let mut assignments = BTreeMap::new();
    for idx in placement_order(instance) {
        let p = instance.jobs()[idx].p;
        let h = instance.height(idx);
        let mut placed = None;
        for (m, machine) in machines.iter_mut().enumerate() {
            if let Some(s) = fitting_shelf(&machine.shelves, mode, instance, idx) {
                machine.shelves[s].members.push(idx);
                machine.shelves[s].used += h;
                placed = Some(m);
                break;
            }
            if machine.width + p <= machine_width {
                open_shelf(machine, idx, p, h);
                placed = Some(m);
                break;
            }
        }
        let m = placed.unwrap_or_else(|| {
            let mut machine = Machine {
                shelves: Vec::new(),
                width: 0,
            };
            open_shelf(&mut machine, idx, p, h);
            machines.push(machine);
            machines.len() - 1
        });
        assignments.insert(instance.jobs()[idx].id.clone(), m);
    }

    let mut per_machine_packings = Vec::with_capacity(machines.len());
    let mut per_machine_shelves = Vec::with_capacity(machines.len());
    for machine in machines {
        let (packing, shelves) = finalize(instance, machine.shelves)?;
        let sub = sub_instance(instance, &packing)?;
        verify(&sub, &packing, machine_width)?;
        per_machine_packings.push(packing);
        per_machine_shelves.push(shelves);
    }
    Ok(BinResult {
        machine_count: per_machine_packings.len(),
        assignments,
        per_machine_packings,
        per_machine_shelves,
    })
}

fn open_shelf(machine: &mut Machine, idx: usize, p: u64, h: u64) {
    machine.shelves.push(OpenShelf {
        x_offset: machine.width,
        width: p,
        members: vec![idx],
        used: h,
    });
    machine.width += p;
}

/// The jobs of `instance` that appear in `packing`, same system.
pub fn sub_instance(instance: &Instance, packing: &Packing) -> Result<Instance> {
    let jobs = packing
        .iter()
        .map(|(id, _)| {
            instance
                .index_of(id)
                .map(|i| instance.jobs()[i].clone())
                .ok_or_else(|| Error::Validation(format!("unknown job id `{id}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(instance.system().clone(), jobs)
}
