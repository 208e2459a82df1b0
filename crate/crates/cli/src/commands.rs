use std::fs;
use std::io::Write;
use std::path::Path;

use harmpack::generate::{random_instance, GenParams};
use harmpack::io::{Entry, InstanceFile, Provenance, Solution, SolutionFile, SolutionKind};
use harmpack::model::timeline_check;
use harmpack::solvers::{brute_force_min_width, ffdh_ruled, pack_bins, solve_with_windows, ShelfMode, SolverConfig};
use harmpack::{
    pack_to_sched, packing_feasible, sched_to_pack, schedule_feasible, window_check, Error, Instance, Verdict,
    Violation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{render as svg, Kind, Mode};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INFEASIBLE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DISAGREEMENT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Internal(_) => EXIT_DISAGREEMENT,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    let text = read(path)?;
    InstanceFile::parse(&text)
        .and_then(|f| f.to_instance())
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn load_solution(path: &Path) -> Result<SolutionFile, Failure> {
    let text = read(path)?;
    SolutionFile::parse(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::invalid(format!("stdout: {e}"))),
    }
}

fn provenance(command: &str, config: serde_json::Value) -> Provenance {
    Provenance {
        command: command.to_owned(),
        config,
        artifact_version: env!("CARGO_PKG_VERSION").to_owned(),
    }
}

/// Verdicts for every machine group of a solution.
struct Report {
    lines: Vec<String>,
    feasible: bool,
    disagreement: Option<String>,
}

impl Report {
    fn exit_code(&self) -> u8 {
        if self.disagreement.is_some() {
            EXIT_DISAGREEMENT
        } else if self.feasible {
            EXIT_OK
        } else {
            EXIT_INFEASIBLE
        }
    }
}

fn evaluate(instance: &Instance, file: &SolutionFile, oracle: bool) -> Result<Report, Failure> {
    let solution = file.resolve(instance)?;
    let machined = file.entries.values().any(|e| e.machine.is_some());
    let mut report = Report {
        lines: Vec::new(),
        feasible: true,
        disagreement: None,
    };
    // `collisions` is the residue/geometric verdict the oracle must match;
    // `verdict` additionally covers windows.
    let mut record = |g: usize, verdict: &Verdict, collisions: &Verdict, timeline: Option<Verdict>| {
        let prefix = if machined { format!("machine {g}: ") } else { String::new() };
        report.lines.push(format!("{prefix}{verdict}"));
        report.feasible &= verdict.is_feasible();
        if let Some(t) = timeline {
            if t.is_feasible() != collisions.is_feasible() && report.disagreement.is_none() {
                report.disagreement = Some(format!("{prefix}collision test says `{collisions}`, timeline says `{t}`"));
            }
        }
    };

    match solution {
        Solution::Schedule(groups) => {
            for (g, (sub, schedule)) in groups.iter().enumerate() {
                let collisions = schedule_feasible(sub, schedule)?;
                let timeline = if oracle { Some(timeline_check(sub, schedule)?) } else { None };
                let verdict = if collisions.is_feasible() {
                    window_check(sub, schedule)?
                } else {
                    collisions.clone()
                };
                record(g, &verdict, &collisions, timeline);
            }
        }
        Solution::Packing(groups) => {
            for (g, (sub, packing)) in groups.iter().enumerate() {
                let overlap = packing_feasible(sub, packing)?;
                let geometric = !matches!(
                    overlap.witness().map(|w| w.violation),
                    Some(Violation::OutOfBounds | Violation::RuledViolation)
                );
                let mut verdict = overlap.clone();
                let mut timeline = None;
                // Only legal ruled packings have a schedule to simulate.
                if geometric {
                    let schedule = pack_to_sched(sub, packing)?;
                    if oracle {
                        timeline = Some(timeline_check(sub, &schedule)?);
                    }
                    if overlap.is_feasible() {
                        verdict = window_check(sub, &schedule)?;
                    }
                }
                record(g, &verdict, &overlap, timeline);
            }
        }
    }
    Ok(report)
}

pub fn check(instance: &Path, solution: &Path, oracle: bool) -> CmdResult {
    let instance = load_instance(instance)?;
    let file = load_solution(solution)?;
    let report = evaluate(&instance, &file, oracle)?;
    for line in &report.lines {
        println!("{line}");
    }
    if let Some(msg) = &report.disagreement {
        eprintln!("oracle disagreement: {msg}");
    }
    Ok(report.exit_code())
}

pub fn transform(instance: &Path, solution: &Path, to: Option<Kind>, out: Option<&Path>) -> CmdResult {
    let instance = load_instance(instance)?;
    let file = load_solution(solution)?;
    let target = match (file.kind, to) {
        (SolutionKind::Schedule, None | Some(Kind::Packing)) => SolutionKind::Packing,
        (SolutionKind::Packing, None | Some(Kind::Schedule)) => SolutionKind::Schedule,
        (kind, Some(_)) => {
            return Err(Failure::invalid(format!("solution is already a {kind:?} solution").to_lowercase()))
        }
    };
    let machine_of = |id: &str| file.entries[id].machine;

    let mut entries = std::collections::BTreeMap::new();
    match file.resolve(&instance)? {
        Solution::Schedule(groups) => {
            for (sub, schedule) in &groups {
                for (id, pos) in sched_to_pack(sub, schedule)?.iter() {
                    let entry = Entry {
                        s: None,
                        x: Some(pos.x),
                        y: Some(pos.y),
                        machine: machine_of(&id.0),
                    };
                    entries.insert(id.0.clone(), entry);
                }
            }
        }
        Solution::Packing(groups) => {
            for (sub, packing) in &groups {
                for (id, s) in pack_to_sched(sub, packing)?.iter() {
                    let entry = Entry {
                        s: Some(s),
                        x: None,
                        y: None,
                        machine: machine_of(&id.0),
                    };
                    entries.insert(id.0.clone(), entry);
                }
            }
        }
    }
    let transformed = SolutionFile {
        schema_version: file.schema_version,
        kind: target,
        width: file.width,
        entries,
        // Transforms are lossless; the provenance still describes the solution.
        provenance: file.provenance.clone(),
    };
    write_output(out, &transformed.to_json())?;
    Ok(EXIT_OK)
}

pub fn solve(
    instance_path: &Path,
    mode: Mode,
    shelf_mode: ShelfMode,
    budget: u64,
    machine_width: Option<u64>,
    out: Option<&Path>,
) -> CmdResult {
    let instance = load_instance(instance_path)?;
    let config = SolverConfig {
        shelf_mode,
        oracle_budget: budget,
        machine_width,
        width_cap: None,
    };
    let mut config_json = serde_json::to_value(&config).expect("config serializes");
    let mode_name = format!("{mode:?}").to_lowercase();
    config_json["mode"] = serde_json::Value::String(mode_name.clone());
    let prov = provenance(&format!("solve --mode {mode_name}"), config_json);

    if matches!(mode, Mode::Ffdh | Mode::Exact | Mode::Bins) && instance.has_windows() {
        return Err(Failure::invalid(format!(
            "mode `{mode_name}` ignores release/deadline windows; use --mode windows"
        )));
    }

    let file = match mode {
        Mode::Ffdh => {
            let strip = ffdh_ruled(&instance, &config)?;
            eprintln!("width_used = {}", strip.width_used);
            eprintln!("shelves = {}", strip.shelves.len());
            SolutionFile::packing(&strip.packing, width_field(strip.width_used), prov)
        }
        Mode::Exact => {
            let bound = ffdh_ruled(&instance, &config)?.width_used.max(1);
            let best = brute_force_min_width(&instance, bound, budget)?
                .ok_or_else(|| Failure::internal(format!("no schedule up to the FFDH width {bound}")))?;
            eprintln!("w_opt = {}", best.width);
            SolutionFile::schedule(&best.schedule, width_field(best.width), prov)
        }
        Mode::Windows => match solve_with_windows(&instance, budget)? {
            Some(schedule) => {
                eprintln!("feasible");
                SolutionFile::schedule(&schedule, None, prov)
            }
            None => {
                println!("infeasible: no schedule meets every window");
                return Ok(EXIT_INFEASIBLE);
            }
        },
        Mode::Bins => {
            let width = machine_width.unwrap_or(instance.system().w());
            let bins = pack_bins(&instance, width, shelf_mode)?;
            eprintln!("machine_count = {}", bins.machine_count);
            let mut file = SolutionFile::packing(&harmpack::Packing::new(), width_field(width), prov);
            for (m, packing) in bins.per_machine_packings.iter().enumerate() {
                for (id, pos) in packing.iter() {
                    let entry = Entry {
                        s: None,
                        x: Some(pos.x),
                        y: Some(pos.y),
                        machine: Some(m),
                    };
                    file.entries.insert(id.0.clone(), entry);
                }
            }
            file
        }
    };

    let report = evaluate(&instance, &file, true)?;
    if report.exit_code() != EXIT_OK {
        return Err(Failure::internal(format!(
            "solver output failed re-validation: {}",
            report.disagreement.unwrap_or_else(|| report.lines.join("; "))
        )));
    }
    write_output(out, &file.to_json())?;
    Ok(EXIT_OK)
}

fn width_field(width: u64) -> Option<u64> {
    (width > 0).then_some(width)
}

pub fn gen(
    seed: u64,
    n: usize,
    radices: Vec<u64>,
    w: u64,
    p_max: u64,
    window_probability: f64,
    out: Option<&Path>,
) -> CmdResult {
    let params = GenParams {
        n,
        radices,
        w,
        p_max,
        window_probability,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instance = random_instance(&params, &mut rng)?;
    write_output(out, &InstanceFile::from_instance(&instance).to_json())?;
    Ok(EXIT_OK)
}

pub fn render(instance: &Path, solution: &Path, out: &Path) -> CmdResult {
    let instance = load_instance(instance)?;
    let file = load_solution(solution)?;
    let doc = match file.resolve(&instance)? {
        Solution::Packing(groups) => svg::packing_svg(&groups),
        Solution::Schedule(groups) => svg::schedule_svg(&groups),
    };
    write_output(Some(out), &doc)?;
    Ok(EXIT_OK)
}
