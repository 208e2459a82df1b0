//! JSON file formats for instances and solutions. Integers only.
//!
//! Serialization is canonical: struct fields in declaration order, maps
//! sorted by key, pretty-printed with a trailing newline.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixed_radix::BaseVector;
use crate::model::{Instance, Job, JobId, Packing, PeriodSystem, Position, Schedule};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema_version: u32,
    pub w: u64,
    pub radices: Vec<u64>,
    pub jobs: Vec<JobRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobRecord {
    pub id: String,
    pub p: u64,
    pub level: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub release: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deadline: Option<u64>,
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        let system = instance.system();
        InstanceFile {
            schema_version: SCHEMA_VERSION,
            w: system.w(),
            radices: system.base().radices().to_vec(),
            jobs: instance
                .jobs()
                .iter()
                .map(|j| JobRecord {
                    id: j.id.0.clone(),
                    p: j.p,
                    level: j.level,
                    release: j.release,
                    deadline: j.deadline,
                })
                .collect(),
        }
    }

    /// Validates into an [`Instance`]; errors name the offending field.
    pub fn to_instance(&self) -> Result<Instance> {
        check_schema(self.schema_version)?;
        let base = BaseVector::new(self.radices.clone()).map_err(|e| at("radices", e))?;
        let system = PeriodSystem::new(self.w, base).map_err(|e| at("w", e))?;
        let jobs: Vec<Job> = self
            .jobs
            .iter()
            .map(|r| {
                Job::new(r.id.as_str(), r.p, r.level).with_window(r.release, r.deadline)
            })
            .collect();
        // Validate one at a time so the error carries the array index.
        for (i, job) in jobs.iter().enumerate() {
            Instance::new(system.clone(), vec![job.clone()]).map_err(|e| at(&format!("jobs[{i}]"), e))?;
        }
        Instance::new(system, jobs).map_err(|e| at("jobs", e))
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    Schedule,
    Packing,
}

/// Either a start `s` or a position `(x, y)`, optionally on a machine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub machine: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub command: String,
    pub config: serde_json::Value,
    pub artifact_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub schema_version: u32,
    pub kind: SolutionKind,
    /// Window width the solution is laid out in, when it differs from the
    /// instance's (width minimization, machine width).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<u64>,
    pub entries: BTreeMap<String, Entry>,
    pub provenance: Provenance,
}

/// A solution resolved against its instance. Machine-less solutions form a
/// single group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Schedule(Vec<(Instance, Schedule)>),
    Packing(Vec<(Instance, Packing)>),
}

impl SolutionFile {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    pub fn schedule(schedule: &Schedule, width: Option<u64>, provenance: Provenance) -> Self {
        let entries = schedule
            .iter()
            .map(|(id, s)| {
                (
                    id.0.clone(),
                    Entry { s: Some(s), x: None, y: None, machine: None },
                )
            })
            .collect();
        SolutionFile {
            schema_version: SCHEMA_VERSION,
            kind: SolutionKind::Schedule,
            width,
            entries,
            provenance,
        }
    }

    pub fn packing(packing: &Packing, width: Option<u64>, provenance: Provenance) -> Self {
        let entries = packing
            .iter()
            .map(|(id, pos)| {
                (
                    id.0.clone(),
                    Entry { s: None, x: Some(pos.x), y: Some(pos.y), machine: None },
                )
            })
            .collect();
        SolutionFile {
            schema_version: SCHEMA_VERSION,
            kind: SolutionKind::Packing,
            width,
            entries,
            provenance,
        }
    }

    /// Instance with the solution's width applied.
    pub fn effective_instance(&self, instance: &Instance) -> Result<Instance> {
        match self.width {
            Some(w) if w != instance.system().w() => instance.with_width(w).map_err(|e| at("width", e)),
            _ => Ok(instance.clone()),
        }
    }

    /// Splits entries by machine and checks they match the entry kind. Each
    /// group is paired with the sub-instance of its jobs; together the groups
    /// must cover the instance exactly.
    pub fn resolve(&self, instance: &Instance) -> Result<Solution> {
        check_schema(self.schema_version)?;
        let instance = self.effective_instance(instance)?;
        for id in self.entries.keys() {
            if instance.index_of(&JobId(id.clone())).is_none() {
                return Err(Error::Validation(format!("entries.{id}: unknown job id")));
            }
        }
        if let Some(job) = instance.jobs().iter().find(|j| !self.entries.contains_key(&j.id.0)) {
            return Err(Error::Validation(format!("entries: missing job id `{}`", job.id)));
        }
        let machined = self.entries.values().filter(|e| e.machine.is_some()).count();
        if machined != 0 && machined != self.entries.len() {
            return Err(Error::Validation(
                "entries: `machine` must be set on every entry or on none".into(),
            ));
        }

        let mut groups: BTreeMap<usize, Vec<(&String, &Entry)>> = BTreeMap::new();
        for (id, e) in &self.entries {
            groups.entry(e.machine.unwrap_or(0)).or_default().push((id, e));
        }
        if groups.is_empty() {
            groups.insert(0, Vec::new());
        }
        let sub = |members: &[(&String, &Entry)]| -> Result<Instance> {
            let jobs = members
                .iter()
                .map(|(id, _)| instance.jobs()[instance.index_of(&JobId((*id).clone())).unwrap()].clone())
                .collect();
            Instance::new(instance.system().clone(), jobs)
        };

        match self.kind {
            SolutionKind::Schedule => {
                let mut out = Vec::new();
                for members in groups.values() {
                    let mut schedule = Schedule::new();
                    for (id, e) in members {
                        match (e.s, e.x, e.y) {
                            (Some(s), None, None) => {
                                schedule.insert(id.as_str(), s);
                            }
                            _ => {
                                return Err(Error::Validation(format!(
                                    "entries.{id}: a schedule entry needs exactly `s`"
                                )))
                            }
                        }
                    }
                    out.push((sub(members)?, schedule));
                }
                Ok(Solution::Schedule(out))
            }
            SolutionKind::Packing => {
                let mut out = Vec::new();
                for members in groups.values() {
                    let mut packing = Packing::new();
                    for (id, e) in members {
                        match (e.s, e.x, e.y) {
                            (None, Some(x), Some(y)) => {
                                packing.insert(id.as_str(), Position { x, y });
                            }
                            _ => {
                                return Err(Error::Validation(format!(
                                    "entries.{id}: a packing entry needs exactly `x` and `y`"
                                )))
                            }
                        }
                    }
                    out.push((sub(members)?, packing));
                }
                Ok(Solution::Packing(out))
            }
        }
    }
}

fn check_schema(version: u32) -> Result<()> {
    if version != SCHEMA_VERSION {
        return Err(Error::Validation(format!(
            "schema_version: unsupported version {version} (expected {SCHEMA_VERSION})"
        )));
    }
    Ok(())
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Validation(msg) => Error::Validation(format!("{path}: {msg}")),
        other => Error::Validation(format!("{path}: {other}")),
    }
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Validation(format!(
            "{path} (line {}, column {}): {inner}",
            inner.line(),
            inner.column()
        ))
    })
}

fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("file types always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
  "schema_version": 1,
  "w": 2,
  "radices": [2, 2],
  "jobs": [
    {"id": "j", "p": 1, "level": 2, "release": 2, "deadline": 4},
    {"id": "i", "p": 1, "level": 1}
  ]
}"#;

    #[test]
    fn instance_round_trip_is_canonical() {
        let file = InstanceFile::parse(SAMPLE).unwrap();
        let inst = file.to_instance().unwrap();
        let canon = InstanceFile::from_instance(&inst).to_json();
        let again = InstanceFile::from_instance(&InstanceFile::parse(&canon).unwrap().to_instance().unwrap()).to_json();
        assert_eq!(canon, again);
        // jobs come out sorted by id
        assert!(canon.find("\"i\"").unwrap() < canon.find("\"j\"").unwrap());
    }

    #[test]
    fn errors_name_the_field() {
        let bad_type = SAMPLE.replace("\"p\": 1, \"level\": 2", "\"p\": \"one\", \"level\": 2");
        let msg = InstanceFile::parse(&bad_type).unwrap_err().to_string();
        assert!(msg.contains("jobs[0].p"), "{msg}");
        assert!(msg.contains("line 6"), "{msg}");

        let bad_value = SAMPLE.replace("\"deadline\": 4", "\"deadline\": 3");
        let msg = InstanceFile::parse(&bad_value).unwrap().to_instance().unwrap_err().to_string();
        assert!(msg.contains("jobs[0]") && msg.contains("deadline"), "{msg}");

        let msg = InstanceFile::parse("{\"schema_version\": 1,").unwrap_err().to_string();
        assert!(msg.contains("line"), "{msg}");

        let unknown = SAMPLE.replace("\"w\": 2", "\"w\": 2, \"extra\": 0");
        assert!(InstanceFile::parse(&unknown).unwrap_err().to_string().contains("extra"));
    }

    #[test]
    fn solution_resolution() {
        let inst = InstanceFile::parse(SAMPLE).unwrap().to_instance().unwrap();
        let prov = Provenance {
            command: "test".into(),
            config: serde_json::json!({}),
            artifact_version: "0".into(),
        };
        let sched = Schedule::from_starts(&inst, &[0, 2]);
        let file = SolutionFile::schedule(&sched, None, prov.clone());
        let parsed = SolutionFile::parse(&file.to_json()).unwrap();
        assert_eq!(parsed, file);
        match parsed.resolve(&inst).unwrap() {
            Solution::Schedule(groups) => assert_eq!(groups, vec![(inst.clone(), sched)]),
            other => panic!("{other:?}"),
        }

        let mut missing = file.clone();
        missing.entries.remove("i");
        assert!(missing.resolve(&inst).unwrap_err().to_string().contains("missing"));

        let mut wrong_kind = file;
        wrong_kind.kind = SolutionKind::Packing;
        assert!(wrong_kind.resolve(&inst).is_err());
    }
}
